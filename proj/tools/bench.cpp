// Times the OpenMP table-driven counting engine against the single-threaded
// generic-arithmetic reference on one candidate pencil, over F_p and F_{p^2},
// and insists on identical totals. Usage: bench [prime] (default 31).

#include <omp.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "artin1/certify.hpp"
#include "artin1/counting.hpp"
#include "artin1/curve.hpp"
#include "artin1/errors.hpp"
#include "artin1/pencil.hpp"

using namespace artin1;

namespace {

template <typename F>
double time_once(F&& fn, int64_t& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  uint64_t p = 31;
  if (argc > 1) p = std::strtoull(argv[1], nullptr, 10);
  try {
    Curve E = find_supersingular(p);
    Pencil P = candidate_models(E)[0];
    std::printf("benchmark: first candidate pencil at p = %llu, %d OpenMP worker(s)\n",
                (unsigned long long)p, omp_get_max_threads());
    bool ok = true;
    for (int k = 1; k <= 2; ++k) {
      int64_t n_par = 0, n_ser = 0;
      double t_par = time_once([&] { return surface_count(P, k); }, n_par);
      double t_ser = time_once([&] { return surface_count_serial(P, k); }, n_ser);
      std::printf("  k=%d: parallel %lld in %.4f s | serial reference %lld in %.4f s | "
                  "speedup %.2fx | %s\n",
                  k, (long long)n_par, t_par, (long long)n_ser, t_ser,
                  t_par > 0 ? t_ser / t_par : 0.0, n_par == n_ser ? "match" : "MISMATCH");
      ok = ok && n_par == n_ser;
    }
    if (!ok) {
      std::fprintf(stderr, "engines disagree\n");
      return 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
