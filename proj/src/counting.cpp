#include "artin1/counting.hpp"

#include <omp.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "artin1/curve.hpp"
#include "artin1/kodaira.hpp"
#include "artin1/poly.hpp"

namespace artin1 {

int64_t char_fiber_count(const Field& F, const Fe& a, const Fe& b) {
  Fe aa = F.embed(a);
  Fe bb = F.embed(b);
  int64_t s = int64_t(F.q()) + 1;
  for (uint64_t i = 0; i < F.q(); ++i) {
    Fe x = F.from_index(i);
    s += F.chi(F.add(F.mul(F.add(F.mul(x, x), aa), x), bb));
  }
  return s;
}

int64_t naive_fiber_count(const Field& F, const Fe& a, const Fe& b) {
  if (F.q() > 2500) fail(Errc::BadInput, "naive enumeration is capped at q <= 2500");
  Fe aa = F.embed(a);
  Fe bb = F.embed(b);
  int64_t n = 1;  // the point at infinity
  for (uint64_t i = 0; i < F.q(); ++i) {
    Fe x = F.from_index(i);
    Fe rhs = F.add(F.mul(F.add(F.mul(x, x), aa), x), bb);
    for (uint64_t j = 0; j < F.q(); ++j) {
      Fe y = F.from_index(j);
      if (F.mul(y, y) == rhs) ++n;
    }
  }
  return n;
}

namespace {

// Which parameter values carry singular fibers, and what those fibers
// contribute. Degree-2 places are invisible over F_p; over F_{p^2} both
// conjugate parameters carry isomorphic fibers, so the place contributes
// twice its single-fiber count.
struct CorrectionLayout {
  std::vector<uint8_t> skip;  // indexed by parameter index in F_{p^k}
  int64_t finite = 0;
  bool inf_singular = false;
  int64_t inf = 0;
};

CorrectionLayout corrections_for(const std::vector<FiberDatum>& fibers, uint32_t p,
                                 int k, uint64_t q) {
  CorrectionLayout L;
  L.skip.assign(q, 0);
  for (const FiberDatum& f : fibers) {
    if (f.place.at_infinity) {
      L.inf_singular = true;
      L.inf = fiber_point_count(f, q);
      continue;
    }
    if (f.place.degree == 1) {
      L.skip[f.place.root.c0] = 1;
      L.finite += fiber_point_count(f, q);
    } else if (k == 2) {
      uint64_t i1 = uint64_t(f.place.root.c0) + uint64_t(p) * f.place.root.c1;
      uint64_t i2 = uint64_t(f.place.root.c0) + uint64_t(p) * (p - f.place.root.c1);
      L.skip[i1] = 1;
      L.skip[i2] = 1;
      L.finite += 2 * fiber_point_count(f, q);
    }
  }
  return L;
}

uint32_t horner_modp(const std::vector<uint32_t>& c, uint32_t t, uint32_t p) {
  uint64_t r = 0;
  for (size_t i = c.size(); i-- > 0;) r = (r * t + c[i]) % p;
  return static_cast<uint32_t>(r);
}

// Good-fiber total over F_p via the character table.
int64_t good_sum_table_k1(const Pencil& P, const Field& Fq,
                          const std::vector<uint8_t>& skip) {
  const uint32_t p = Fq.p();
  const int8_t* chi = Fq.chi_table();
  const std::vector<uint32_t> c4 = P.a4.coeffs();
  const std::vector<uint32_t> c6 = P.a6.coeffs();
  int64_t good = 0;
#pragma omp parallel for schedule(static) reduction(+ : good)
  for (int64_t ti = 0; ti < int64_t(p); ++ti) {
    if (skip[size_t(ti)]) continue;
    uint32_t t = static_cast<uint32_t>(ti);
    uint64_t al = horner_modp(c4, t, p);
    uint64_t be = horner_modp(c6, t, p);
    int64_t s = int64_t(p) + 1;
    for (uint64_t x = 0; x < p; ++x) {
      uint64_t v = (x * x % p * x + al * x + be) % p;
      s += chi[v];
    }
    good += s;
  }
  return good;
}

// Good-fiber total over F_{p^2} via the character table. For x = x0 + x1 u
// (u^2 = n) the cubic splits into two F_p-polynomials in x0 with coefficients
// depending only on x1 and the fiber equation, so the inner loop is pure
// modular arithmetic plus one table lookup.
int64_t good_sum_table_k2(const Pencil& P, const Field& Fq,
                          const std::vector<uint8_t>& skip) {
  const uint32_t p = Fq.p();
  const uint64_t q = Fq.q();
  const uint64_t n = Fq.nonresidue();
  const int8_t* chi = Fq.chi_table();
  int64_t good = 0;
#pragma omp parallel for schedule(static) reduction(+ : good)
  for (int64_t i = 0; i < int64_t(q); ++i) {
    if (skip[size_t(i)]) continue;
    Fe t = Fq.from_index(uint64_t(i));
    Fe alpha = P.a4.eval(Fq, t);
    Fe beta = P.a6.eval(Fq, t);
    const uint64_t a0 = alpha.c0, a1 = alpha.c1, b0 = beta.c0, b1 = beta.c1;
    int64_t s = int64_t(q) + 1;
    for (uint64_t x1 = 0; x1 < p; ++x1) {
      const uint64_t A = (3 * n % p * x1 % p * x1 + a0) % p;
      const uint64_t B = (n * a1 % p * x1 + b0) % p;
      const uint64_t C = 3 * x1 % p;
      const uint64_t D = a1;
      const uint64_t E = (n * x1 % p * x1 % p * x1 + a0 * x1 + b1) % p;
      for (uint64_t x0 = 0; x0 < p; ++x0) {
        uint64_t r0 = (x0 * x0 % p * x0 + A * x0 + B) % p;
        uint64_t r1 = (C * x0 % p * x0 + D * x0 + E) % p;
        s += chi[r0 + p * r1];
      }
    }
    good += s;
  }
  return good;
}

// Generic good-fiber total: field-element arithmetic, any chi mode, any k.
int64_t good_sum_generic(const Pencil& P, const Field& Fq,
                         const std::vector<uint8_t>& skip) {
  int64_t good = 0;
  for (uint64_t i = 0; i < Fq.q(); ++i) {
    if (skip[i]) continue;
    Fe t = Fq.from_index(i);
    auto [a, b] = fiber_equation_at(P, Fq, t);
    good += char_fiber_count(Fq, a, b);
  }
  return good;
}

int64_t infinity_term(const Pencil& P, const Field& Fq, const CorrectionLayout& L) {
  if (L.inf_singular) return L.inf;
  auto [a4i, a6i] = infinity_chart(P);
  return char_fiber_count(Fq, a4i.eval(Fq, Fq.zero()), a6i.eval(Fq, Fq.zero()));
}

void require_k(int k) {
  if (k != 1 && k != 2)
    fail(Errc::BadInput, "surface counts are available over F_p and F_{p^2} only");
}

}  // namespace

int64_t surface_count(const Pencil& P, int k) {
  require_k(k);
  const uint32_t p = P.F.p();
  Field Fq = Field::make(p, k);
  auto fibers = classify_fibers(P);
  CorrectionLayout L = corrections_for(fibers, p, k, Fq.q());
  int64_t total = L.finite + infinity_term(P, Fq, L);
  if (Fq.chi_tabled())
    total += k == 1 ? good_sum_table_k1(P, Fq, L.skip) : good_sum_table_k2(P, Fq, L.skip);
  else
    total += good_sum_generic(P, Fq, L.skip);
  return total;
}

int64_t surface_count_serial(const Pencil& P, int k) {
  require_k(k);
  const uint32_t p = P.F.p();
  Field Fq = Field::make(p, k, Field::ChiMode::ForceFormula);
  auto fibers = classify_fibers(P);
  CorrectionLayout L = corrections_for(fibers, p, k, Fq.q());
  return L.finite + infinity_term(P, Fq, L) + good_sum_generic(P, Fq, L.skip);
}

int64_t kummer_count(const KummerModel& K, int k) {
  require_k(k);
  const uint32_t p = K.F.p();
  Field Fq = Field::make(p, k);
  const uint64_t q = Fq.q();
  Curve E2 = curve_make(K.F, K.F.element(K.g.coeff(1)), K.F.element(K.g.coeff(0)));
  const int64_t ak = trace_lift(trace(E2), p, k);

  Pencil P = kummer_pi0_pencil(K);
  auto fibers = classify_fibers(P);
  CorrectionLayout L = corrections_for(fibers, p, k, q);
  int64_t total = L.finite + infinity_term(P, Fq, L);
  // Good fibers are quadratic twists of the second factor by f(t); their
  // counts follow from its trace without any character sum over x.
  for (uint64_t i = 0; i < q; ++i) {
    if (L.skip[i]) continue;
    Fe t = Fq.from_index(i);
    total += int64_t(q) + 1 - Fq.chi(K.f.eval(Fq, t)) * ak;
  }
  return total;
}

void selftest_rational_surface(uint64_t q) {
  uint64_t p = 0;
  int k = 0;
  if (is_prime_u64(q)) {
    p = q;
    k = 1;
  } else {
    uint64_t r = static_cast<uint64_t>(std::llround(std::sqrt(double(q))));
    while (r > 1 && r * r > q) --r;
    while ((r + 1) * (r + 1) <= q) ++r;
    if (r * r == q && is_prime_u64(r)) {
      p = r;
      k = 2;
    } else {
      fail(Errc::BadInput, "selftest field size must be a prime p or p^2");
    }
  }
  Field Fq = Field::make(p, k);
  int64_t total = 0;
  for (uint64_t i = 0; i < q; ++i)
    total += char_fiber_count(Fq, Fq.zero(), Fq.from_index(i));  // y^2 = x^3 + t
  total += 9 * int64_t(q) + 1;  // the II* fiber at t = infinity
  int64_t expected = int64_t(q) * int64_t(q) + 10 * int64_t(q) + 1;
  if (total != expected)
    fail(Errc::SelftestFailed, "y^2 = x^3 + t over F_" + std::to_string(q) + " counted " +
                                   std::to_string(total) + ", expected " +
                                   std::to_string(expected));
}

}  // namespace artin1
