// Command-line front end: certify / sweep / kummer / inert / selftest.
//
// Exit codes: 0 success (or --help); 1 falsified claim, failed check, or
// internal error; 2 usage error (non-prime, out-of-range prime, bad flags);
// 3 unsupported characteristic (p = 2 or 3).

#include <omp.h>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "artin1/certify.hpp"
#include "artin1/counting.hpp"
#include "artin1/curve.hpp"
#include "artin1/emit.hpp"
#include "artin1/errors.hpp"
#include "artin1/field.hpp"
#include "artin1/pencil.hpp"

using namespace artin1;
using nlohmann::ordered_json;

namespace {

constexpr uint64_t kMaxPrime = 200;

void require_small_prime(uint64_t p) {
  if (p > kMaxPrime)
    fail(Errc::BadInput, "primes above " + std::to_string(kMaxPrime) + " are not supported");
}

// prove_rank21 with a per-candidate certificate cache. An unreadable cache
// entry is recomputed; entries are stored as the canonical JSON rendering.
TheoremRun run_prime(uint64_t p, bool all_candidates, bool skip_q2,
                     const std::string& cache_dir) {
  const bool use_cache = !cache_dir.empty() && !skip_q2;
  if (!use_cache) return prove_rank21(p, all_candidates, skip_q2);

  Curve E = find_supersingular(p);
  TheoremRun run;
  run.p = p;
  for (const Pencil& P : candidate_models(E)) {
    const std::string key = cache_key(p, P.prov);
    std::optional<Certificate> c;
    if (auto bytes = cache_load(cache_dir, key)) {
      try {
        c = cert_from_json(nlohmann::json::parse(*bytes));
      } catch (const std::exception&) {
        c.reset();
      }
    }
    if (!c.has_value()) {
      c = certify_model(P, skip_q2);
      cache_store(cache_dir, key, cert_json_text(*c));
    }
    run.log.push_back(*c);
    if (c->verdict == Verdict::Certified21 && !run.certified.has_value()) {
      run.certified = *c;
      run.falsified = false;
      if (!all_candidates) break;
    }
  }
  return run;
}

void print_certificates(const std::vector<Certificate>& certs, const std::string& format) {
  if (format == "json") {
    if (certs.size() == 1) {
      std::cout << cert_json_text(certs[0]);
    } else {
      ordered_json arr = ordered_json::array();
      for (const Certificate& c : certs) arr.push_back(cert_to_json(c));
      std::cout << arr.dump(2) << "\n";
    }
  } else if (format == "csv") {
    std::cout << csv_header() << "\n";
    for (const Certificate& c : certs) std::cout << cert_csv_row(c) << "\n";
  } else {
    for (size_t i = 0; i < certs.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << cert_text(certs[i]);
    }
  }
}

int cmd_certify(uint64_t p, bool all_candidates, bool skip_q2, const std::string& format,
                const std::string& cache_dir) {
  require_small_prime(p);
  TheoremRun run = run_prime(p, all_candidates, skip_q2, cache_dir);
  if (all_candidates || !run.certified.has_value())
    print_certificates(run.log, format);
  else
    print_certificates({*run.certified}, format);
  return run.certified.has_value() ? 0 : 1;
}

int cmd_sweep(uint64_t p_min, uint64_t p_max, bool skip_q2, const std::string& format,
              const std::string& cache_dir) {
  if (p_max > kMaxPrime)
    fail(Errc::BadInput, "sweep covers primes up to " + std::to_string(kMaxPrime) + " only");
  std::vector<SweepRow> rows;
  for (uint64_t p = p_min < 2 ? 2 : p_min; p <= p_max; ++p) {
    if (!is_prime_u64(p)) continue;
    SweepRow r;
    r.p = p;
    if (p == 2 || p == 3) {
      r.supported = false;
    } else {
      r.supported = true;
      r.run = run_prime(p, /*all_candidates=*/false, skip_q2, cache_dir);
    }
    rows.push_back(r);
  }

  bool all_certified = true;
  for (const SweepRow& r : rows)
    if (r.supported && (!r.run.has_value() || !r.run->certified.has_value()))
      all_certified = false;

  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const SweepRow& r : rows) {
      ordered_json row;
      row["p"] = r.p;
      row["supported"] = r.supported;
      if (r.supported && r.run.has_value() && r.run->certified.has_value())
        row["certified"] = cert_to_json(*r.run->certified);
      else
        row["certified"] = nullptr;
      arr.push_back(row);
    }
    std::cout << arr.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << csv_header() << "\n";
    for (const SweepRow& r : rows)
      if (r.supported && r.run.has_value() && r.run->certified.has_value())
        std::cout << cert_csv_row(*r.run->certified) << "\n";
  } else {
    for (const SweepRow& r : rows) {
      if (!r.supported) {
        std::cout << "p=" << r.p << ": unsupported characteristic\n";
      } else if (r.run.has_value() && r.run->certified.has_value()) {
        const Certificate& c = *r.run->certified;
        std::cout << "p=" << r.p << ": " << verdict_string(c) << " (N1 = " << c.n1
                  << ", N2 = " << c.n2 << ")\n";
      } else {
        std::cout << "p=" << r.p << ": FALSIFIED (no candidate certified)\n";
      }
    }
  }
  return all_certified ? 0 : 1;
}

int cmd_kummer(uint64_t p, const std::string& format) {
  require_small_prime(p);
  KummerReport r = verify_kummer_ranks(p);
  if (format == "json") {
    ordered_json j;
    j["p"] = r.p;
    j["applicable"] = r.applicable;
    if (r.applicable) {
      ordered_json curve;
      curve["a"] = r.curve_a;
      curve["b"] = r.curve_b;
      j["curve"] = curve;
    } else {
      j["curve"] = nullptr;
    }
    j["N1"] = r.n1;
    j["N2"] = r.n2;
    j["expected1"] = r.expected1;
    j["expected2"] = r.expected2;
    j["pass"] = r.pass;
    j["note"] = r.note;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "p = " << r.p << "\n";
    if (!r.applicable) {
      std::cout << r.note << "\n";
    } else {
      std::cout << "curve: y^2 = x^3 + " << r.curve_a << "x + " << r.curve_b << "\n";
      std::cout << "N1 = " << r.n1 << " (expected " << r.expected1 << ")\n";
      std::cout << "N2 = " << r.n2 << " (expected " << r.expected2 << ")\n";
    }
    std::cout << "result: " << (r.pass ? "pass" : "FAIL") << "\n";
  }
  return r.pass ? 0 : 1;
}

const char* behavior_name(SplitBehavior b) {
  switch (b) {
    case SplitBehavior::Inert:
      return "inert";
    case SplitBehavior::Split:
      return "split";
    case SplitBehavior::Ramified:
      return "ramified";
  }
  return "ramified";
}

int cmd_inert(int64_t disc, uint64_t p_max, const std::string& format) {
  auto rows = lemma_crosscheck(disc, p_max);
  bool all_agree = true;
  for (const CrosscheckRow& r : rows) all_agree = all_agree && r.agree;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const CrosscheckRow& r : rows) {
      ordered_json row;
      row["p"] = r.p;
      row["trace_zero"] = r.trace_zero;
      row["behavior"] = behavior_name(r.behavior);
      row["agree"] = r.agree;
      arr.push_back(row);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const CrosscheckRow& r : rows) {
      std::cout << "p=" << r.p << "  trace_zero=" << (r.trace_zero ? "yes" : "no ")
                << "  " << behavior_name(r.behavior)
                << (r.agree ? "" : "  DISAGREE") << "\n";
    }
    std::cout << "discriminant " << disc << ": "
              << (all_agree ? "all rows agree" : "DISAGREEMENT FOUND") << "\n";
  }
  return all_agree ? 0 : 1;
}

int cmd_selftest(const std::string& format) {
  const std::vector<uint64_t> sizes = {5, 7, 11, 13, 25, 49, 121};
  for (uint64_t q : sizes) selftest_rational_surface(q);  // throws on failure
  if (format == "json") {
    ordered_json j;
    j["fields"] = sizes;
    j["result"] = "pass";
    std::cout << j.dump(2) << "\n";
  } else {
    for (uint64_t q : sizes) std::cout << "q=" << q << ": pass\n";
    std::cout << "selftest: pass\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructive Picard-rank certificates for the double-II* pencil family"};
  app.require_subcommand(1);

  std::string format = "text";
  int threads = 0;
  std::string cache_dir;
  bool skip_q2 = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--threads", threads, "OpenMP worker count (0 = library default)");
    sub->add_option("--cache", cache_dir,
                    "certificate cache directory (default: $ARTIN1_CACHE)");
    sub->add_flag("--skip-q2", skip_q2, "skip the F_{p^2} count (debug; disables the cache)");
  };

  uint64_t prime = 0;
  bool all_candidates = false;
  CLI::App* certify = app.add_subcommand("certify", "certify one prime");
  certify->add_option("--prime", prime, "prime p (5 <= p <= 200)")->required();
  certify->add_flag("--all-candidates", all_candidates, "report the whole candidate family");
  add_common(certify);

  uint64_t sweep_min = 5, sweep_max = 47;
  CLI::App* sweepc = app.add_subcommand("sweep", "certify every prime in a range");
  sweepc->add_option("--min", sweep_min, "lower end of the prime range");
  sweepc->add_option("--max", sweep_max, "upper end of the prime range (<= 200)");
  add_common(sweepc);

  uint64_t kummer_p = 0;
  CLI::App* kummer = app.add_subcommand("kummer", "product-surface consequence check");
  kummer->add_option("--prime", kummer_p, "prime p")->required();
  add_common(kummer);

  int64_t disc = -3;
  uint64_t inert_max = 100;
  CLI::App* inert = app.add_subcommand("inert", "trace zero iff inert, for d = -3 or -4");
  inert->add_option("--disc", disc, "discriminant (-3 or -4)");
  inert->add_option("--max", inert_max, "largest prime to test");
  add_common(inert);

  CLI::App* selftest = app.add_subcommand("selftest", "rational-surface counting selftest");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cache_dir.empty()) {
    if (const char* env = std::getenv("ARTIN1_CACHE")) cache_dir = env;
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (certify->parsed())
      return cmd_certify(prime, all_candidates, skip_q2, format, cache_dir);
    if (sweepc->parsed())
      return cmd_sweep(sweep_min, sweep_max, skip_q2, format, cache_dir);
    if (kummer->parsed()) return cmd_kummer(kummer_p, format);
    if (inert->parsed()) return cmd_inert(disc, inert_max, format);
    if (selftest->parsed()) return cmd_selftest(format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::NonPrime:
      case Errc::BadInput:
        return 2;
      case Errc::UnsupportedCharacteristic:
        return 3;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
