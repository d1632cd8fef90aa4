#include "artin1/certify.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "artin1/counting.hpp"
#include "artin1/curve.hpp"
#include "artin1/errors.hpp"
#include "artin1/field.hpp"

namespace artin1 {

namespace {

uint64_t modpow_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

}  // namespace

EigenSolve infer_eigenvalues(uint64_t p, int64_t n1, int64_t n2, bool require_q2) {
  EigenSolve s;
  const int64_t pp = int64_t(p);
  s.t1 = n1 - 1 - pp * pp;
  s.t2 = require_q2 ? n2 - 1 - pp * pp * pp * pp : 0;
  if (s.t1 % pp != 0) return s;
  const int64_t m = s.t1 / pp;  // plus_p - minus_p
  if (m % 2 != 0) return s;
  if (m < -22 || m > 22) return s;
  if (require_q2 && s.t2 != 22 * pp * pp) return s;
  s.plus_p = int(11 + m / 2);
  s.minus_p = 22 - s.plus_p;
  s.consistent = true;
  return s;
}

Certificate certify_model(const Pencil& P, bool skip_q2) {
  const uint64_t p = P.F.p();
  auto fibers = classify_fibers(P);
  euler_audit(fibers);

  Certificate c;
  c.p = p;
  c.prov = P.prov;
  c.a4_coeffs = P.a4.coeffs();
  c.a6_coeffs = P.a6.coeffs();
  for (const FiberDatum& f : fibers) {
    FiberSummary s;
    s.place = place_string(f.place);
    s.type = fiber_type_name(f.type);
    s.euler = f.euler;
    switch (f.type) {
      case FiberType::I1:
      case FiberType::I2:
        s.split = f.split ? 1 : 0;
        break;
      case FiberType::IV:
        s.split = f.iv_all_rational ? 1 : 0;
        break;
      default:
        s.split = -1;
        break;
    }
    c.fibers.push_back(s);
  }

  c.n1 = surface_count(P, 1);
  c.n2 = skip_q2 ? 0 : surface_count(P, 2);
  EigenSolve es = infer_eigenvalues(p, c.n1, c.n2, !skip_q2);
  c.t1 = es.t1;
  c.t2 = es.t2;
  c.plus_p = es.plus_p;
  c.minus_p = es.minus_p;
  if (es.consistent) {
    c.verdict = es.plus_p == 21 ? Verdict::Certified21 : Verdict::CertifiedOther;
    c.rho_fp = es.plus_p;
    c.rho_fp2 = (!skip_q2 && c.t2 == 22 * int64_t(p) * int64_t(p)) ? 22 : 0;
  } else {
    c.verdict = Verdict::Inconsistent;
    c.rho_fp = 0;
    c.rho_fp2 = 0;
  }
  c.artin_invariant = "1 (cited)";
  return c;
}

TheoremRun prove_rank21(uint64_t p, bool all_candidates, bool skip_q2) {
  Curve E = find_supersingular(p);
  TheoremRun run;
  run.p = p;
  for (const Pencil& P : candidate_models(E)) {
    Certificate c = certify_model(P, skip_q2);
    run.log.push_back(c);
    if (c.verdict == Verdict::Certified21 && !run.certified.has_value()) {
      run.certified = c;
      run.falsified = false;
      if (!all_candidates) break;
    }
  }
  return run;
}

KummerReport verify_kummer_ranks(uint64_t p) {
  KummerReport r;
  r.p = p;
  const int64_t pp = int64_t(p);
  r.expected1 = 1 + 18 * pp + pp * pp;
  r.expected2 = 1 + 22 * pp * pp + pp * pp * pp * pp;
  Field F = Field::make(p, 1);
  if (p % 4 != 3) {
    r.applicable = false;
    r.pass = true;
    r.note =
        "not applicable: for p = 1 (mod 4) a trace-zero curve has p + 1 = 2 "
        "(mod 4) points, so its 2-torsion is never fully rational";
    return r;
  }
  Curve E = curve_make(F, F.element(p - 1), F.zero());  // y^2 = x^3 - x
  r.curve_a = uint32_t(p - 1);
  r.curve_b = 0;
  KummerModel K = kummer_model(E, E);
  r.n1 = kummer_count(K, 1);
  r.n2 = kummer_count(K, 2);
  r.applicable = true;
  r.pass = r.n1 == r.expected1 && r.n2 == r.expected2;
  return r;
}

void kummer_report_check(uint64_t p, int64_t n1, int64_t n2) {
  const int64_t pp = int64_t(p);
  const int64_t e1 = 1 + 18 * pp + pp * pp;
  const int64_t e2 = 1 + 22 * pp * pp + pp * pp * pp * pp;
  if (n1 != e1)
    fail(Errc::ReportedMismatch, "product-surface count over F_p is " + std::to_string(n1) +
                                     ", expected " + std::to_string(e1));
  if (n2 != e2)
    fail(Errc::ReportedMismatch, "product-surface count over F_{p^2} is " +
                                     std::to_string(n2) + ", expected " + std::to_string(e2));
}

SplitBehavior inert_check(int64_t d, uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    fail(Errc::BadInput, "inert_check requires an odd prime");
  int64_t m = d % int64_t(p);
  if (m < 0) m += int64_t(p);
  if (m == 0) return SplitBehavior::Ramified;
  return modpow_u64(uint64_t(m), (p - 1) / 2, p) == 1 ? SplitBehavior::Split
                                                      : SplitBehavior::Inert;
}

std::vector<CrosscheckRow> lemma_crosscheck(int64_t d, uint64_t p_max) {
  if (d != -3 && d != -4)
    fail(Errc::BadInput, "crosscheck covers the discriminants -3 and -4 only");
  std::vector<CrosscheckRow> rows;
  for (uint64_t p = 5; p <= p_max; ++p) {
    if (!is_prime_u64(p)) continue;
    if (d % int64_t(p) == 0) continue;
    Field F = Field::make(p, 1);
    Curve E = d == -3 ? curve_make(F, F.zero(), F.one())                // y^2 = x^3 + 1
                      : curve_make(F, F.element(p - 1), F.zero());      // y^2 = x^3 - x
    CrosscheckRow r;
    r.p = p;
    r.trace_zero = trace(E) == 0;
    r.behavior = inert_check(d, p);
    r.agree = r.trace_zero == (r.behavior == SplitBehavior::Inert);
    rows.push_back(r);
  }
  return rows;
}

void assert_crosscheck(const std::vector<CrosscheckRow>& rows) {
  for (const CrosscheckRow& r : rows) {
    if (!r.agree)
      fail(Errc::CrosscheckFailed,
           "p = " + std::to_string(r.p) + ": trace-zero and inertness disagree");
  }
}

std::vector<SweepRow> sweep(uint64_t p_min, uint64_t p_max, bool skip_q2) {
  if (p_max > 200) fail(Errc::BadInput, "sweep covers primes up to 200 only");
  std::vector<SweepRow> rows;
  for (uint64_t p = p_min < 2 ? 2 : p_min; p <= p_max; ++p) {
    if (!is_prime_u64(p)) continue;
    SweepRow r;
    r.p = p;
    if (p == 2 || p == 3) {
      r.supported = false;
    } else {
      r.supported = true;
      r.run = prove_rank21(p, /*all_candidates=*/false, skip_q2);
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace artin1
