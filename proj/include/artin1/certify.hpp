#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin1/kodaira.hpp"
#include "artin1/pencil.hpp"

namespace artin1 {

enum class Verdict { Certified21, CertifiedOther, Inconsistent };

// Solves for the multiplicities (a, b) of Frobenius eigenvalues +p, -p on H^2
// from the two counts: a + b = 22, a - b = t1/p, requiring p | t1, t1/p even,
// |t1| <= 22p, and (when the F_{p^2} count is present) t2 = 22 p^2.
struct EigenSolve {
  bool consistent = false;
  int plus_p = 0;
  int minus_p = 0;
  int64_t t1 = 0;
  int64_t t2 = 0;
};
EigenSolve infer_eigenvalues(uint64_t p, int64_t n1, int64_t n2, bool require_q2 = true);

// Serialization-ready view of one singular fiber.
struct FiberSummary {
  std::string place;
  std::string type;
  int euler = 0;
  int split = -1;  // -1 not applicable, 0 false, 1 true

  friend bool operator==(const FiberSummary&, const FiberSummary&) = default;
};

struct Certificate {
  uint64_t p = 0;
  PencilProvenance prov;
  std::vector<uint32_t> a4_coeffs;  // ascending, normalized
  std::vector<uint32_t> a6_coeffs;
  std::vector<FiberSummary> fibers;
  int64_t n1 = 0;
  int64_t n2 = 0;
  int64_t t1 = 0;
  int64_t t2 = 0;
  int plus_p = 0;
  int minus_p = 0;
  int rho_fp = 0;
  int rho_fp2 = 0;
  std::string artin_invariant;  // "1 (cited)" — carried metadata, not re-derived
  Verdict verdict = Verdict::Inconsistent;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Classifies, audits Euler numbers, counts over F_p and F_{p^2}, and solves
// the eigenvalue multiplicities. CERTIFIED_21 iff the +p multiplicity is 21
// (N1 = 1 + 20p + p^2). skip_q2 omits the F_{p^2} count (debug; n2/t2/rho_fp2
// are reported as 0 and the t2 consistency check is waived).
Certificate certify_model(const Pencil& P, bool skip_q2 = false);

// Full pipeline for one prime: find a trace-zero curve, enumerate the twist
// family, certify candidates in order. Stops at the first CERTIFIED_21 unless
// all_candidates is set. falsified = no candidate certified.
struct TheoremRun {
  uint64_t p = 0;
  std::optional<Certificate> certified;
  std::vector<Certificate> log;
  bool falsified = true;
};
TheoremRun prove_rank21(uint64_t p, bool all_candidates = false, bool skip_q2 = false);

// Kummer consequence check: for p = 3 (mod 4), Km(E x E) with E: y^2 = x^3 - x
// (trace zero, all 2-torsion rational) must count 1 + 18p + p^2 over F_p and
// 1 + 22p^2 + p^4 over F_{p^2}. For p = 1 (mod 4) no trace-zero curve over F_p
// has full rational 2-torsion (p + 1 = 2 mod 4), so the check is reported as
// not applicable.
struct KummerReport {
  uint64_t p = 0;
  bool applicable = false;
  uint32_t curve_a = 0;
  uint32_t curve_b = 0;
  int64_t n1 = 0;
  int64_t n2 = 0;
  int64_t expected1 = 0;
  int64_t expected2 = 0;
  bool pass = false;
  std::string note;
};
KummerReport verify_kummer_ranks(uint64_t p);

// Throws ReportedMismatch unless (n1, n2) = (1 + 18p + p^2, 1 + 22p^2 + p^4).
void kummer_report_check(uint64_t p, int64_t n1, int64_t n2);

enum class SplitBehavior { Inert, Split, Ramified };

// Kronecker symbol (d | p) for odd p: -1 inert, +1 split, 0 ramified (p | d).
SplitBehavior inert_check(int64_t d, uint64_t p);

// For each prime 5 <= p <= p_max with p not dividing d (d = -3 or -4): the CM
// curve (y^2 = x^3 + 1 for d = -3, y^2 = x^3 - x for d = -4) has trace zero
// exactly when p is inert.
struct CrosscheckRow {
  uint64_t p = 0;
  bool trace_zero = false;
  SplitBehavior behavior = SplitBehavior::Split;
  bool agree = false;
};
std::vector<CrosscheckRow> lemma_crosscheck(int64_t d, uint64_t p_max);

// Throws CrosscheckFailed if any row disagrees.
void assert_crosscheck(const std::vector<CrosscheckRow>& rows);

// prove_rank21 over every prime in [p_min, p_max] (p_max <= 200); primes 2
// and 3 are reported as unsupported rather than certified.
struct SweepRow {
  uint64_t p = 0;
  bool supported = false;
  std::optional<TheoremRun> run;
};
std::vector<SweepRow> sweep(uint64_t p_min, uint64_t p_max, bool skip_q2 = false);

}  // namespace artin1
