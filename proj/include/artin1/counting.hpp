#pragma once

#include <cstdint>

#include "artin1/field.hpp"
#include "artin1/pencil.hpp"

namespace artin1 {

// q + 1 + sum_x chi(x^3 + a x + b) via the precomputed character table.
int64_t char_fiber_count(const Field& F, const Fe& a, const Fe& b);

// Double loop over (x, y) counting y^2 = x^3 + a x + b solutions, plus one for
// the point at infinity. Test oracle; q <= 2500.
int64_t naive_fiber_count(const Field& F, const Fe& a, const Fe& b);

// #X(F_{p^k}), k in {1, 2}: sum over all places of P^1(F_{p^k}) of the fiber
// count — good fibers by character sums, singular rational places by the
// Kodaira correction table (degree-1 places use quadratic-extension data when
// k = 2; degree-2 places contribute both conjugate embeddings at k = 2 and
// nothing at k = 1). OpenMP-parallel; the integer reduction makes the result
// identical for every worker count.
int64_t surface_count(const Pencil& P, int k);

// Reference implementation: same contract, single-threaded, generic field
// arithmetic with the character evaluated by formula instead of the table.
int64_t surface_count_serial(const Pencil& P, int k);

// Fast path for Kummer fibrations: good fibers contribute
// q + 1 - chi_q(f(t)) * a_k (a_k the trace of E' over F_{p^k}) without any
// inner character sum; singular places use the correction table. Must agree
// with surface_count(kummer_pi0_pencil(K), k).
int64_t kummer_count(const KummerModel& K, int k);

// Counts the elliptic surface y^2 = x^3 + t fiberwise over F_q (q = p or p^2)
// and checks the closed form q^2 + 10q + 1 — an end-to-end validation of the
// character-sum engine plus the 9q+1 correction for the fiber at infinity.
// Throws SelftestFailed on mismatch.
void selftest_rational_surface(uint64_t q);

}  // namespace artin1
