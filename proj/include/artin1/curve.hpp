#pragma once

#include <cstdint>
#include <vector>

#include "artin1/field.hpp"

namespace artin1 {

// Short Weierstrass curve y^2 = x^3 + a x + b over F_p or F_{p^2} (p >= 5),
// with nonzero discriminant -16(4a^3 + 27b^2).
struct Curve {
  Field F;
  Fe a;
  Fe b;
};

// Validates the discriminant; throws SingularCurve when 4a^3 + 27b^2 = 0.
Curve curve_make(const Field& F, const Fe& a, const Fe& b);

// #E(F_q) = q + 1 + sum_x chi(x^3 + a x + b), counting the point at infinity.
int64_t point_count(const Curve& E);

// Frobenius trace q + 1 - #E(F_q).
int64_t trace(const Curve& E);

// Lifts a trace over F_p to F_{p^k}: k=1 returns a1, k=2 returns a1^2 - 2p.
int64_t trace_lift(int64_t a1, uint64_t p, int k);

// j = 1728 * 4a^3 / (4a^3 + 27b^2).
Fe j_invariant(const Curve& E);

// Deterministic trace-zero curve over F_p:
//   p = 2 (mod 3) -> y^2 = x^3 + 1
//   p = 3 (mod 4) -> y^2 = x^3 - x
//   p = 1 (mod 12) -> smallest j in 1..p-1 (skipping 1728 mod p) whose model
//                     y^2 = x^3 + 3sx + 2s, s = j/(1728 - j), has p + 1 points.
Curve find_supersingular(uint64_t p);

// y^2 = x^3 + a d^2 x + b d^3; throws ZeroTwist when d = 0.
Curve quadratic_twist(const Curve& E, const Fe& d);

// Roots of x^3 + a x + b in E's base field, ascending by element index.
std::vector<Fe> two_torsion_roots(const Curve& E);

}  // namespace artin1
