#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "artin1/curve.hpp"
#include "artin1/field.hpp"
#include "artin1/poly.hpp"

namespace artin1 {

enum class PencilKind { Inose, KummerPi0, Raw };

// How a pencil was built; carried into certificates and cache keys.
struct PencilProvenance {
  PencilKind kind = PencilKind::Raw;
  uint32_t curve_a = 0;
  uint32_t curve_b = 0;
  uint32_t curve_j = 0;
  int b_sign = 1;        // +1 or -1
  uint32_t c = 1;        // sextic-class representative in F_p*
  uint32_t twist_d = 1;  // quadratic-twist scalar in F_p*

  friend bool operator==(const PencilProvenance&, const PencilProvenance&) = default;
};

// Elliptic pencil y^2 = x^3 + A4(t) x + A6(t) over F_p with K3 degree windows
// deg A4 <= 8, deg A6 <= 12 (charts glued by A4 ~ s^8 A4(1/s), A6 ~ s^12 A6(1/s)).
struct Pencil {
  Field F;  // degree-1 field F_p
  Poly a4;
  Poly a6;
  PencilProvenance prov;
};

// Validates: degree windows; discriminant polynomial not identically zero;
// minimality at t = 0 and t = infinity (never t^4 | A4 together with t^6 | A6,
// in either chart). Throws BadInput / NonMinimalPlace.
Pencil pencil_make(const Field& F, Poly a4, Poly a6, PencilProvenance prov);

// The double-II* pencil attached to a trace-zero curve E:
//   y^2 = x^3 - 3A t^4 x + c t^5 (t^2 - 2Bt + 1),
// with J = j(E)/1728, B = b_sign * (1 - J), and A the smallest cube root of
// J^2 c^2 (A = 0 when J = 0). Throws ZeroC, NoCubeRoot.
Pencil inose_pencil(const Curve& E, int b_sign, const Fe& c);

// Deterministic finite twist family for E (trace zero):
// b_sign in {+1, -1} (only +1 when J = 0, by the t -> -t symmetry), c over
// powers g^i, i < gcd(6, p-1), of the smallest primitive root g, skipping c
// with no cube root for J^2 c^2, each quadratically twisted by d in
// {1, smallest nonresidue}; deduplicated by (A4, A6).
std::vector<Pencil> candidate_models(const Curve& E);

// (A4, A6) -> (d^2 A4, d^3 A6); throws ZeroTwist when d = 0.
Pencil pencil_twist(const Pencil& P, const Fe& d);

// Weierstrass coefficients (A4(t), A6(t)) of the fiber at a finite place t of
// P^1 over Fq (Fq of the same characteristic, degree 1 or 2).
std::pair<Fe, Fe> fiber_equation_at(const Pencil& P, const Field& Fq, const Fe& t);

// Flipped chart at infinity: (s^8 A4(1/s), s^12 A6(1/s)) as polynomials in s.
std::pair<Poly, Poly> infinity_chart(const Pencil& P);

// Km(E x E') fibered over t: fiber is the quadratic twist of E' by f(t),
// where f, g are the 2-division cubics of E, E'.
struct KummerModel {
  Field F;  // degree-1 field
  Poly f;   // x^3 + a x + b of E, as a polynomial in t
  Poly g;   // x^3 + a' x + b' of E'
};

// Throws FieldMismatch when the curves live over different fields.
KummerModel kummer_model(const Curve& E, const Curve& E2);

// The fibration as a pencil: A4 = a' f^2, A6 = b' f^3 (degrees 6 and 9).
Pencil kummer_pi0_pencil(const KummerModel& K);

}  // namespace artin1
