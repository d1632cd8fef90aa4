#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "artin1/field.hpp"
#include "artin1/pencil.hpp"
#include "artin1/poly.hpp"

namespace artin1 {

enum class FiberType { Smooth, I1, I2, II, IV, I0Star, IIStar };

// "I1", "I2", "II", "IV", "I0*", "II*" (Smooth -> "smooth").
const char* fiber_type_name(FiberType t);

// A closed point of P^1 over F_p: a finite place with monic minimal polynomial
// of degree 1 or 2 (root stored in F_{p^2}), or the place at infinity (whose
// uniformizer is s in the flipped chart).
struct PlaceOfP1 {
  bool at_infinity = false;
  int degree = 1;
  Fe root;       // in F_p (degree 1) or F_{p^2} (degree 2); unused at infinity
  Poly minpoly;  // monic over F_p; at infinity: the polynomial s
};

// "t=5", "t^2+3t+5=0", or "t=inf".
std::string place_string(const PlaceOfP1& place);

// One singular fiber: Kodaira type plus the component-rationality data needed
// for exact point counts, over the residue field and (for degree-1 places)
// over its quadratic extension.
struct FiberDatum {
  PlaceOfP1 place;
  FiberType type = FiberType::Smooth;
  int euler = 0;
  uint32_t p = 0;

  // Over the residue field of the place:
  bool split = false;            // I1/I2: node tangents rational
  bool iv_all_rational = false;  // IV: all three components rational
  int rational_leaves = 0;       // I0*: 1 + rational roots of the residual cubic

  // Over the quadratic extension (degree-1 places only; used for F_{p^2} counts):
  bool split_ext = false;
  bool iv_all_rational_ext = false;
  int rational_leaves_ext = 0;
};

// (Delta = -16(4 A4^3 + 27 A6^2), v_inf = 24 - deg Delta).
std::pair<Poly, int> discriminant_poly(const Pencil& P);

// All singular fibers: roots of Delta in F_p and F_{p^2} (conjugate pairs
// reported once, as a degree-2 place) plus infinity when v_inf > 0.
// Classification by valuations m = v(Delta), k4 = v(A4), k6 = v(A6):
//   m = 0 smooth; k4 = 0 -> I_m (m <= 2); k4 >= 1, k6 = 1 -> II;
//   k4 >= 2, k6 = 2 -> IV; k4 >= 2, k6 >= 3, m = 6 -> I0*;
//   k4 >= 4, k6 = 5 -> II*.
// Throws NonMinimalPlace (k4 >= 4 and k6 >= 6) or UnsupportedFiberType.
// Order: finite degree-1 places by root, then degree-2 places, then infinity.
std::vector<FiberDatum> classify_fibers(const Pencil& P);

// Points of the fiber over F_q, where q = p (degree-1 places) or q = p^2
// (any place; degree-1 places then use the quadratic-extension data):
//   I1: q / q+2 (split / non-split);  I2: 2q / 2q+2;  II: q+1;
//   IV: 3q+1 / q+1 (all components rational / not);
//   I0*: (q+1) + rational_leaves * q;  II*: 9q+1.
int64_t fiber_point_count(const FiberDatum& fiber, uint64_t q);

// Sum over fibers of euler * place degree must equal 24; throws AuditFailed.
void euler_audit(const std::vector<FiberDatum>& fibers);

}  // namespace artin1
