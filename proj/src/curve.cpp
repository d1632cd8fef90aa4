#include "artin1/curve.hpp"

#include <string>

namespace artin1 {

namespace {

Fe discriminant_term(const Field& F, const Fe& a, const Fe& b) {
  // 4 a^3 + 27 b^2
  Fe a3 = F.mul(F.mul(a, a), a);
  Fe b2 = F.mul(b, b);
  return F.add(F.mul(F.element(4), a3), F.mul(F.element(27), b2));
}

}  // namespace

Curve curve_make(const Field& F, const Fe& a, const Fe& b) {
  Fe aa = F.embed(a);
  Fe bb = F.embed(b);
  if (F.is_zero(discriminant_term(F, aa, bb)))
    fail(Errc::SingularCurve, "4a^3 + 27b^2 = 0");
  return Curve{F, aa, bb};
}

int64_t point_count(const Curve& E) {
  const Field& F = E.F;
  int64_t n = int64_t(F.q()) + 1;
  for (uint64_t i = 0; i < F.q(); ++i) {
    Fe x = F.from_index(i);
    Fe rhs = F.add(F.mul(F.add(F.mul(x, x), E.a), x), E.b);  // x^3 + a x + b
    n += F.chi(rhs);
  }
  return n;
}

int64_t trace(const Curve& E) { return int64_t(E.F.q()) + 1 - point_count(E); }

int64_t trace_lift(int64_t a1, uint64_t p, int k) {
  if (k == 1) return a1;
  if (k == 2) return a1 * a1 - 2 * int64_t(p);
  fail(Errc::BadInput, "trace lift only defined for k in {1, 2}");
}

Fe j_invariant(const Curve& E) {
  const Field& F = E.F;
  Fe a3 = F.mul(F.mul(E.a, E.a), E.a);
  Fe num = F.mul(F.element(1728 % F.p()), F.mul(F.element(4), a3));
  return F.div(num, discriminant_term(F, E.a, E.b));
}

Curve find_supersingular(uint64_t p) {
  Field F = Field::make(p, 1);
  if (p % 3 == 2) return curve_make(F, F.zero(), F.one());
  if (p % 4 == 3) return curve_make(F, F.element(p - 1), F.zero());
  // p = 1 (mod 12): scan j-invariants for a model with p + 1 points.
  uint32_t j1728 = uint32_t(1728 % p);
  for (uint32_t j = 1; j < p; ++j) {
    if (j == j1728) continue;
    Fe s = F.div(F.element(j), F.sub(F.element(j1728), F.element(j)));
    Curve E = curve_make(F, F.mul(F.element(3), s), F.mul(F.element(2), s));
    if (point_count(E) == int64_t(p) + 1) return E;
  }
  fail(Errc::Internal, "no trace-zero curve found for p = " + std::to_string(p));
}

Curve quadratic_twist(const Curve& E, const Fe& d) {
  const Field& F = E.F;
  Fe dd = F.embed(d);
  if (F.is_zero(dd)) fail(Errc::ZeroTwist, "quadratic twist by zero");
  Fe d2 = F.mul(dd, dd);
  return curve_make(F, F.mul(E.a, d2), F.mul(E.b, F.mul(d2, dd)));
}

std::vector<Fe> two_torsion_roots(const Curve& E) {
  const Field& F = E.F;
  std::vector<Fe> roots;
  for (uint64_t i = 0; i < F.q(); ++i) {
    Fe x = F.from_index(i);
    Fe v = F.add(F.mul(F.add(F.mul(x, x), E.a), x), E.b);
    if (F.is_zero(v)) roots.push_back(x);
  }
  return roots;
}

}  // namespace artin1
