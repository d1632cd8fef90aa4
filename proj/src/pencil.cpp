#include "artin1/pencil.hpp"

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "artin1/poly.hpp"

namespace artin1 {

namespace {

// Delta(t) = -16 (4 A4^3 + 27 A6^2), up to the constant in F_p*.
Poly discriminant_of(const Poly& a4, const Poly& a6) {
  uint32_t p = a4.p() ? a4.p() : a6.p();
  Poly cube = a4.mul(a4).mul(a4).scale(4);
  Poly sq = a6.mul(a6).scale(27);
  return cube.add(sq).scale(p - 16 % p);
}

bool non_minimal(const Poly& a4, const Poly& a6, const Poly& uniformizer) {
  return a4.valuation(uniformizer) >= 4 && a6.valuation(uniformizer) >= 6;
}

// Smallest primitive root mod p.
uint32_t primitive_root(const Field& F) {
  uint32_t p = F.p();
  std::vector<uint32_t> prime_factors;
  uint32_t m = p - 1;
  for (uint32_t f = 2; uint64_t(f) * f <= m; ++f)
    if (m % f == 0) {
      prime_factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  if (m > 1) prime_factors.push_back(m);
  for (uint32_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (uint32_t f : prime_factors)
      if (F.pow(F.element(g), (p - 1) / f) == F.one()) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  fail(Errc::Internal, "no primitive root found");
}

}  // namespace

Pencil pencil_make(const Field& F, Poly a4, Poly a6, PencilProvenance prov) {
  if (F.degree() != 1) fail(Errc::BadInput, "pencils are defined over a degree-1 field");
  if ((!a4.is_zero() && a4.p() != F.p()) || (!a6.is_zero() && a6.p() != F.p()))
    fail(Errc::FieldMismatch, "coefficient polynomials over a different characteristic");
  if (a4.is_zero()) a4 = Poly::zero(F.p());
  if (a6.is_zero()) a6 = Poly::zero(F.p());
  if (a4.degree() > 8) fail(Errc::BadInput, "deg A4 exceeds the K3 window (8)");
  if (a6.degree() > 12) fail(Errc::BadInput, "deg A6 exceeds the K3 window (12)");
  if (discriminant_of(a4, a6).is_zero())
    fail(Errc::BadInput, "identically singular family (Delta = 0)");
  Poly t = Poly::monomial(F.p(), 1, 1);
  if (non_minimal(a4, a6, t))
    fail(Errc::NonMinimalPlace, "family is non-minimal at t = 0");
  if (non_minimal(a4.reverse_window(8), a6.reverse_window(12), t))
    fail(Errc::NonMinimalPlace, "family is non-minimal at t = infinity");
  return Pencil{F, std::move(a4), std::move(a6), prov};
}

Pencil inose_pencil(const Curve& E, int b_sign, const Fe& c) {
  const Field& F = E.F;
  if (F.degree() != 1) fail(Errc::BadInput, "base curve must live over F_p");
  Fe cc = F.embed(c);
  if (F.is_zero(cc)) fail(Errc::ZeroC, "sextic-class parameter c must be nonzero");
  Fe j = j_invariant(E);
  Fe J = F.div(j, F.element(1728 % F.p()));
  Fe A = F.zero();
  if (!F.is_zero(J)) {
    Fe target = F.mul(F.mul(J, J), F.mul(cc, cc));
    auto root = F.cube_root(target);
    if (!root) fail(Errc::NoCubeRoot, "J^2 c^2 has no cube root; choose another c");
    A = *root;
  }
  Fe B = b_sign >= 0 ? F.sub(F.one(), J) : F.sub(J, F.one());

  uint32_t p = F.p();
  Poly a4 = Poly::monomial(p, F.neg(F.mul(F.element(3), A)).c0, 4);
  Fe mid = F.neg(F.mul(F.element(2), F.mul(B, cc)));  // -2 B c
  Poly a6(p, {0, 0, 0, 0, 0, cc.c0, mid.c0, cc.c0});

  PencilProvenance prov;
  prov.kind = PencilKind::Inose;
  prov.curve_a = E.a.c0;
  prov.curve_b = E.b.c0;
  prov.curve_j = j.c0;
  prov.b_sign = b_sign >= 0 ? 1 : -1;
  prov.c = cc.c0;
  prov.twist_d = 1;
  return pencil_make(F, std::move(a4), std::move(a6), prov);
}

std::vector<Pencil> candidate_models(const Curve& E) {
  const Field& F = E.F;
  Fe J = F.div(j_invariant(E), F.element(1728 % F.p()));

  std::vector<int> signs = F.is_zero(J) ? std::vector<int>{1} : std::vector<int>{1, -1};
  uint32_t g = primitive_root(F);
  uint32_t m = std::gcd<uint32_t>(6, F.p() - 1);
  std::vector<Fe> cs;
  Fe cur = F.one();
  for (uint32_t i = 0; i < m; ++i) {
    cs.push_back(cur);
    cur = F.mul(cur, F.element(g));
  }
  std::vector<Fe> ds = {F.one(), F.element(F.nonresidue())};

  std::vector<Pencil> out;
  std::vector<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>> seen;
  for (int sign : signs)
    for (const Fe& c : cs) {
      std::optional<Pencil> base;
      try {
        base = inose_pencil(E, sign, c);
      } catch (const Error& e) {
        if (e.code() != Errc::NoCubeRoot) throw;
      }
      if (!base) continue;  // this sextic class admits no model
      for (const Fe& d : ds) {
        Pencil P = d == F.one() ? *base : pencil_twist(*base, d);
        auto key = std::make_pair(P.a4.coeffs(), P.a6.coeffs());
        bool dup = false;
        for (const auto& s : seen)
          if (s == key) {
            dup = true;
            break;
          }
        if (dup) continue;
        seen.push_back(std::move(key));
        out.push_back(std::move(P));
      }
    }
  return out;
}

Pencil pencil_twist(const Pencil& P, const Fe& d) {
  const Field& F = P.F;
  Fe dd = F.embed(d);
  if (F.is_zero(dd)) fail(Errc::ZeroTwist, "quadratic twist by zero");
  Fe d2 = F.mul(dd, dd);
  Fe d3 = F.mul(d2, dd);
  PencilProvenance prov = P.prov;
  prov.twist_d = F.mul(F.element(prov.twist_d), dd).c0;
  return pencil_make(F, P.a4.scale(d2.c0), P.a6.scale(d3.c0), prov);
}

std::pair<Fe, Fe> fiber_equation_at(const Pencil& P, const Field& Fq, const Fe& t) {
  if (Fq.p() != P.F.p())
    fail(Errc::FieldMismatch, "fiber parameter field has a different characteristic");
  return {P.a4.eval(Fq, t), P.a6.eval(Fq, t)};
}

std::pair<Poly, Poly> infinity_chart(const Pencil& P) {
  return {P.a4.reverse_window(8), P.a6.reverse_window(12)};
}

KummerModel kummer_model(const Curve& E, const Curve& E2) {
  if (!(E.F == E2.F)) fail(Errc::FieldMismatch, "product factors over different fields");
  if (E.F.degree() != 1) fail(Errc::BadInput, "product factors must live over F_p");
  uint32_t p = E.F.p();
  Poly f(p, {E.b.c0, E.a.c0, 0, 1});
  Poly g(p, {E2.b.c0, E2.a.c0, 0, 1});
  return KummerModel{E.F, std::move(f), std::move(g)};
}

Pencil kummer_pi0_pencil(const KummerModel& K) {
  uint32_t p = K.F.p();
  uint32_t a2 = K.g.coeff(1);  // x-coefficient of the second factor
  uint32_t b2 = K.g.coeff(0);
  Poly f2 = K.f.mul(K.f);
  Poly a4 = f2.scale(a2);
  Poly a6 = f2.mul(K.f).scale(b2);

  PencilProvenance prov;
  prov.kind = PencilKind::KummerPi0;
  prov.curve_a = a2;
  prov.curve_b = b2;
  Curve E2 = curve_make(K.F, K.F.element(a2), K.F.element(b2));
  prov.curve_j = j_invariant(E2).c0;
  return pencil_make(K.F, std::move(a4), std::move(a6), prov);
}

}  // namespace artin1
