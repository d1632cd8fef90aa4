#include "artin1/kodaira.hpp"

#include <string>

namespace artin1 {

const char* fiber_type_name(FiberType t) {
  switch (t) {
    case FiberType::Smooth: return "smooth";
    case FiberType::I1: return "I1";
    case FiberType::I2: return "I2";
    case FiberType::II: return "II";
    case FiberType::IV: return "IV";
    case FiberType::I0Star: return "I0*";
    case FiberType::IIStar: return "II*";
  }
  return "?";
}

std::string place_string(const PlaceOfP1& place) {
  if (place.at_infinity) return "t=inf";
  if (place.degree == 1) return "t=" + std::to_string(place.root.c0);
  return "t^2+" + std::to_string(place.minpoly.coeff(1)) + "t+" +
         std::to_string(place.minpoly.coeff(0)) + "=0";
}

std::pair<Poly, int> discriminant_poly(const Pencil& P) {
  uint32_t p = P.F.p();
  Poly cube = P.a4.mul(P.a4).mul(P.a4).scale(4);
  Poly sq = P.a6.mul(P.a6).scale(27);
  Poly delta = cube.add(sq).scale(p - 16 % p);
  return {delta, 24 - delta.degree()};
}

namespace {

int euler_of(FiberType t, int m) {
  switch (t) {
    case FiberType::I1:
    case FiberType::I2: return m;
    case FiberType::II: return 2;
    case FiberType::IV: return 4;
    case FiberType::I0Star: return 6;
    case FiberType::IIStar: return 10;
    case FiberType::Smooth: return 0;
  }
  return 0;
}

FiberType type_from_signature(int m, int k4, int k6) {
  auto show = [&]() {
    return "m=" + std::to_string(m) + " k4=" + std::to_string(k4) +
           " k6=" + std::to_string(k6);
  };
  if (m == 0) return FiberType::Smooth;
  if (k4 == 0) {
    if (m == 1) return FiberType::I1;
    if (m == 2) return FiberType::I2;
    fail(Errc::UnsupportedFiberType, "multiplicative fiber of width " + std::to_string(m) +
                                         " outside the expected families (" + show() + ")");
  }
  if (k6 == 1) return FiberType::II;
  if (k4 >= 2 && k6 == 2) return FiberType::IV;
  if (k4 >= 4 && k6 >= 6)
    fail(Errc::NonMinimalPlace, "non-minimal Weierstrass place (" + show() + ")");
  if (k4 >= 2 && k6 >= 3 && m == 6) return FiberType::I0Star;
  if (k4 >= 4 && k6 == 5) return FiberType::IIStar;
  fail(Errc::UnsupportedFiberType, "unsupported signature " + show());
}

// (f / mu^k)(z), valid whenever mu^k divides f; the zero polynomial maps to 0.
Fe reduced_eval(const Poly& f, const Poly& mu, int k, const Field& K, const Fe& z) {
  if (f.is_zero()) return K.zero();
  Poly q = f;
  for (int i = 0; i < k; ++i) q = q.exact_div(mu);
  return q.eval(K, z);
}

// Component-rationality data for one fiber over the field K at root z,
// written into the base slot or (for degree-1 places viewed over F_{p^2})
// the ext slot.
void fill_component_data(FiberDatum& d, bool ext_slot, const Poly& a4, const Poly& a6,
                         const Poly& mu, const Field& K, const Fe& z) {
  switch (d.type) {
    case FiberType::I1:
    case FiberType::I2: {
      Fe a4z = a4.eval(K, z);
      Fe a6z = a6.eval(K, z);
      // Double root of x^3 + a x + b at x0 = -3b / (2a); the node's tangent
      // directions are rational iff 3 x0 is a square.
      Fe x0 = K.neg(K.div(K.mul(K.element(3), a6z), K.mul(K.element(2), a4z)));
      bool split = K.chi(K.mul(K.element(3), x0)) == 1;
      (ext_slot ? d.split_ext : d.split) = split;
      break;
    }
    case FiberType::IV: {
      // All three components are rational iff the reduced sextic coefficient
      // is a square in the residue field.
      bool all = K.chi(reduced_eval(a6, mu, 2, K, z)) == 1;
      (ext_slot ? d.iv_all_rational_ext : d.iv_all_rational) = all;
      break;
    }
    case FiberType::I0Star: {
      // Residual cubic T^3 + alpha T + beta; one leaf per rational root,
      // plus the far component.
      Fe alpha = reduced_eval(a4, mu, 2, K, z);
      Fe beta = reduced_eval(a6, mu, 3, K, z);
      int roots = 0;
      for (uint64_t i = 0; i < K.q(); ++i) {
        Fe x = K.from_index(i);
        Fe v = K.add(K.mul(K.add(K.mul(x, x), alpha), x), beta);
        if (K.is_zero(v)) ++roots;
      }
      (ext_slot ? d.rational_leaves_ext : d.rational_leaves) = 1 + roots;
      break;
    }
    default: break;  // II, II*: the correction is rationality-independent
  }
}

FiberDatum classify_place(const Poly& a4, const Poly& a6, const Poly& delta,
                          const Poly& mu, const Field& K, const Fe& z,
                          const Field* ext) {
  int m = delta.valuation(mu);
  int k4 = a4.valuation(mu);
  int k6 = a6.valuation(mu);
  FiberDatum d;
  d.type = type_from_signature(m, k4, k6);
  d.euler = euler_of(d.type, m);
  fill_component_data(d, false, a4, a6, mu, K, z);
  if (ext) fill_component_data(d, true, a4, a6, mu, *ext, ext->embed(z));
  return d;
}

}  // namespace

std::vector<FiberDatum> classify_fibers(const Pencil& P) {
  const Field& Fp = P.F;
  const uint32_t p = Fp.p();
  Field F2 = Field::make(p, 2);
  auto [delta, v_inf] = discriminant_poly(P);

  std::vector<FiberDatum> out;
  for (uint32_t r = 0; r < p; ++r) {
    Fe z = Fp.element(r);
    if (!Fp.is_zero(delta.eval(Fp, z))) continue;
    Poly mu(p, {(p - r) % p, 1});
    FiberDatum d = classify_place(P.a4, P.a6, delta, mu, Fp, z, &F2);
    d.place = PlaceOfP1{false, 1, z, mu};
    d.p = p;
    out.push_back(std::move(d));
  }
  // Conjugate pairs of roots in F_{p^2} \ F_p, one representative each
  // (the one whose u-coefficient lies in 1..(p-1)/2).
  for (uint64_t idx = p; idx < F2.q(); ++idx) {
    Fe z = F2.from_index(idx);
    if (z.c1 > (p - 1) / 2) continue;
    if (!F2.is_zero(delta.eval(F2, z))) continue;
    uint32_t tr = static_cast<uint32_t>((2 * uint64_t(z.c0)) % p);
    uint32_t nrm = F2.norm(z).c0;
    Poly mu(p, {nrm, (p - tr) % p, 1});
    FiberDatum d = classify_place(P.a4, P.a6, delta, mu, F2, z, nullptr);
    d.place = PlaceOfP1{false, 2, z, mu};
    d.p = p;
    out.push_back(std::move(d));
  }
  if (v_inf > 0) {
    auto [a4i, a6i] = infinity_chart(P);
    Poly deltai = delta.reverse_window(24);
    Poly mu(p, {0, 1});
    FiberDatum d = classify_place(a4i, a6i, deltai, mu, Fp, Fp.zero(), &F2);
    d.place = PlaceOfP1{true, 1, Fp.zero(), mu};
    d.p = p;
    out.push_back(std::move(d));
  }
  return out;
}

int64_t fiber_point_count(const FiberDatum& fiber, uint64_t q) {
  uint64_t p = fiber.p;
  bool ext_slot = false;
  if (fiber.place.degree == 2) {
    if (q != p * p) fail(Errc::BadInput, "degree-2 place only has fibers over F_{p^2}");
  } else if (q == p * p) {
    ext_slot = true;
  } else if (q != p) {
    fail(Errc::BadInput, "fiber counts are defined over F_p and F_{p^2} only");
  }
  bool split = ext_slot ? fiber.split_ext : fiber.split;
  bool all_rational = ext_slot ? fiber.iv_all_rational_ext : fiber.iv_all_rational;
  int64_t leaves = ext_slot ? fiber.rational_leaves_ext : fiber.rational_leaves;
  int64_t n = static_cast<int64_t>(q);
  switch (fiber.type) {
    case FiberType::I1: return split ? n : n + 2;
    case FiberType::I2: return split ? 2 * n : 2 * n + 2;
    case FiberType::II: return n + 1;
    case FiberType::IV: return all_rational ? 3 * n + 1 : n + 1;
    case FiberType::I0Star: return (n + 1) + leaves * n;
    case FiberType::IIStar: return 9 * n + 1;
    case FiberType::Smooth: fail(Errc::BadInput, "smooth fibers are counted directly");
  }
  fail(Errc::Internal, "unhandled fiber type");
}

void euler_audit(const std::vector<FiberDatum>& fibers) {
  int total = 0;
  for (const FiberDatum& f : fibers) total += f.euler * f.place.degree;
  if (total != 24)
    fail(Errc::AuditFailed, "degree-weighted Euler numbers sum to " +
                                std::to_string(total) + ", expected 24");
}

}  // namespace artin1
