#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "artin1/curve.hpp"
#include "artin1/errors.hpp"
#include "artin1/field.hpp"
#include "artin1/kodaira.hpp"
#include "artin1/pencil.hpp"
#include "artin1/poly.hpp"

using namespace artin1;

static bool throws_with(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

static const FiberDatum& at(const std::vector<FiberDatum>& fibers, const std::string& s) {
  for (const FiberDatum& f : fibers)
    if (place_string(f.place) == s) return f;
  REQUIRE_MESSAGE(false, "no fiber at place ", s);
  return fibers.front();
}

static Pencil inose_for(uint32_t p, uint32_t c_val = 1) {
  Curve E = find_supersingular(p);
  return inose_pencil(E, +1, E.F.element(c_val));
}

TEST_CASE("discriminant polynomial and its valuation at infinity") {
  {
    Pencil P = inose_for(5);  // j = 0: Delta = 3 t^10 (t-1)^4 over F_5
    auto [delta, v_inf] = discriminant_poly(P);
    CHECK(delta.degree() == 14);
    CHECK(v_inf == 10);
    CHECK(delta.coeffs() ==
          std::vector<uint32_t>{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 3, 3, 3, 3});
    CHECK(delta.valuation(Poly(5, {0, 1})) == 10);
    CHECK(delta.valuation(Poly(5, {4, 1})) == 4);
  }
  {
    Pencil P = inose_for(7);  // j = 1728: Delta = 2 t^10 (t-1)^2 (t+1)^2 over F_7
    auto [delta, v_inf] = discriminant_poly(P);
    CHECK(delta.degree() == 14);
    CHECK(v_inf == 10);
    CHECK(delta.valuation(Poly(7, {0, 1})) == 10);
    CHECK(delta.valuation(Poly(7, {6, 1})) == 2);
    CHECK(delta.valuation(Poly(7, {1, 1})) == 2);
  }
}

TEST_CASE("two additive stars plus one extra fiber when j = 0") {
  Field F5 = Field::make(5, 1);
  auto fibers = classify_fibers(inose_for(5, 1));
  REQUIRE(fibers.size() == 3);
  CHECK(place_string(fibers[0].place) == "t=0");
  CHECK(place_string(fibers[1].place) == "t=1");
  CHECK(place_string(fibers[2].place) == "t=inf");
  CHECK(fibers[0].type == FiberType::IIStar);
  CHECK(fibers[0].euler == 10);
  CHECK(fibers[2].type == FiberType::IIStar);
  const FiberDatum& iv = fibers[1];
  CHECK(iv.type == FiberType::IV);
  CHECK(iv.euler == 4);
  CHECK(iv.iv_all_rational == true);
  CHECK(iv.iv_all_rational_ext == true);
  euler_audit(fibers);

  // The c = 2 member of the same family: the three components of the IV fiber
  // are only rational over F_25.
  auto fibers2 = classify_fibers(inose_for(5, 2));
  const FiberDatum& iv2 = at(fibers2, "t=1");
  CHECK(iv2.type == FiberType::IV);
  CHECK(iv2.iv_all_rational == false);
  CHECK(iv2.iv_all_rational_ext == true);
}

TEST_CASE("j = 1728 gives a split and a non-split node pair") {
  auto fibers = classify_fibers(inose_for(7));
  REQUIRE(fibers.size() == 4);
  CHECK(at(fibers, "t=0").type == FiberType::IIStar);
  CHECK(at(fibers, "t=inf").type == FiberType::IIStar);
  const FiberDatum& f1 = at(fibers, "t=1");
  CHECK(f1.type == FiberType::I2);
  CHECK(f1.euler == 2);
  CHECK(f1.split == false);
  CHECK(f1.split_ext == true);
  const FiberDatum& f6 = at(fibers, "t=6");
  CHECK(f6.type == FiberType::I2);
  CHECK(f6.split == true);
  euler_audit(fibers);
}

TEST_CASE("generic j over F_13: one node pair collides, two stay simple") {
  auto fibers = classify_fibers(inose_for(13));
  REQUIRE(fibers.size() == 5);
  CHECK(at(fibers, "t=0").type == FiberType::IIStar);
  CHECK(at(fibers, "t=inf").type == FiberType::IIStar);
  const FiberDatum& c1 = at(fibers, "t=1");
  CHECK(c1.type == FiberType::I2);
  CHECK(c1.split == false);
  CHECK(c1.split_ext == true);
  const FiberDatum& c2 = at(fibers, "t=2");
  CHECK(c2.type == FiberType::I1);
  CHECK(c2.split == false);
  CHECK(c2.split_ext == true);
  const FiberDatum& c7 = at(fibers, "t=7");
  CHECK(c7.type == FiberType::I1);
  CHECK(c7.split == false);
  CHECK(c7.split_ext == true);
  euler_audit(fibers);
}

TEST_CASE("a family with a conjugate pair of nodes") {
  // y^2 = x^3 + 2 t^4 x + t^5 (t^2 - 2t + 1) over F_5: the discriminant's
  // quartic factor splits as (t^2 + 1)(t^2 + t + 1), so two rational nodes
  // plus one closed point of degree 2.
  Field F5 = Field::make(5, 1);
  Pencil P = pencil_make(F5, Poly(5, {0, 0, 0, 0, 2}),
                         Poly(5, {0, 0, 0, 0, 0, 1, 3, 1}), {});
  auto fibers = classify_fibers(P);
  REQUIRE(fibers.size() == 5);
  // Order: finite rational places by root, degree-2 places, infinity.
  CHECK(place_string(fibers[0].place) == "t=0");
  CHECK(place_string(fibers[1].place) == "t=2");
  CHECK(place_string(fibers[2].place) == "t=3");
  CHECK(place_string(fibers[3].place) == "t^2+1t+1=0");
  CHECK(place_string(fibers[4].place) == "t=inf");

  CHECK(fibers[0].type == FiberType::IIStar);
  CHECK(fibers[4].type == FiberType::IIStar);
  for (int i : {1, 2}) {
    CHECK(fibers[i].type == FiberType::I1);
    CHECK(fibers[i].split == false);
    CHECK(fibers[i].split_ext == true);
  }
  const FiberDatum& pair = fibers[3];
  CHECK(pair.place.degree == 2);
  CHECK(pair.place.at_infinity == false);
  CHECK(pair.place.root.c0 == 2);
  CHECK(pair.place.root.c1 == 2);
  CHECK(pair.place.minpoly.coeffs() == std::vector<uint32_t>{1, 1, 1});
  CHECK(pair.type == FiberType::I1);
  CHECK(pair.split == true);  // over its residue field F_25

  // Weighted Euler numbers: 10 + 1 + 1 + 1*2 + 10 = 24.
  int weighted = 0;
  for (const FiberDatum& f : fibers) weighted += f.euler * f.place.degree;
  CHECK(weighted == 24);
  euler_audit(fibers);
}

TEST_CASE("product fibrations classify as chains of I0*") {
  {
    // E: y^2 = x^3 + 1 over F_5; f = t^3 + 1 = (t + 1)(t^2 + 4t + 1).
    Field F5 = Field::make(5, 1);
    Curve E = curve_make(F5, F5.zero(), F5.one());
    Pencil P = kummer_pi0_pencil(kummer_model(E, E));
    auto fibers = classify_fibers(P);
    REQUIRE(fibers.size() == 3);
    const FiberDatum& r = at(fibers, "t=4");
    CHECK(r.type == FiberType::I0Star);
    CHECK(r.euler == 6);
    CHECK(r.rational_leaves == 2);
    CHECK(r.rational_leaves_ext == 4);
    const FiberDatum& pair = at(fibers, "t^2+4t+1=0");
    CHECK(pair.place.degree == 2);
    CHECK(pair.place.root.c0 == 3);
    CHECK(pair.place.root.c1 == 2);
    CHECK(pair.type == FiberType::I0Star);
    CHECK(pair.rational_leaves == 4);
    const FiberDatum& inf = at(fibers, "t=inf");
    CHECK(inf.type == FiberType::I0Star);
    CHECK(inf.rational_leaves == 2);
    CHECK(inf.rational_leaves_ext == 4);
    euler_audit(fibers);
  }
  {
    // E: y^2 = x^3 - x over F_7; f = t^3 - t splits completely.
    Field F7 = Field::make(7, 1);
    Curve E = curve_make(F7, F7.element(6), F7.zero());
    Pencil P = kummer_pi0_pencil(kummer_model(E, E));
    auto fibers = classify_fibers(P);
    REQUIRE(fibers.size() == 4);
    for (const char* s : {"t=0", "t=1", "t=6", "t=inf"}) {
      const FiberDatum& f = at(fibers, s);
      CHECK(f.type == FiberType::I0Star);
      CHECK(f.rational_leaves == 4);
      CHECK(f.rational_leaves_ext == 4);
    }
    euler_audit(fibers);
  }
  {
    // E: y^2 = x^3 + 1 over F_7; f = t^3 + 1 splits completely.
    Field F7 = Field::make(7, 1);
    Curve E = curve_make(F7, F7.zero(), F7.one());
    Pencil P = kummer_pi0_pencil(kummer_model(E, E));
    auto fibers = classify_fibers(P);
    REQUIRE(fibers.size() == 4);
    for (const char* s : {"t=3", "t=5", "t=6", "t=inf"}) {
      const FiberDatum& f = at(fibers, s);
      CHECK(f.type == FiberType::I0Star);
      CHECK(f.rational_leaves == 4);
    }
    euler_audit(fibers);
  }
}

TEST_CASE("non-minimal and out-of-range fiber signatures are rejected") {
  Field F5 = Field::make(5, 1);
  // a4 = (t-1)^4, a6 = (t-1)^6 (t^6 + 1): valid degree windows, smooth at
  // infinity, but (k4, k6) = (4, 6) at t = 1 is a non-minimal model.
  Poly pm1(5, {4, 1});
  Poly a4 = pm1.mul(pm1).mul(pm1).mul(pm1);
  Poly a6 = a4.mul(pm1).mul(pm1).mul(Poly(5, {1, 0, 0, 0, 0, 0, 1}));
  Pencil P = pencil_make(F5, a4, a6, {});
  CHECK(throws_with(Errc::NonMinimalPlace, [&] { classify_fibers(P); }));

  // a4 = t + t^8, a6 = t^2 over F_7: signature (m, k4, k6) = (3, 1, 2) at
  // t = 0 is outside the supported fiber-type table.
  Field F7 = Field::make(7, 1);
  Pencil Q = pencil_make(F7, Poly(7, {0, 1, 0, 0, 0, 0, 0, 0, 1}),
                         Poly(7, {0, 0, 1}), {});
  CHECK(throws_with(Errc::UnsupportedFiberType, [&] { classify_fibers(Q); }));
}

TEST_CASE("fiber point counts over the residue field and its extension") {
  FiberDatum f;
  f.p = 7;
  f.place.degree = 1;

  f.type = FiberType::IIStar;
  f.euler = 10;
  CHECK(fiber_point_count(f, 7) == 64);
  CHECK(fiber_point_count(f, 49) == 442);

  f.type = FiberType::II;
  CHECK(fiber_point_count(f, 7) == 8);

  f.type = FiberType::I1;
  f.split = false;
  f.split_ext = true;
  CHECK(fiber_point_count(f, 7) == 9);
  CHECK(fiber_point_count(f, 49) == 49);
  f.split = true;
  CHECK(fiber_point_count(f, 7) == 7);

  f.type = FiberType::I2;
  f.split = true;
  CHECK(fiber_point_count(f, 7) == 14);
  f.split = false;
  f.split_ext = false;
  CHECK(fiber_point_count(f, 7) == 16);
  CHECK(fiber_point_count(f, 49) == 100);

  f.type = FiberType::IV;
  f.iv_all_rational = true;
  CHECK(fiber_point_count(f, 7) == 22);
  f.iv_all_rational = false;
  f.iv_all_rational_ext = true;
  CHECK(fiber_point_count(f, 7) == 8);
  CHECK(fiber_point_count(f, 49) == 148);

  f.type = FiberType::I0Star;
  f.rational_leaves = 4;
  CHECK(fiber_point_count(f, 7) == 36);
  f.rational_leaves = 2;
  f.rational_leaves_ext = 4;
  CHECK(fiber_point_count(f, 7) == 22);
  CHECK(fiber_point_count(f, 49) == 246);

  // A degree-2 place's data already lives in F_{p^2}: the base flags apply.
  FiberDatum g;
  g.p = 5;
  g.place.degree = 2;
  g.type = FiberType::I1;
  g.split = true;
  CHECK(fiber_point_count(g, 25) == 25);
  g.type = FiberType::I0Star;
  g.rational_leaves = 4;
  CHECK(fiber_point_count(g, 25) == 126);
}

TEST_CASE("the Euler audit is degree-weighted and tamper-evident") {
  auto fibers = classify_fibers(inose_for(13));
  euler_audit(fibers);
  auto bad = fibers;
  bad[1].euler += 1;
  CHECK(throws_with(Errc::AuditFailed, [&] { euler_audit(bad); }));
  auto missing = fibers;
  missing.pop_back();
  CHECK(throws_with(Errc::AuditFailed, [&] { euler_audit(missing); }));
}

TEST_CASE("place and type names") {
  CHECK(fiber_type_name(FiberType::Smooth) == std::string("smooth"));
  CHECK(fiber_type_name(FiberType::I1) == std::string("I1"));
  CHECK(fiber_type_name(FiberType::I2) == std::string("I2"));
  CHECK(fiber_type_name(FiberType::II) == std::string("II"));
  CHECK(fiber_type_name(FiberType::IV) == std::string("IV"));
  CHECK(fiber_type_name(FiberType::I0Star) == std::string("I0*"));
  CHECK(fiber_type_name(FiberType::IIStar) == std::string("II*"));

  Field F13 = Field::make(13, 1);
  PlaceOfP1 fin{false, 1, F13.element(5), Poly(13, {8, 1})};
  CHECK(place_string(fin) == "t=5");
  PlaceOfP1 inf{true, 1, F13.zero(), Poly(13, {0, 1})};
  CHECK(place_string(inf) == "t=inf");
  Field F169 = Field::make(13, 2);
  PlaceOfP1 quad{false, 2, F169.element(1, 1), Poly(13, {5, 3, 1})};
  CHECK(place_string(quad) == "t^2+3t+5=0");
}
