#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "artin1/certify.hpp"
#include "artin1/counting.hpp"
#include "artin1/curve.hpp"
#include "artin1/emit.hpp"
#include "artin1/errors.hpp"
#include "artin1/field.hpp"
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

TEST_CASE("eigenvalue multiplicities from the two counts") {
  {
    EigenSolve s = infer_eigenvalues(11, 342, 17304);
    CHECK(s.consistent);
    CHECK(s.plus_p == 21);
    CHECK(s.minus_p == 1);
    CHECK(s.t1 == 220);
    CHECK(s.t2 == 2662);
  }
  {
    EigenSolve s = infer_eigenvalues(11, 320, 17304);
    CHECK(s.consistent);
    CHECK(s.plus_p == 20);
    CHECK(s.minus_p == 2);
  }
  // p does not divide t1.
  CHECK(!infer_eigenvalues(11, 343, 17304).consistent);
  // t1 / p odd.
  CHECK(!infer_eigenvalues(11, 331, 17304).consistent);
  // |t1| > 22 p.
  CHECK(!infer_eigenvalues(11, 386, 17304).consistent);
  // Wrong quadratic-extension count.
  CHECK(!infer_eigenvalues(11, 342, 17303).consistent);
  // Without the quadratic-extension requirement the same n2 is ignored.
  {
    EigenSolve s = infer_eigenvalues(11, 342, 0, false);
    CHECK(s.consistent);
    CHECK(s.plus_p == 21);
    CHECK(s.t2 == 0);
  }
}

TEST_CASE("certificate for the first p = 11 model") {
  auto models = candidate_models(find_supersingular(11));
  Certificate c = certify_model(models[0]);
  CHECK(c.p == 11);
  CHECK(c.verdict == Verdict::Certified21);
  CHECK(c.n1 == 342);
  CHECK(c.n2 == 17304);
  CHECK(c.t1 == 220);
  CHECK(c.t2 == 2662);
  CHECK(c.plus_p == 21);
  CHECK(c.minus_p == 1);
  CHECK(c.rho_fp == 21);
  CHECK(c.rho_fp2 == 22);
  CHECK(c.artin_invariant == "1 (cited)");
  CHECK(c.a4_coeffs == std::vector<uint32_t>{});
  CHECK(c.a6_coeffs == std::vector<uint32_t>{0, 0, 0, 0, 0, 1, 9, 1});
  REQUIRE(c.fibers.size() == 3);
  CHECK(c.fibers[0] == FiberSummary{"t=0", "II*", 10, -1});
  CHECK(c.fibers[1] == FiberSummary{"t=1", "IV", 4, 1});
  CHECK(c.fibers[2] == FiberSummary{"t=inf", "II*", 10, -1});

  Certificate other = certify_model(models[1]);
  CHECK(other.verdict == Verdict::CertifiedOther);
  CHECK(other.plus_p == 20);
  CHECK(other.minus_p == 2);
  CHECK(other.rho_fp == 20);
  CHECK(other.rho_fp2 == 22);
}

TEST_CASE("skipping the quadratic-extension count") {
  auto models = candidate_models(find_supersingular(11));
  Certificate c = certify_model(models[0], /*skip_q2=*/true);
  CHECK(c.verdict == Verdict::Certified21);
  CHECK(c.n2 == 0);
  CHECK(c.t2 == 0);
  CHECK(c.rho_fp2 == 0);
  CHECK(c.plus_p == 21);
}

TEST_CASE("a family that fails the consistency checks") {
  Field F5 = Field::make(5, 1);
  Pencil P = pencil_make(F5, Poly(5, {0, 0, 0, 0, 2}),
                         Poly(5, {0, 0, 0, 0, 0, 1, 3, 1}), {});
  Certificate c = certify_model(P);  // N1 = 115 -> t1 = 89, not divisible by 5
  CHECK(c.verdict == Verdict::Inconsistent);
  CHECK(c.plus_p == 0);
  CHECK(c.minus_p == 0);
  CHECK(c.rho_fp == 0);
  CHECK(c.rho_fp2 == 0);  // t2 = 451 != 550
}

TEST_CASE("full pipeline for one prime") {
  TheoremRun r = prove_rank21(11);
  CHECK(r.p == 11);
  CHECK(!r.falsified);
  REQUIRE(r.certified.has_value());
  CHECK(r.certified->verdict == Verdict::Certified21);
  CHECK(r.certified->n1 == 342);
  CHECK(r.log.size() == 1);  // the first candidate already certifies

  TheoremRun all = prove_rank21(11, /*all_candidates=*/true);
  REQUIRE(all.log.size() == 4);
  std::vector<int> plus;
  for (const Certificate& c : all.log) plus.push_back(c.plus_p);
  CHECK(plus == std::vector<int>{21, 20, 20, 21});
  REQUIRE(all.certified.has_value());
  CHECK(all.certified->prov == all.log[0].prov);

  TheoremRun r5 = prove_rank21(5);
  REQUIRE(r5.certified.has_value());
  CHECK(r5.certified->n1 == 126);

  CHECK(throws_with(Errc::NonPrime, [] { prove_rank21(4); }));
  CHECK(throws_with(Errc::UnsupportedCharacteristic, [] { prove_rank21(2); }));
  CHECK(throws_with(Errc::UnsupportedCharacteristic, [] { prove_rank21(3); }));
}

TEST_CASE("product-surface consequence check") {
  for (uint64_t p : {7ull, 11ull, 23ull}) {
    KummerReport r = verify_kummer_ranks(p);
    CHECK(r.applicable);
    CHECK(r.pass);
    CHECK(r.n1 == int64_t(1 + 18 * p + p * p));
    CHECK(r.n2 == int64_t(1 + 22 * p * p + p * p * p * p));
    CHECK(r.n1 == r.expected1);
    CHECK(r.n2 == r.expected2);
  }
  {
    KummerReport r = verify_kummer_ranks(7);
    CHECK(r.curve_a == 6);
    CHECK(r.curve_b == 0);
    CHECK(r.n1 == 176);
    CHECK(r.n2 == 3480);
  }
  {
    // p = 1 (mod 4): no trace-zero curve has all of its 2-torsion rational,
    // so the check cannot run; it reports that instead of failing.
    KummerReport r = verify_kummer_ranks(13);
    CHECK(!r.applicable);
    CHECK(r.pass);
    CHECK(!r.note.empty());
  }
  CHECK_NOTHROW(kummer_report_check(7, 176, 3480));
  CHECK(throws_with(Errc::ReportedMismatch, [] { kummer_report_check(7, 177, 3480); }));
  CHECK(throws_with(Errc::ReportedMismatch, [] { kummer_report_check(7, 176, 3481); }));
}

TEST_CASE("splitting behaviour of small discriminants") {
  CHECK(inert_check(-3, 11) == SplitBehavior::Inert);
  CHECK(inert_check(-3, 7) == SplitBehavior::Split);
  CHECK(inert_check(-3, 3) == SplitBehavior::Ramified);
  CHECK(inert_check(-4, 13) == SplitBehavior::Split);
  CHECK(inert_check(-4, 11) == SplitBehavior::Inert);
  CHECK(inert_check(-4, 7) == SplitBehavior::Inert);
}

TEST_CASE("trace zero iff inert, for both CM discriminants") {
  for (int64_t d : {int64_t(-3), int64_t(-4)}) {
    auto rows = lemma_crosscheck(d, 200);
    CHECK(!rows.empty());
    for (const CrosscheckRow& r : rows) {
      CHECK(r.agree);
      CHECK(r.behavior != SplitBehavior::Ramified);
      CHECK(r.trace_zero == (r.behavior == SplitBehavior::Inert));
    }
    CHECK_NOTHROW(assert_crosscheck(rows));
    auto bad = rows;
    bad[0].agree = false;
    CHECK(throws_with(Errc::CrosscheckFailed, [&] { assert_crosscheck(bad); }));
  }
}

TEST_CASE("sweeping a prime range") {
  auto rows = sweep(2, 10);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].p == 2);
  CHECK(!rows[0].supported);
  CHECK(!rows[0].run.has_value());
  CHECK(rows[1].p == 3);
  CHECK(!rows[1].supported);
  CHECK(rows[2].p == 5);
  CHECK(rows[2].supported);
  REQUIRE(rows[2].run.has_value());
  CHECK(rows[2].run->certified.has_value());
  CHECK(rows[3].p == 7);

  CHECK(throws_with(Errc::BadInput, [] { sweep(5, 201); }));
}

TEST_CASE("the full acceptance range certifies at every prime") {
  auto rows = sweep(5, 47);
  std::vector<uint64_t> primes;
  for (const SweepRow& r : rows) primes.push_back(r.p);
  CHECK(primes == std::vector<uint64_t>{5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47});
  for (const SweepRow& r : rows) {
    CHECK(r.supported);
    REQUIRE(r.run.has_value());
    CHECK(!r.run->falsified);
    REQUIRE(r.run->certified.has_value());
    const Certificate& c = *r.run->certified;
    int64_t p = int64_t(r.p);
    CHECK(c.verdict == Verdict::Certified21);
    CHECK(c.n1 == 1 + 20 * p + p * p);
    CHECK(c.n2 == 1 + 22 * p * p + p * p * p * p);
    CHECK(c.rho_fp == 21);
    CHECK(c.rho_fp2 == 22);
  }
}

TEST_CASE("verdict strings") {
  Certificate c;
  c.verdict = Verdict::Certified21;
  CHECK(verdict_string(c) == "CERTIFIED_21");
  c.verdict = Verdict::CertifiedOther;
  c.plus_p = 20;
  CHECK(verdict_string(c) == "CERTIFIED_OTHER(20)");
  c.verdict = Verdict::Inconsistent;
  CHECK(verdict_string(c) == "INCONSISTENT");
}

TEST_CASE("JSON serialization is stable and invertible") {
  auto models = candidate_models(find_supersingular(11));
  Certificate c = certify_model(models[0]);

  const std::string expected_compact =
      "{\"p\":11,"
      "\"model\":{\"curve\":{\"a\":0,\"b\":1,\"j\":0},"
      "\"params\":{\"B_sign\":1,\"c\":1,\"twist_d\":1},"
      "\"a4_coeffs\":[],"
      "\"a6_coeffs\":[\"0\",\"0\",\"0\",\"0\",\"0\",\"1\",\"9\",\"1\"]},"
      "\"fibers\":["
      "{\"place\":\"t=0\",\"type\":\"II*\",\"euler\":10,\"split\":null},"
      "{\"place\":\"t=1\",\"type\":\"IV\",\"euler\":4,\"split\":true},"
      "{\"place\":\"t=inf\",\"type\":\"II*\",\"euler\":10,\"split\":null}],"
      "\"counts\":{\"N1\":342,\"N2\":17304},"
      "\"traces\":{\"t1\":220,\"t2\":2662},"
      "\"eigen\":{\"plus_p\":21,\"minus_p\":1},"
      "\"rho_fp\":21,"
      "\"rho_fp2\":22,"
      "\"artin_invariant\":\"1 (cited)\","
      "\"verdict\":\"CERTIFIED_21\"}";
  CHECK(cert_to_json(c).dump() == expected_compact);

  // Round trip through the parser recovers the identical structure.
  Certificate back = cert_from_json(cert_to_json(c));
  CHECK(back == c);

  // Rendering is deterministic: a freshly recomputed certificate serializes
  // to the identical bytes, ending in a newline.
  Certificate c2 = certify_model(candidate_models(find_supersingular(11))[0]);
  CHECK(cert_json_text(c) == cert_json_text(c2));
  REQUIRE(!cert_json_text(c).empty());
  CHECK(cert_json_text(c).back() == '\n');
}

TEST_CASE("CSV rendering") {
  CHECK(csv_header() ==
        "p,b_sign,c,twist_d,curve_a,curve_b,n1,n2,t1,t2,plus_p,minus_p,rho_fp,"
        "rho_fp2,verdict");
  Certificate c = certify_model(candidate_models(find_supersingular(11))[0]);
  CHECK(cert_csv_row(c) == "11,1,1,1,0,1,342,17304,220,2662,21,1,21,22,CERTIFIED_21");
}

TEST_CASE("text rendering mentions the defining facts") {
  Certificate c = certify_model(candidate_models(find_supersingular(11))[0]);
  std::string t = cert_text(c);
  CHECK(t.find("CERTIFIED_21") != std::string::npos);
  CHECK(t.find("342") != std::string::npos);
  CHECK(t.find("17304") != std::string::npos);
  CHECK(t.find("II*") != std::string::npos);
}

TEST_CASE("certificate cache") {
  PencilProvenance prov;
  prov.kind = PencilKind::Inose;
  prov.b_sign = 1;
  prov.c = 1;
  prov.twist_d = 1;
  CHECK(cache_key(11, prov) == "cert-v1-p11-B+1-c1-d1.json");
  prov.b_sign = -1;
  prov.c = 8;
  prov.twist_d = 2;
  CHECK(cache_key(13, prov) == "cert-v1-p13-B-1-c8-d2.json");

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "artin1-cache-test";
  fs::remove_all(dir);
  CHECK(!cache_load(dir.string(), "cert-v1-p11-B+1-c1-d1.json").has_value());
  cache_store(dir.string(), "cert-v1-p11-B+1-c1-d1.json", "{\"p\":11}\n");
  auto got = cache_load(dir.string(), "cert-v1-p11-B+1-c1-d1.json");
  REQUIRE(got.has_value());
  CHECK(*got == "{\"p\":11}\n");
  fs::remove_all(dir);
}
