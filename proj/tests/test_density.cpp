#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domroots/density.hpp"
#include "domroots/errors.hpp"
#include "domroots/io.hpp"

using namespace domroots;

namespace {

Rational q(const char* s) { return parse_rational(s); }

bool check_passed(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.passed;
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_CASE("target intervals") {
  auto iv = target_interval(q("-1.5"), q("0.1"), 1);
  CHECK(iv.lo == q("-1.6"));
  CHECK(iv.hi == q("-1.4"));
  iv = target_interval(q("-1.5"), q("0.1"), 3);
  CHECK(iv.lo == q("-1.216"));
  CHECK(iv.hi == q("-1.064"));
  iv = target_interval(-3, q("0.5"), 3);
  CHECK(iv.lo == q("-16.625"));
  CHECK(iv.hi == q("-4.375"));
  CHECK_THROWS_AS(target_interval(-3, q("0.5"), 2), DomainError);
  CHECK_THROWS_AS(target_interval(-3, 0, 3), DomainError);
}

TEST_CASE("case-2 windows widen with m") {
  for (const char* z : {"-2.5", "-5", "-10"}) {
    for (const char* e : {"0.1", "0.01"}) {
      for (int m = 1; m <= 15; m += 2) {
        const auto a = target_interval(q(z), q(e), m);
        const auto b = target_interval(q(z), q(e), m + 2);
        CHECK(a.lo < a.hi);
        CHECK(b.width() > a.width());
      }
    }
  }
}

TEST_CASE("exact shortcuts") {
  auto c = construct_witness(0, q("0.5"));
  CHECK(c.family == WitnessFamily::kExactK2);
  CHECK(c.case_tag == CaseTag::kExact);
  CHECK(c.enclosure.interval.lo == 0);
  CHECK(c.enclosure.interval.hi == 0);
  CHECK(verify_certificate(c).all_passed());

  c = construct_witness(q("-2.05"), q("0.1"));
  CHECK(c.family == WitnessFamily::kExactK2);
  CHECK(c.enclosure.interval.lo == -2);
  CHECK(verify_certificate(c).all_passed());
}

TEST_CASE("case 1.1 window") {
  const auto c = construct_witness(q("-1.5"), q("0.05"));
  CHECK(c.family == WitnessFamily::kK2ell);
  CHECK(c.case_tag == CaseTag::kCase11);
  CHECK(c.param % 2 == 1);
  CHECK(c.m % 2 == 1);
  CHECK(c.enclosure.interval.strictly_inside(q("-1.55"), q("-1.45")));
  const auto report = verify_certificate(c);
  CHECK(report.all_passed());
}

TEST_CASE("case 1.2 window") {
  const auto c = construct_witness(q("-0.25"), q("0.1"));
  CHECK(c.family == WitnessFamily::kKkk);
  CHECK(c.case_tag == CaseTag::kCase12);
  CHECK(c.param % 2 == 1);
  CHECK(verify_certificate(c).all_passed());
}

TEST_CASE("case 2 window") {
  const auto c = construct_witness(-7, q("0.5"));
  CHECK(c.family == WitnessFamily::kStar);
  CHECK(c.case_tag == CaseTag::kCase2);
  CHECK(c.enclosure.interval.strictly_inside(q("-7.5"), q("-6.5")));
  CHECK(verify_certificate(c).all_passed());
}

TEST_CASE("windows straddling -1 keep their left part") {
  const auto c = construct_witness(q("-1"), q("0.3"));
  CHECK(c.case_tag == CaseTag::kCase11);
  CHECK(c.enclosure.interval.hi < -1);
  CHECK(verify_certificate(c).all_passed());
}

TEST_CASE("small witnesses match brute force") {
  // m = 1 or tiny parameters give graphs of <= 20 vertices
  const auto c = construct_witness(q("-1.5"), q("0.1"));
  REQUIRE(family_degree(c.family, c.param) * c.m <= 20);
  const auto report = verify_certificate(c);
  CHECK(check_passed(report, "bruteforce-crosscheck"));
}

TEST_CASE("determinism") {
  const auto a = construct_witness(q("-1.9"), q("0.1"));
  const auto b = construct_witness(q("-1.9"), q("0.1"));
  CHECK(certificate_to_json(a) == certificate_to_json(b));
}

TEST_CASE("bad queries") {
  CHECK_THROWS_AS(construct_witness(1, q("0.1")), DomainError);
  CHECK_THROWS_AS(construct_witness(-1, 0), DomainError);
  SearchBudget tiny{3, 3, 10};
  try {
    construct_witness(-10, q("0.01"), tiny);
    FAIL("expected budget exhaustion");
  } catch (const BudgetExhausted& e) {
    CHECK(e.last_diagonal() == 6);
    CHECK(e.cells_examined() >= 0);
  }
}

TEST_CASE("tampered certificates are rejected") {
  const auto good = construct_witness(q("-1.5"), q("0.1"));
  REQUIRE(verify_certificate(good).all_passed());

  auto shifted = good;
  shifted.enclosure.interval.lo += 1;
  shifted.enclosure.interval.hi += 1;
  CHECK_FALSE(check_passed(verify_certificate(shifted), "containment"));

  auto even = good;
  even.m = 2;
  CHECK_FALSE(check_passed(verify_certificate(even), "parity-m"));

  auto param = good;
  param.param += 1;
  CHECK_FALSE(check_passed(verify_certificate(param), "parity-param"));

  auto family = good;
  family.family = WitnessFamily::kKkk;
  CHECK_FALSE(check_passed(verify_certificate(family), "case-family"));

  auto signs = good;
  signs.enclosure.sign_lo = -signs.enclosure.sign_lo;
  CHECK_FALSE(verify_certificate(signs).all_passed());

  auto degree = good;
  degree.composed_degree += 1;
  CHECK_FALSE(check_passed(verify_certificate(degree), "composed-degree"));

  // a root-free sub-interval keeps one sign
  auto narrow = good;
  narrow.enclosure.interval.hi = narrow.enclosure.interval.lo;
  narrow.enclosure.interval.lo -= Rational(1, 1000);
  CHECK_FALSE(check_passed(verify_certificate(narrow), "sign-change"));
}

TEST_CASE("certificate JSON round trip") {
  const auto c = construct_witness(q("-2.5"), q("0.1"));
  const Json j = certificate_to_json(c);
  CHECK(j["query"]["z"] == "-5/2");
  CHECK(j["query"]["epsilon"] == "1/10");
  CHECK(j["family"]["tag"] == "star");
  const auto back = certificate_from_json(Json::parse(j.dump()));
  CHECK(certificate_to_json(back) == j);
  CHECK(verify_certificate(back).all_passed());

  Json broken = j;
  broken.erase("m");
  CHECK_THROWS_AS(certificate_from_json(broken), ParseError);
  broken = j;
  broken["family"]["tag"] = "petersen";
  CHECK_THROWS_AS(certificate_from_json(broken), ParseError);
}

TEST_CASE("polynomial JSON round trip") {
  const Poly p = compose_with_complete(dom_poly_closed_form({ClosedFormKind::kStar, 30}), 3);
  const Json j = poly_to_json(p);
  CHECK(j["n"] == 93);
  CHECK(poly_from_json(Json::parse(j.dump())) == p);
  CHECK_THROWS_AS(poly_from_json(Json{{"n", 2}, {"coeffs", {"0", "1"}}}), ParseError);
  CHECK_THROWS_AS(poly_from_json(Json{{"n", 1}, {"coeffs", {"0", "x"}}}), ParseError);
}

TEST_CASE("tag strings") {
  for (auto f : {WitnessFamily::kExactK2, WitnessFamily::kK2ell, WitnessFamily::kKkk, WitnessFamily::kStar})
    CHECK(witness_family_from_string(to_string(f)) == f);
  for (auto c : {CaseTag::kCase11, CaseTag::kCase12, CaseTag::kCase2, CaseTag::kExact})
    CHECK(case_tag_from_string(to_string(c)) == c);
  CHECK(to_string(CaseTag::kCase11) == "case-1.1");
  CHECK(to_string(WitnessFamily::kK2ell) == "K_2_ell");
}
