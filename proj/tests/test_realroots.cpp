#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "domroots/dompoly.hpp"
#include "domroots/errors.hpp"
#include "domroots/realroots.hpp"

using namespace domroots;

namespace {

const Rational kTol(1, 1000000000);

bool close_to(const RootEnclosure& e, double v, double eps = 1e-8) {
  return std::fabs(e.midpoint().get_d() - v) < eps;
}

// Every enclosure holds exactly one distinct root and the signs match.
void check_enclosures(const Poly& p, const std::vector<RootEnclosure>& roots, const Rational& tol) {
  const SturmChain chain(p);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto& e = roots[i];
    CHECK(e.interval.width() <= tol);
    if (i > 0) CHECK(roots[i - 1].interval.hi < e.interval.lo);
    if (e.note == Certification::kExact) {
      CHECK(e.interval.lo == e.interval.hi);
      CHECK(p.sign_at(e.interval.lo) == 0);
      continue;
    }
    CHECK(count_roots_in(chain, e.interval) == 1);
    CHECK(e.sign_lo == p.sign_at(e.interval.lo));
    CHECK(e.sign_hi == p.sign_at(e.interval.hi));
    if (e.note == Certification::kSimpleCertified) CHECK(e.sign_lo * e.sign_hi == -1);
  }
}

}  // namespace

TEST_CASE("Sturm chains") {
  const SturmChain c(Poly{-1, 0, 1});
  REQUIRE(c.polys().size() == 3);
  CHECK(c.polys()[0] == Poly{-1, 0, 1});
  CHECK(c.polys()[1].degree() == 1);
  CHECK(c.polys()[1].leading() > 0);
  CHECK(c.polys()[2].degree() == 0);
  CHECK(c.polys()[2].leading() > 0);

  const SturmChain lin(Poly{0, 1});
  CHECK(lin.polys().size() == 2);

  const SturmChain sq(Poly{1, -2, 1});
  CHECK(sq.square_free() == Poly{-1, 1});
  CHECK(sq.polys().size() == 2);
  CHECK(sq.total_real_roots() == 1);

  CHECK_THROWS_AS(SturmChain(Poly{}), DomainError);
}

TEST_CASE("root counts") {
  const SturmChain c(Poly{-1, 0, 1});
  CHECK(count_roots_in(c, {-2, 0}) == 1);
  CHECK(count_roots_in(c, {-2, 2}) == 2);
  CHECK(count_roots_in(c, {Rational(1, 2), Rational(1, 2)}) == 0);
  CHECK_THROWS_AS(count_roots_in(c, {-1, 0}), EndpointIsRoot);

  const SturmChain k2(Poly{0, 2, 1});
  CHECK(count_roots_in(k2, {-3, -1}) == 1);
}

TEST_CASE("isolation") {
  const Poly k2{0, 2, 1};
  auto r = isolate_real_roots(k2, {-10, 1}, kTol);
  REQUIRE(r.size() == 2);
  CHECK(r[0].interval.contains(-2));
  CHECK(r[1].interval.contains(0));
  check_enclosures(k2, r, kTol);

  const Poly p3{0, 1, 3, 1};  // D(K_{1,2})
  r = isolate_real_roots(p3, {-10, 0}, kTol);
  REQUIRE(r.size() == 3);
  CHECK(close_to(r[0], -2.618033988749895));
  CHECK(close_to(r[1], -0.3819660112501051));
  CHECK(r[2].note == Certification::kExact);
  check_enclosures(p3, r, kTol);

  CHECK(isolate_real_roots(Poly{1, 0, 1}, {-100, 100}, kTol).empty());
  CHECK_THROWS_AS(isolate_real_roots(k2, {-1, 1}, 0), DomainError);
}

TEST_CASE("multiple roots are counted once") {
  // (x + 1)^2 (x - 3)
  const Poly p = Poly{1, 1} * Poly{1, 1} * Poly{-3, 1};
  const auto r = isolate_real_roots(p, {-5, 5}, Rational(1, 1000));
  REQUIRE(r.size() == 2);
  CHECK(r[0].interval.contains(-1));
  CHECK(r[1].interval.contains(3));
  check_enclosures(p, r, Rational(1, 1000));
}

TEST_CASE("isolation is complete on random domination polynomials") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (rng() % 3 == 0) g.add_edge(i, j);
    const Poly d = dom_poly_bruteforce(g);
    const Rational b = cauchy_bound(d);
    const auto roots = isolate_real_roots(d, {-b, b}, kTol);
    CHECK(static_cast<int>(roots.size()) == SturmChain(d).total_real_roots());
    check_enclosures(d, roots, kTol);
    for (const auto& e : roots) CHECK(e.interval.hi <= 0);
  }
}

TEST_CASE("star roots") {
  const RootEnclosure r1 = star_root(1, kTol);
  CHECK(r1.note == Certification::kExact);
  CHECK(r1.interval.lo == 2);

  const double table[] = {2.618033989, 3.147899036, 3.629658127, 4.079595623,
                          4.506323246, 4.915076186, 5.309330065};
  for (int k = 2; k <= 8; ++k) {
    const RootEnclosure r = star_root(k, kTol);
    CHECK(r.interval.width() <= kTol);
    CHECK(std::fabs(r.midpoint().get_d() - table[k - 2]) < 5e-9);
  }
  for (int k = 1; k <= 60; ++k) CHECK(star_companion_variations(k) == 1);
}

TEST_CASE("star roots agree with generic isolation") {
  for (int k = 2; k <= 12; ++k) {
    const Poly d = dom_poly_closed_form({ClosedFormKind::kStar, k});
    const auto roots = isolate_real_roots(d, {-cauchy_bound(d), -1}, kTol);
    REQUIRE_FALSE(roots.empty());
    const RootEnclosure s = star_domination_root(k, kTol);
    CHECK(abs(roots.front().midpoint() - s.midpoint()) <= kTol);
    CHECK(s.sign_lo * s.sign_hi == -1);
  }
}

TEST_CASE("Lambert W") {
  CHECK(lambert_w(0.0) == 0.0);
  CHECK(lambert_w(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lambert_w(1.0) == doctest::Approx(0.5671432904097839).epsilon(1e-14));
  for (double x : {0.5, 1.0, std::exp(1.0), 10.0, 1e6, 1e-8, 0.9, 2.0}) {
    const double w = lambert_w(x);
    CHECK(std::fabs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, x));
  }
  CHECK_THROWS_AS(lambert_w(-0.1), DomainError);
}

TEST_CASE("star root estimate") {
  CHECK(std::fabs(star_root_estimate(2) - star_root(2, kTol).midpoint().get_d()) < 0.5);
  const double r100 = star_root(100, kTol).midpoint().get_d();
  const double r1000 = star_root(1000, kTol).midpoint().get_d();
  const double rel100 = std::fabs(star_root_estimate(100) - r100) / r100;
  const double rel1000 = std::fabs(star_root_estimate(1000) - r1000) / r1000;
  CHECK(rel1000 < rel100);
}

TEST_CASE("star gap report") {
  const StarGapReport rep = star_gap_report(40, kTol);
  REQUIRE(rep.records.size() == 40);
  CHECK(rep.records[0].gap == doctest::Approx(0.618034).epsilon(1e-5));
  CHECK(rep.strictly_increasing);
  CHECK(rep.gap_below_four_from == 1);
  const std::string csv = star_gap_csv(rep);
  CHECK(csv.rfind("k,r_k_lo,r_k_hi,gap,estimate,abs_err\n", 0) == 0);
  CHECK_THROWS_AS(star_gap_report(1, kTol), DomainError);
}
