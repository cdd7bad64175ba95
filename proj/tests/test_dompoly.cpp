#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "domroots/dompoly.hpp"
#include "domroots/errors.hpp"
#include "domroots/kernels.hpp"

using namespace domroots;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

const Poly kK2{0, 2, 1};

}  // namespace

TEST_CASE("brute force on small graphs") {
  CHECK(dom_poly_bruteforce(complete_graph(1)) == Poly{0, 1});
  CHECK(dom_poly_bruteforce(complete_graph(2)) == kK2);
  CHECK(dom_poly_bruteforce(cycle_graph(4)) == Poly{0, 0, 6, 4, 1});
  CHECK(dom_poly_bruteforce(star(3)) == Poly{0, 1, 3, 4, 1});
  CHECK_THROWS_AS(dom_poly_bruteforce(empty_graph(25)), CapacityError);
}

TEST_CASE("inclusion-exclusion hand cases") {
  CHECK(dom_poly_inclusion_exclusion(complete_graph(1)) == Poly{0, 1});
  CHECK(dom_poly_inclusion_exclusion(complete_graph(2)) == kK2);
  CHECK_THROWS_AS(dom_poly_inclusion_exclusion(empty_graph(41)), CapacityError);
}

TEST_CASE("inclusion-exclusion equals brute force on every graph of order <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      REQUIRE(dom_poly_inclusion_exclusion(g) == dom_poly_bruteforce(g));
    }
  }
}

TEST_CASE("serial and OpenMP kernels agree") {
  std::mt19937_64 rng(3);
  for (int n : {1, 5, 12, 13, 16, 20}) {
    for (double p : {0.15, 0.5}) {
      const Graph g = random_graph(rng, n, p);
      const Poly serial = dom_poly_inclusion_exclusion_serial(g);
      CHECK(dom_poly_inclusion_exclusion_omp(g, 1) == serial);
      CHECK(dom_poly_inclusion_exclusion_omp(g, 3) == serial);
      CHECK(kernels::undominated_histogram_omp(g, 2) == kernels::undominated_histogram_serial(g));
      if (n <= 16) CHECK(dom_poly_bruteforce(g) == serial);
    }
  }
}

TEST_CASE("machine-word coefficients") {
  const auto c = dom_coeffs_int64(cycle_graph(4));
  CHECK(c == std::vector<std::int64_t>{0, 0, 6, 4, 1});
  // every nonempty subset of K_n dominates
  const auto k22 = dom_coeffs_int64(complete_graph(22));
  CHECK(k22[11] == 705432);
}

TEST_CASE("structural invariants") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(rng, n);
    const Poly d = dom_poly_bruteforce(g);
    CHECK(dom_invariant_violations(d, n).empty());
    CHECK(d.degree() == n);
    CHECK(d.leading() == 1);
    // superset monotonicity d_{k+1} (k+1) >= d_k (n-k) from the domination number on
    const int gamma = d.low_order();
    for (int k = gamma; k < n; ++k) CHECK(d.coeff(k + 1) * (k + 1) >= d.coeff(k) * (n - k));
  }
  CHECK_FALSE(dom_invariant_violations(Poly{0, 2, 2}, 2).empty());
  CHECK_FALSE(dom_invariant_violations(Poly{1, 2, 1}, 2).empty());
}

TEST_CASE("-1 is never a root for orders <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto c = dom_coeffs_int64(graph_from_edge_mask(n, mask));
      std::int64_t v = 0;
      for (int k = n; k >= 0; --k) v = -v + c[k];
      REQUIRE(v != 0);
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(dom_poly_closed_form({ClosedFormKind::kStar, 1}) == kK2);
  CHECK(dom_poly_closed_form({ClosedFormKind::kCompleteBipartite, 2, 2}) == Poly{0, 0, 6, 4, 1});
  CHECK(dom_poly_closed_form({ClosedFormKind::kComplete, 3}) == Poly{0, 3, 3, 1});
  CHECK_THROWS_AS(dom_poly_closed_form({ClosedFormKind::kStar, 0}), DomainError);
  CHECK_THROWS_AS(dom_poly_closed_form({ClosedFormKind::kCompleteBipartite, 0, 3}), DomainError);

  for (int k = 1; k <= 11; ++k) {
    CHECK(dom_poly_closed_form({ClosedFormKind::kStar, k}) == dom_poly_bruteforce(star(k)));
    CHECK(dom_poly_closed_form({ClosedFormKind::kComplete, k}) == dom_poly_bruteforce(complete_graph(k)));
    for (int l = 1; k + l <= 12; ++l) {
      CHECK(dom_poly_closed_form({ClosedFormKind::kCompleteBipartite, k, l}) ==
            dom_poly_bruteforce(complete_bipartite(k, l)));
    }
  }
  for (int l = 1; l <= 10; ++l) {
    CHECK(dom_poly_closed_form({ClosedFormKind::kK2ell, l}) == dom_poly_bruteforce(complete_bipartite(2, l)));
  }
  for (int k = 1; k <= 6; ++k) {
    CHECK(dom_poly_closed_form({ClosedFormKind::kKkk, k}) == dom_poly_bruteforce(complete_bipartite(k, k)));
  }
}

TEST_CASE("closed forms evaluate without expansion") {
  std::mt19937_64 rng(9);
  for (const ClosedFormSpec spec : {ClosedFormSpec{ClosedFormKind::kStar, 7}, ClosedFormSpec{ClosedFormKind::kK2ell, 5},
                                    ClosedFormSpec{ClosedFormKind::kKkk, 3},
                                    ClosedFormSpec{ClosedFormKind::kCompleteBipartite, 3, 4},
                                    ClosedFormSpec{ClosedFormKind::kComplete, 6}}) {
    const Poly p = dom_poly_closed_form(spec);
    for (int rep = 0; rep < 10; ++rep) {
      Rational y(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9));
      y.canonicalize();
      CHECK(eval_closed_form(spec, y) == eval_rational(p, y));
    }
  }
}

TEST_CASE("composition with cliques") {
  CHECK(compose_with_complete(kK2, 2) == Poly{0, 4, 6, 4, 1});
  const Poly s5 = dom_poly_closed_form({ClosedFormKind::kStar, 5});
  CHECK(compose_with_complete(s5, 1) == s5);
  const Poly p2 = dom_poly_closed_form({ClosedFormKind::kStar, 2});
  CHECK(compose_with_complete(p2, 3) == dom_poly_bruteforce(substitute_complete(star(2), 3)));

  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int m = 2 + static_cast<int>(rng() % 2);
    const Graph g = random_graph(rng, n);
    const Poly d = dom_poly_bruteforce(g);
    const Poly lhs = compose_with_complete(d, m);
    CHECK(lhs == dom_poly_bruteforce(substitute_complete(g, m)));
    CHECK(lhs == compose_binomial(d, m));
  }
}

TEST_CASE("Kronecker and binomial composition agree") {
  for (const ClosedFormSpec spec : {ClosedFormSpec{ClosedFormKind::kStar, 40}, ClosedFormSpec{ClosedFormKind::kK2ell, 17},
                                    ClosedFormSpec{ClosedFormKind::kKkk, 9}}) {
    const Poly p = dom_poly_closed_form(spec);
    for (int m : {1, 2, 3, 7, 15}) CHECK(compose_kronecker(p, m) == compose_binomial(p, m));
  }
}

TEST_CASE("exact evaluation and products") {
  CHECK(eval_rational(kK2, -2) == 0);
  CHECK(eval_rational(kK2, -1) == -1);
  CHECK(eval_rational(dom_poly_bruteforce(complete_bipartite(2, 3)), -1) == 1);
  CHECK(multiply(Poly{0, 1}, Poly{0, 1}) == Poly{0, 0, 1});
  CHECK(multiply(kK2, kK2) == dom_poly_bruteforce(disjoint_union(complete_graph(2), complete_graph(2))));
  CHECK(multiply(kK2, Poly{1}) == kK2);
}
