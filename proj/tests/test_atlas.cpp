#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "domroots/atlas.hpp"
#include "domroots/dompoly.hpp"
#include "domroots/errors.hpp"

using namespace domroots;

namespace {

const Rational kTol(1, 1000000000);

std::string cloud(const GraphStream& s, bool parallel, int threads = 0, std::size_t chunk = 1 << 14) {
  SweepOptions opts;
  opts.threads = threads;
  opts.chunk = chunk;
  std::ostringstream out;
  write_root_cloud(s, opts, out, parallel);
  return out.str();
}

}  // namespace

TEST_CASE("labeled enumeration sizes") {
  CHECK(GraphStream::all_labeled(2).size() == 2);
  CHECK(GraphStream::all_labeled(3).size() == 8);
  CHECK(GraphStream::all_labeled(4).size() == 64);
  CHECK_THROWS_AS(GraphStream::all_labeled(8), CapacityError);
  CHECK(GraphStream::all_labeled(8, 8).size() == (std::uint64_t{1} << 28));
}

TEST_CASE("dedup keeps one graph per signature") {
  const auto d = GraphStream::dedup(4);
  CHECK(d.size() == 11);  // the signature separates all 11 graphs of order 4
  CHECK(GraphStream::dedup(3).size() == 4);
}

TEST_CASE("corpus files") {
  const std::string path = "test_atlas_corpus.g6";
  {
    std::ofstream f(path);
    f << "A_\nBo\n\n@\n";
  }
  CHECK(GraphStream::corpus_file(path).size() == 3);
  CHECK(GraphStream::corpus_file(path, 3).size() == 1);
  std::remove(path.c_str());
  CHECK_THROWS_AS(GraphStream::corpus_file("/nonexistent/file.g6"), DomainError);
}

TEST_CASE("order-2 cloud") {
  const std::string csv = cloud(GraphStream::all_labeled(2), false);
  CHECK(csv ==
        "graph6,n,root_lo,root_hi\n"
        "A?,2,0.000000000000,0.000000000000\n"
        "A_,2,-2.000000000000,-2.000000000000\n"
        "A_,2,0.000000000000,0.000000000000\n");
}

TEST_CASE("fast path matches exact isolation") {
  std::mt19937_64 rng(23);
  int fast_hits = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 9);
    Graph g(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (rng() % 2) g.add_edge(i, j);
    const auto c = dom_coeffs_int64(g);
    const auto exact = exact_real_roots(Poly::from_int64(c), kTol);
    const auto fast = fast_real_roots(c, kTol);
    if (!fast) continue;
    ++fast_hits;
    REQUIRE(fast->size() == exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
      const auto& f = (*fast)[i];
      CHECK(f.interval.width() <= kTol);
      CHECK(abs(f.midpoint() - exact[i].midpoint()) <= 2 * kTol);
      if (f.note != Certification::kExact) CHECK(f.sign_lo * f.sign_hi == -1);
    }
  }
  CHECK(fast_hits > 5000);
}

TEST_CASE("double roots force escalation") {
  // x (x + 1)^2 has a double root; floating signs near -1 are inconclusive
  const std::vector<std::int64_t> c{0, 1, 2, 1};
  CHECK_FALSE(fast_real_roots(c, kTol).has_value());
  bool escalated = false;
  const auto r = certified_real_roots(c, kTol, &escalated);
  CHECK(escalated);
  REQUIRE(r.size() == 2);
  CHECK(r[0].interval.contains(-1));
}

TEST_CASE("parallel sweep is byte-identical to the serial reference") {
  for (int n : {3, 4, 5}) {
    const auto s = GraphStream::all_labeled(n);
    const std::string ref = cloud(s, false);
    CHECK(cloud(s, true, 1) == ref);
    CHECK(cloud(s, true, 4, 37) == ref);
  }
}

TEST_CASE("order <= 5 sign facts") {
  for (int n = 1; n <= 5; ++n) {
    SweepOptions opts;
    for (const auto& r : root_cloud(GraphStream::all_labeled(n), opts)) {
      CHECK(r.root_hi <= 0);
      CHECK_FALSE((r.root_lo <= -1 && -1 <= r.root_hi));
    }
  }
}

TEST_CASE("smallest roots per order") {
  TableOptions opts;
  opts.exhaustive_max_order = 5;
  const auto rows = smallest_root_table(6, opts);
  REQUIRE(rows.size() == 6);
  CHECK(rows[1].smallest.interval.contains(-2));
  CHECK_FALSE(rows[1].note.empty());
  CHECK(std::fabs(rows[2].smallest.midpoint().get_d() + 2.618033989) < 5e-9);
  CHECK(std::fabs(rows[4].smallest.midpoint().get_d() + 3.629658127) < 5e-9);
  for (int n = 2; n <= 5; ++n) {
    CHECK(rows[n - 1].exhaustive);
    CHECK(rows[n - 1].matches_star);
  }
  CHECK_FALSE(rows[5].exhaustive);
  const std::string csv = table_csv(rows);
  CHECK(csv.rfind("n,root_lo,root_hi,graph6,exhaustive\n", 0) == 0);
  CHECK(csv.find(",false\n") != std::string::npos);
}

TEST_CASE("growth against n / ln n") {
  const auto rows = growth_check(200);
  CHECK(rows.front().n == 3);
  CHECK(rows.front().ratio == doctest::Approx(0.958).epsilon(1e-3));
  CHECK(rows[6].magnitude == doctest::Approx(5.309330065).epsilon(1e-9));
  for (const auto& r : rows)
    if (r.n >= 10) CHECK((r.ratio > 0.5 && r.ratio < 2.0));
  CHECK_THROWS_AS(growth_check(2), DomainError);
}
