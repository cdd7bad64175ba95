#include "domroots/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "domroots/dompoly.hpp"
#include "domroots/errors.hpp"

namespace domroots {

EnumerationMode enumeration_mode_from_string(const std::string& s) {
  if (s == "all_labeled" || s == "all") return EnumerationMode::kAllLabeled;
  if (s == "dedup") return EnumerationMode::kDedup;
  if (s == "corpus_file" || s == "corpus") return EnumerationMode::kCorpusFile;
  throw ParseError("unknown enumeration mode '" + s + "'", 0);
}

// --- graph streams ---------------------------------------------------------

namespace {

void check_labeled_order(int n, int max_order) {
  if (n < 1) throw DomainError("enumeration order must be >= 1");
  if (n > max_order) {
    throw CapacityError("labeled enumeration of order " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(max_order) + " (2^" + std::to_string(n * (n - 1) / 2) +
                        " graphs)");
  }
  if (n > 11) throw CapacityError("labeled enumeration supports n <= 11");
}

}  // namespace

GraphStream GraphStream::all_labeled(int n, int max_order) {
  check_labeled_order(n, max_order);
  GraphStream s;
  s.labeled_order_ = n;
  s.size_ = std::uint64_t{1} << (n * (n - 1) / 2);
  return s;
}

GraphStream GraphStream::dedup(int n, int max_order) {
  const GraphStream all = all_labeled(n, max_order);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Graph> kept;
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    Graph g = all.at(i);
    if (seen.insert(refinement_signature(g)).second) kept.push_back(g);
  }
  return from_graphs(std::move(kept));
}

GraphStream GraphStream::corpus_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read corpus file '" + path + "'");
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g = from_graph6(line);
    if (n > 0 && g.order() != n) continue;
    graphs.push_back(g);
  }
  return from_graphs(std::move(graphs));
}

GraphStream GraphStream::from_graphs(std::vector<Graph> graphs) {
  GraphStream s;
  s.size_ = graphs.size();
  s.graphs_ = std::move(graphs);
  return s;
}

Graph GraphStream::at(std::uint64_t i) const {
  if (labeled_order_ > 0) return graph_from_edge_mask(labeled_order_, i);
  return graphs_.at(i);
}

// --- root scans ------------------------------------------------------------

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double abs_sum(const std::vector<double>& c, double x) {
  double acc = 0.0;
  const double ax = std::fabs(x);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::fabs(*it);
  return acc;
}

// Sign of c(x) when it clears 10^3 machine epsilons times the Horner
// rounding bound; 0 when inconclusive.
int float_sign(const std::vector<double>& c, double x) {
  const double f = horner(c, x);
  const double deg = static_cast<double>(c.size() - 1);
  const double margin = 1e3 * kEps * 2.0 * deg * abs_sum(c, x);
  if (std::fabs(f) <= margin) return 0;
  return f > 0 ? 1 : -1;
}

std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
  return d;
}

double bisect_double(const std::vector<double>& c, double a, double b, double width) {
  const bool rising = horner(c, a) < 0;
  for (int iter = 0; iter < 200 && b - a > width; ++iter) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double f = horner(c, mid);
    if ((f < 0) == rising) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

struct Bracket {
  double lo;
  double hi;
};

// Brackets around the sign changes of c on (-bound, bound), split at the
// approximate roots of the derivative (where c is monotone in between).
// `ok` turns false when any breakpoint sign is inconclusive.
std::vector<Bracket> monotone_brackets(const std::vector<double>& c, double bound, bool& ok);

std::vector<double> approximate_roots(const std::vector<double>& c, double bound, bool& ok) {
  std::vector<double> roots;
  for (const auto& br : monotone_brackets(c, bound, ok)) {
    roots.push_back(bisect_double(c, br.lo, br.hi, 0.0));
  }
  return roots;
}

std::vector<Bracket> monotone_brackets(const std::vector<double>& c, double bound, bool& ok) {
  std::vector<Bracket> out;
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return out;
  std::vector<double> pts{-bound};
  if (deg >= 2) {
    for (double r : approximate_roots(derivative(c), bound, ok)) pts.push_back(r);
  }
  pts.push_back(bound);
  std::vector<int> signs(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    signs[i] = float_sign(c, pts[i]);
    if (signs[i] == 0) ok = false;
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] >= pts[i + 1]) continue;
    if (signs[i] != 0 && signs[i + 1] != 0 && signs[i] != signs[i + 1]) out.push_back({pts[i], pts[i + 1]});
  }
  return out;
}

}  // namespace

std::optional<std::vector<RootEnclosure>> fast_real_roots(std::span<const std::int64_t> coeffs,
                                                          const Rational& tol) {
  int d = static_cast<int>(coeffs.size()) - 1;
  while (d >= 0 && coeffs[d] == 0) --d;
  if (d < 0) throw DomainError("root scan of the zero polynomial");
  const Poly full = Poly::from_int64(coeffs.subspan(0, static_cast<std::size_t>(d) + 1));

  int low = 0;
  while (coeffs[low] == 0) ++low;

  std::vector<RootEnclosure> out;
  if (low > 0) out.push_back({{Rational(0), Rational(0)}, 0, 0, Certification::kExact});
  if (low == d) return out;

  constexpr double kExactDouble = 9007199254740992.0;  // 2^53
  std::vector<double> q;
  for (int i = low; i <= d; ++i) {
    const double v = static_cast<double>(coeffs[i]);
    if (std::fabs(v) > kExactDouble) return std::nullopt;
    q.push_back(v);
  }
  double mx = 0.0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) mx = std::max(mx, std::fabs(q[i] / q.back()));
  const double bound = (1.0 + mx) * (1.0 + 1e-9) + 1e-9;

  bool ok = true;
  const std::vector<Bracket> brackets = monotone_brackets(q, bound, ok);
  if (!ok) return std::nullopt;

  const Poly qp = full.shift_down(low);
  const double width = tol.get_d() * 0.5;
  for (const auto& br : brackets) {
    double a = br.lo;
    double b = br.hi;
    const bool rising = horner(q, a) < 0;
    for (int iter = 0; iter < 200 && b - a > width; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const int s = float_sign(q, mid);
      if (s == 0) break;  // continue exactly from here
      if ((s < 0) == rising) {
        a = mid;
      } else {
        b = mid;
      }
    }
    Rational lo = from_double(a);
    Rational hi = from_double(b);
    int s_lo = qp.sign_at(lo);
    const int s_hi = qp.sign_at(hi);
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) return std::nullopt;
    bool exact_root = false;
    while (hi - lo > tol) {
      const Rational mid = (lo + hi) / 2;
      const int s = qp.sign_at(mid);
      if (s == 0) {
        out.push_back({{mid, mid}, 0, 0, Certification::kExact});
        exact_root = true;
        break;
      }
      if (s == s_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (exact_root) continue;
    // Monic input: any rational root is an integer.
    const double nearest = std::round(0.5 * (a + b));
    const Rational c(nearest);
    if (lo <= c && c <= hi && qp.sign_at(c) == 0) {
      out.push_back({{c, c}, 0, 0, Certification::kExact});
      continue;
    }
    out.push_back({{lo, hi}, full.sign_at(lo), full.sign_at(hi), Certification::kSimpleCertified});
  }
  std::sort(out.begin(), out.end(),
            [](const RootEnclosure& x, const RootEnclosure& y) { return x.interval.lo < y.interval.lo; });
  return out;
}

std::vector<RootEnclosure> exact_real_roots(const Poly& p, const Rational& tol) {
  const Rational b = cauchy_bound(p);
  return isolate_real_roots(p, {-b, b}, tol);
}

std::vector<RootEnclosure> certified_real_roots(std::span<const std::int64_t> coeffs,
                                                const Rational& tol, bool* escalated) {
  if (auto fast = fast_real_roots(coeffs, tol)) {
    if (escalated) *escalated = false;
    return std::move(*fast);
  }
  if (escalated) *escalated = true;
  return exact_real_roots(Poly::from_int64(coeffs), tol);
}

// --- sweeps ----------------------------------------------------------------

SweepStats sweep_serial(const GraphStream& graphs, const SweepOptions& opts, const GraphSink& sink) {
  SweepStats stats;
  for (std::uint64_t i = 0; i < graphs.size(); ++i) {
    const Graph g = graphs.at(i);
    const std::vector<std::int64_t> coeffs = dom_coeffs_int64(g);
    bool escalated = false;
    const std::vector<RootEnclosure> roots = certified_real_roots(coeffs, opts.tol, &escalated);
    ++stats.graphs;
    ++stats.distinct_polynomials;  // no caching in the reference path
    if (escalated) ++stats.escalations;
    sink({i, &g, coeffs, roots});
  }
  return stats;
}

namespace {

struct CoeffHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

SweepStats sweep_parallel(const GraphStream& graphs, const SweepOptions& opts, const GraphSink& sink) {
  SweepStats stats;
  const std::size_t chunk = std::max<std::size_t>(opts.chunk, 1);
#ifdef _OPENMP
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#endif

  std::unordered_map<std::vector<std::int64_t>, std::size_t, CoeffHash> ids;
  std::vector<std::vector<RootEnclosure>> store;
  std::vector<std::vector<std::int64_t>> store_keys;
  std::vector<char> store_escalated;

  std::vector<Graph> gs;
  std::vector<std::vector<std::int64_t>> coeffs;
  std::vector<std::size_t> slot;
  std::vector<std::size_t> pending;

  for (std::uint64_t start = 0; start < graphs.size(); start += chunk) {
    const std::uint64_t end = std::min<std::uint64_t>(graphs.size(), start + chunk);
    const auto count = static_cast<std::int64_t>(end - start);
    gs.assign(static_cast<std::size_t>(count), Graph(1));
    coeffs.assign(static_cast<std::size_t>(count), {});

#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
      gs[i] = graphs.at(start + static_cast<std::uint64_t>(i));
      coeffs[i] = dom_coeffs_int64(gs[i]);
    }

    slot.assign(static_cast<std::size_t>(count), 0);
    pending.clear();
    for (std::int64_t i = 0; i < count; ++i) {
      auto [it, inserted] = ids.try_emplace(coeffs[i], store.size());
      if (inserted) {
        pending.push_back(store.size());
        store.emplace_back();
        store_keys.push_back(coeffs[i]);
        store_escalated.push_back(0);
      }
      slot[i] = it->second;
    }

    const auto todo = static_cast<std::int64_t>(pending.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::int64_t j = 0; j < todo; ++j) {
      const std::size_t id = pending[j];
      bool escalated = false;
      store[id] = certified_real_roots(store_keys[id], opts.tol, &escalated);
      store_escalated[id] = escalated ? 1 : 0;
    }
    for (std::size_t id : pending) stats.escalations += store_escalated[id];

    for (std::int64_t i = 0; i < count; ++i) {
      sink({start + static_cast<std::uint64_t>(i), &gs[i], coeffs[i], store[slot[i]]});
    }
    stats.graphs += static_cast<std::uint64_t>(count);
  }
  stats.distinct_polynomials = store.size();
  return stats;
}

SweepStats write_root_cloud(const GraphStream& graphs, const SweepOptions& opts, std::ostream& out,
                            bool parallel) {
  out << "graph6,n,root_lo,root_hi\n";
  auto sink = [&out](const GraphResult& r) {
    const std::string id = to_graph6(*r.graph);
    for (const auto& e : r.roots) {
      out << id << ',' << r.graph->order() << ',' << to_fixed(e.interval.lo, 12) << ','
          << to_fixed(e.interval.hi, 12) << '\n';
    }
  };
  return parallel ? sweep_parallel(graphs, opts, sink) : sweep_serial(graphs, opts, sink);
}

std::vector<RootCloudRecord> root_cloud(const GraphStream& graphs, const SweepOptions& opts) {
  std::vector<RootCloudRecord> out;
  sweep_parallel(graphs, opts, [&out](const GraphResult& r) {
    const std::string id = to_graph6(*r.graph);
    for (const auto& e : r.roots) out.push_back({id, r.graph->order(), e.interval.lo, e.interval.hi});
  });
  return out;
}

// --- extremal roots --------------------------------------------------------

std::vector<ExtremalRecord> smallest_root_table(int n_max, const TableOptions& opts) {
  if (n_max < 1) throw DomainError("table needs n_max >= 1");
  std::vector<ExtremalRecord> rows;
  for (int n = 1; n <= n_max; ++n) {
    ExtremalRecord rec;
    rec.n = n;
    if (n >= 2) rec.star_value = star_domination_root(n - 1, opts.sweep.tol);

    if (n <= opts.exhaustive_max_order) {
      std::optional<RootEnclosure> best;
      std::vector<std::int64_t> best_coeffs;
      const GraphStream graphs = GraphStream::all_labeled(n, opts.exhaustive_max_order);
      sweep_parallel(graphs, opts.sweep, [&](const GraphResult& r) {
        const RootEnclosure& smallest = r.roots.front();  // 0 is always a root
        if (!best || smallest.interval.lo < best->interval.lo) {
          best = smallest;
          best_coeffs.assign(r.coeffs.begin(), r.coeffs.end());
          rec.graph6 = to_graph6(*r.graph);
        }
      });
      rec.smallest = *best;
      rec.exhaustive = true;
      if (n >= 2) {
        rec.matches_star = Poly::from_int64(best_coeffs) ==
                           dom_poly_closed_form({ClosedFormKind::kStar, n - 1});
      }
    } else {
      rec.smallest = *rec.star_value;
      rec.graph6 = to_graph6(star(n - 1));
      rec.exhaustive = false;
      rec.matches_star = true;
      rec.note = "star value only; order above the exhaustive scan cap";
    }
    if (n == 2) {
      rec.note = "D(K_2,x) = x^2 + 2x has roots 0 and -2; a tabulated +2 for n = 2 is a sign typo";
    }
    rows.push_back(std::move(rec));
  }
  return rows;
}

std::string table_csv(const std::vector<ExtremalRecord>& rows) {
  std::ostringstream out;
  out << "n,root_lo,root_hi,graph6,exhaustive\n";
  for (const auto& r : rows) {
    out << r.n << ',' << to_fixed(r.smallest.interval.lo, 12) << ','
        << to_fixed(r.smallest.interval.hi, 12) << ',' << r.graph6 << ','
        << (r.exhaustive ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<GrowthRecord> growth_check(int n_max, const Rational& tol) {
  if (n_max < 3) throw DomainError("growth_check needs n_max >= 3");
  std::vector<GrowthRecord> out;
  for (int n = 3; n <= n_max; ++n) {
    GrowthRecord rec;
    rec.n = n;
    rec.magnitude = star_root(n - 1, tol).midpoint().get_d();
    rec.n_over_ln_n = n / std::log(static_cast<double>(n));
    rec.ratio = rec.magnitude / rec.n_over_ln_n;
    out.push_back(rec);
  }
  return out;
}

std::string growth_csv(const std::vector<GrowthRecord>& rows) {
  std::ostringstream out;
  out << "n,magnitude,n_over_ln_n,ratio\n";
  out.setf(std::ios::fixed);
  out.precision(12);
  for (const auto& r : rows) {
    out << r.n << ',' << r.magnitude << ',' << r.n_over_ln_n << ',' << r.ratio << '\n';
  }
  return out.str();
}

}  // namespace domroots
