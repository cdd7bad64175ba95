#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "domroots/graph.hpp"
#include "domroots/realroots.hpp"

namespace domroots {

enum class EnumerationMode { kAllLabeled, kDedup, kCorpusFile };

EnumerationMode enumeration_mode_from_string(const std::string& s);

/// Random-access sequence of graphs. all_labeled is generated on demand
/// (graph i has edge mask i in graph6 pair order); dedup and corpus modes
/// hold their graphs in memory.
class GraphStream {
 public:
  /// Every labeled graph on n vertices, 2^(n choose 2) of them.
  static GraphStream all_labeled(int n, int max_order = 7);
  /// First graph of each refinement-signature class among all labeled
  /// graphs. The signature is a heuristic; distinct classes may merge.
  static GraphStream dedup(int n, int max_order = 7);
  /// graph6 lines from a file; n > 0 keeps only graphs of that order.
  static GraphStream corpus_file(const std::string& path, int n = 0);
  static GraphStream from_graphs(std::vector<Graph> graphs);

  std::uint64_t size() const noexcept { return size_; }
  Graph at(std::uint64_t i) const;

 private:
  GraphStream() = default;
  int labeled_order_ = 0;
  std::uint64_t size_ = 0;
  std::vector<Graph> graphs_;
};

/// Certified real roots of an integer polynomial over its whole real line,
/// floating first. Returns nullopt when some floating sign is within
/// 10^3 machine epsilons of the rounding bound, or an exact endpoint check
/// disagrees.
std::optional<std::vector<RootEnclosure>> fast_real_roots(std::span<const std::int64_t> coeffs,
                                                          const Rational& tol);

/// Pure Sturm isolation over (-B, B], B the Cauchy bound.
std::vector<RootEnclosure> exact_real_roots(const Poly& p, const Rational& tol);

/// fast_real_roots with exact escalation. `escalated` reports which path won.
std::vector<RootEnclosure> certified_real_roots(std::span<const std::int64_t> coeffs,
                                                const Rational& tol, bool* escalated = nullptr);

struct GraphResult {
  std::uint64_t index = 0;
  const Graph* graph = nullptr;
  std::span<const std::int64_t> coeffs;  // D(G, x), index 0..n
  std::span<const RootEnclosure> roots;  // ascending
};

using GraphSink = std::function<void(const GraphResult&)>;

struct SweepOptions {
  Rational tol = Rational(1, 1000000000);
  int threads = 0;  // 0: OpenMP default
  std::size_t chunk = std::size_t{1} << 14;
};

struct SweepStats {
  std::uint64_t graphs = 0;
  std::uint64_t distinct_polynomials = 0;
  std::uint64_t escalations = 0;
};

/// Reference sweep: one graph at a time, no caching.
SweepStats sweep_serial(const GraphStream& graphs, const SweepOptions& opts, const GraphSink& sink);

/// Chunked OpenMP sweep. Polynomials are computed in parallel, roots are
/// isolated once per distinct polynomial, and the sink sees graphs in
/// stream order, so the output matches sweep_serial exactly.
SweepStats sweep_parallel(const GraphStream& graphs, const SweepOptions& opts, const GraphSink& sink);

struct RootCloudRecord {
  std::string graph6;
  int n = 0;
  Rational root_lo;
  Rational root_hi;
};

/// Streams `graph6,n,root_lo,root_hi` rows (header first).
SweepStats write_root_cloud(const GraphStream& graphs, const SweepOptions& opts, std::ostream& out,
                            bool parallel = true);
std::vector<RootCloudRecord> root_cloud(const GraphStream& graphs, const SweepOptions& opts);

struct ExtremalRecord {
  int n = 0;
  RootEnclosure smallest;
  std::string graph6;
  bool exhaustive = false;
  /// D(attaining graph) equals D(K_{1,n-1}).
  bool matches_star = false;
  /// Certified -r_{n-1} from the star companion (n >= 2).
  std::optional<RootEnclosure> star_value;
  std::string note;
};

struct TableOptions {
  int exhaustive_max_order = 7;
  SweepOptions sweep;
};

std::vector<ExtremalRecord> smallest_root_table(int n_max, const TableOptions& opts = {});

/// `n,root_lo,root_hi,graph6,exhaustive`.
std::string table_csv(const std::vector<ExtremalRecord>& rows);

struct GrowthRecord {
  int n = 0;
  double magnitude = 0.0;  // |smallest root| = r_{n-1}
  double n_over_ln_n = 0.0;
  double ratio = 0.0;
};

std::vector<GrowthRecord> growth_check(int n_max, const Rational& tol = Rational(1, 1000000000));
std::string growth_csv(const std::vector<GrowthRecord>& rows);

}  // namespace domroots
