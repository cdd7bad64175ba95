#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domroots {

/// Bitmask over vertex indices 0..63.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Simple undirected graph on at most 64 vertices.
///
/// Adjacency is stored as one word per vertex. Values are immutable once
/// built through the factory functions, so they can be shared freely between
/// worker threads.
class Graph {
 public:
  /// Edgeless graph on n vertices; 1 <= n <= 64.
  explicit Graph(int n);

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return n_; }
  VertexSet neighbors(int v) const noexcept { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const noexcept {
    return adj_[v] | (VertexSet{1} << v);
  }
  bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  int degree(int v) const noexcept { return std::popcount(adj_[v]); }
  int edge_count() const noexcept;
  VertexSet all_vertices() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

  // Mutators are used only by the builders in this module.
  void add_edge(int u, int v);

 private:
  int n_;
  std::array<VertexSet, kMaxVertices> adj_{};
};

enum class FamilyKind { kComplete, kCompleteBipartite, kStar, kEmpty };

struct FamilySpec {
  FamilyKind kind;
  int a = 0;  // n for complete/empty, k for bipartite/star
  int b = 0;  // l for bipartite
};

/// Named graphs. The star K_{1,k} has its center at vertex 0; bipartite
/// K_{k,l} puts the k-side at vertices 0..k-1.
Graph family(const FamilySpec& spec);
Graph complete_graph(int n);
Graph complete_bipartite(int k, int l);
Graph star(int k);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Lexicographic substitution G[K_m]: vertex v of G becomes block
/// {v*m, ..., v*m + m - 1}.
Graph substitute_complete(const Graph& g, int m);

/// N[A] = union of closed neighborhoods of the vertices in A.
VertexSet closed_neighborhood_union(const Graph& g, VertexSet a);

Graph disjoint_union(const Graph& g, const Graph& h);

/// graph6 decoding/encoding (one graph, no trailing newline).
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Index of the upper-triangle pair (i, j), i < j, in graph6 bit order
/// (column-major: (0,1), (0,2), (1,2), (0,3), ...).
constexpr int graph6_pair_index(int i, int j) noexcept { return j * (j - 1) / 2 + i; }

/// Builds the graph whose edge set is the bitmask `edges` in graph6 pair
/// order. Requires n <= 11 so that all pairs fit one word.
Graph graph_from_edge_mask(int n, std::uint64_t edges);

/// Degree-refinement signature used by the `dedup` enumeration mode. Equal
/// for isomorphic graphs; non-isomorphic graphs may collide.
std::uint64_t refinement_signature(const Graph& g);

}  // namespace domroots
