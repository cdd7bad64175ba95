#include "domroots/graph.hpp"

#include <algorithm>

#include "domroots/errors.hpp"

namespace domroots {

namespace {

void check_order(int n) {
  if (n < 1) throw DomainError("graph order must be at least 1, got " + std::to_string(n));
  if (n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " exceeds vertex cap " +
                        std::to_string(kMaxVertices));
  }
}

constexpr char kG6Offset = 63;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::vector<std::pair<int, int>>(edges));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw DomainError("edge endpoint out of range");
  }
  if (u == v) throw DomainError("loops are not allowed");
  adj_[u] |= VertexSet{1} << v;
  adj_[v] |= VertexSet{1} << u;
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

VertexSet Graph::all_vertices() const noexcept {
  return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int k, int l) {
  if (k < 1 || l < 1) throw DomainError("complete bipartite sides must be >= 1");
  Graph g(k + l);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) g.add_edge(i, k + j);
  return g;
}

Graph star(int k) {
  if (k < 1) throw DomainError("star needs at least one leaf");
  return complete_bipartite(1, k);
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kComplete:
      if (spec.a < 1) throw DomainError("complete graph needs n >= 1");
      return complete_graph(spec.a);
    case FamilyKind::kCompleteBipartite:
      return complete_bipartite(spec.a, spec.b);
    case FamilyKind::kStar:
      return star(spec.a);
    case FamilyKind::kEmpty:
      if (spec.a < 1) throw DomainError("empty graph needs n >= 1");
      return empty_graph(spec.a);
  }
  throw DomainError("unknown family");
}

Graph substitute_complete(const Graph& g, int m) {
  if (m < 1) throw DomainError("substitution order must be >= 1");
  const long total = static_cast<long>(g.order()) * m;
  if (total > kMaxVertices) {
    throw CapacityError("G[K_m] would have " + std::to_string(total) +
                        " vertices, above the cap of " + std::to_string(kMaxVertices));
  }
  Graph out(static_cast<int>(total));
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) out.add_edge(u * m + a, u * m + b);
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) out.add_edge(u * m + a, v * m + b);
    }
  }
  return out;
}

VertexSet closed_neighborhood_union(const Graph& g, VertexSet a) {
  if ((a & ~g.all_vertices()) != 0) throw DomainError("vertex index out of range");
  VertexSet out = 0;
  while (a != 0) {
    const int v = std::countr_zero(a);
    a &= a - 1;
    out |= g.closed_neighborhood(v);
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) throw CapacityError("disjoint union exceeds vertex cap");
  Graph out(n);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) out.add_edge(u, v);
  const int shift = g.order();
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (h.adjacent(u, v)) out.add_edge(u + shift, v + shift);
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(">>graph6<<")) pos = 10;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("empty graph6 input", pos);

  for (std::size_t i = pos; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", i);
  }

  long n = 0;
  if (text[pos] != '~') {
    n = text[pos] - kG6Offset;
    pos += 1;
  } else {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw CapacityError("graph6 order above 258047 is far beyond the vertex cap");
    }
    if (pos + 4 > text.size()) throw ParseError("truncated graph6 order header", text.size());
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[pos + i] - kG6Offset);
    pos += 4;
  }
  if (n == 0) throw ParseError("graph6 order 0 is not a graph", 0);
  if (n > kMaxVertices) {
    throw CapacityError("graph6 order " + std::to_string(n) + " exceeds vertex cap " +
                        std::to_string(kMaxVertices));
  }

  const long bits = n * (n - 1) / 2;
  const long need = (bits + 5) / 6;
  const long have = static_cast<long>(text.size() - pos);
  if (have != need) {
    throw ParseError("graph6 body has " + std::to_string(have) + " bytes, expected " +
                         std::to_string(need),
                     have < need ? text.size() : pos + need);
  }

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - kG6Offset;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; bit < need * 6; ++bit) {
    const int byte = text[pos + bit / 6] - kG6Offset;
    if ((byte >> (5 - bit % 6)) & 1) {
      throw ParseError("nonzero padding bit in graph6 body", pos + bit / 6);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
    out.push_back(static_cast<char>((n & 63) + kG6Offset));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Offset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Offset));
  return out;
}

Graph graph_from_edge_mask(int n, std::uint64_t edges) {
  if (n > 11) throw CapacityError("edge-mask construction supports n <= 11");
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((edges >> graph6_pair_index(i, j)) & 1U) g.add_edge(i, j);
  return g;
}

std::uint64_t refinement_signature(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> color(n), next(n), scratch;
  for (int v = 0; v < n; ++v) color[v] = mix(static_cast<std::uint64_t>(g.degree(v)));
  for (int round = 0; round < n; ++round) {
    for (int v = 0; v < n; ++v) {
      scratch.clear();
      VertexSet nb = g.neighbors(v);
      while (nb != 0) {
        scratch.push_back(color[std::countr_zero(nb)]);
        nb &= nb - 1;
      }
      std::sort(scratch.begin(), scratch.end());
      std::uint64_t h = mix(color[v]);
      for (auto c : scratch) h = mix(h ^ c);
      next[v] = h;
    }
    color.swap(next);
  }
  std::sort(color.begin(), color.end());
  std::uint64_t sig = mix(static_cast<std::uint64_t>(n) * 1315423911ULL +
                          static_cast<std::uint64_t>(g.edge_count()));
  for (auto c : color) sig = mix(sig ^ c);
  return sig;
}

}  // namespace domroots
