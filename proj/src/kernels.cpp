#include "domroots/kernels.hpp"

#include <array>
#include <bit>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "domroots/errors.hpp"

namespace domroots::kernels {

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) {
    throw CapacityError(std::string(what) + " supports n <= " + std::to_string(cap) +
                        ", got n = " + std::to_string(g.order()));
  }
}

struct CoverageState {
  std::array<std::uint8_t, kMaxVertices> count{};
  int covered = 0;

  void add(VertexSet nbhd) {
    while (nbhd != 0) {
      const int u = std::countr_zero(nbhd);
      nbhd &= nbhd - 1;
      if (count[u]++ == 0) ++covered;
    }
  }
  void remove(VertexSet nbhd) {
    while (nbhd != 0) {
      const int u = std::countr_zero(nbhd);
      nbhd &= nbhd - 1;
      if (--count[u] == 0) --covered;
    }
  }
};

// Scans Gray-code ranks [begin, end) and accumulates into hist.
void scan_gray_range(const Graph& g, std::uint64_t begin, std::uint64_t end,
                     std::int64_t* hist) {
  const int n = g.order();
  std::array<VertexSet, kMaxVertices> closed{};
  for (int v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v);

  CoverageState st;
  std::uint64_t gray = begin ^ (begin >> 1);
  for (VertexSet a = gray; a != 0; a &= a - 1) st.add(closed[std::countr_zero(a)]);
  int size = std::popcount(gray);
  hist[n - st.covered] += (size & 1) ? -1 : 1;

  for (std::uint64_t rank = begin + 1; rank < end; ++rank) {
    const int v = std::countr_zero(rank);
    const VertexSet bit = VertexSet{1} << v;
    if (gray & bit) {
      st.remove(closed[v]);
      --size;
    } else {
      st.add(closed[v]);
      ++size;
    }
    gray ^= bit;
    hist[n - st.covered] += (size & 1) ? -1 : 1;
  }
}

}  // namespace

std::vector<std::int64_t> dominating_set_counts_bruteforce(const Graph& g) {
  check_cap(g, kBruteForceCap, "brute-force domination polynomial");
  const int n = g.order();
  std::array<VertexSet, kMaxVertices> closed{};
  for (int v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v);

  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    bool dominating = true;
    for (int v = 0; v < n; ++v) {
      if ((closed[v] & s) == 0) {
        dominating = false;
        break;
      }
    }
    if (dominating) ++counts[std::popcount(s)];
  }
  return counts;
}

std::vector<std::int64_t> undominated_histogram_serial(const Graph& g) {
  check_cap(g, kInclusionExclusionCap, "inclusion-exclusion");
  const int n = g.order();
  std::vector<std::int64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  scan_gray_range(g, 0, std::uint64_t{1} << n, hist.data());
  return hist;
}

std::vector<std::int64_t> undominated_histogram_omp(const Graph& g, int threads) {
  check_cap(g, kInclusionExclusionCap, "inclusion-exclusion");
  const int n = g.order();
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  // Blocks are small enough to balance, large enough to amortize the
  // from-scratch coverage setup at each block start.
  const std::uint64_t block = n > 12 ? (std::uint64_t{1} << (n - 8)) : total;
  const std::int64_t blocks = static_cast<std::int64_t>(total / block);

  std::vector<std::int64_t> hist(width, 0);
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::int64_t> local(width, 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t b = 0; b < blocks; ++b) {
      scan_gray_range(g, static_cast<std::uint64_t>(b) * block,
                      static_cast<std::uint64_t>(b + 1) * block, local.data());
    }
#pragma omp critical
    for (std::size_t j = 0; j < width; ++j) hist[j] += local[j];
  }
#else
  (void)threads;
  for (std::int64_t b = 0; b < blocks; ++b) {
    scan_gray_range(g, static_cast<std::uint64_t>(b) * block,
                    static_cast<std::uint64_t>(b + 1) * block, hist.data());
  }
#endif
  return hist;
}

std::vector<std::int64_t> counts_from_histogram(const std::vector<std::int64_t>& hist) {
  const int n = static_cast<int>(hist.size()) - 1;
  if (n > kInclusionExclusionCap) throw CapacityError("histogram too long for 64-bit expansion");
  // Individual terms can exceed 64 bits, but every d_k <= C(n, k) fits, so
  // wrapping arithmetic modulo 2^64 yields the exact result.
  std::vector<std::uint64_t> acc(hist.size(), 0);
  std::vector<std::uint64_t> row(hist.size(), 0);
  row[0] = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0)
      for (int k = j; k >= 1; --k) row[k] += row[k - 1];
    if (hist[j] == 0) continue;
    const auto h = static_cast<std::uint64_t>(hist[j]);
    for (int k = 0; k <= j; ++k) acc[k] += h * row[k];
  }
  std::vector<std::int64_t> counts(hist.size());
  for (std::size_t k = 0; k < acc.size(); ++k) counts[k] = static_cast<std::int64_t>(acc[k]);
  return counts;
}

int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace domroots::kernels
