#pragma once

// Subset-scan kernels behind the domination polynomial. Each kernel has a
// serial reference version and an OpenMP version; both return identical
// integer histograms (integer reductions are order-independent).

#include <cstdint>
#include <vector>

#include "domroots/graph.hpp"

namespace domroots::kernels {

/// Largest order accepted by the 2^n subset scans below.
inline constexpr int kBruteForceCap = 24;
inline constexpr int kInclusionExclusionCap = 40;

/// counts[k] = number of dominating sets of size k, by direct test of every
/// subset S against every closed neighborhood.
std::vector<std::int64_t> dominating_set_counts_bruteforce(const Graph& g);

/// hist[j] = sum over A subset of V with n - |N[A]| = j of (-1)^|A|.
/// Subsets are visited in Gray-code order with per-vertex coverage counters.
std::vector<std::int64_t> undominated_histogram_serial(const Graph& g);
std::vector<std::int64_t> undominated_histogram_omp(const Graph& g, int threads = 0);

/// Expands hist into dominating-set counts: d_k = sum_j hist[j] * C(j, k).
/// Requires n <= 40 so that every intermediate fits 128 bits.
std::vector<std::int64_t> counts_from_histogram(const std::vector<std::int64_t>& hist);

/// Number of OpenMP threads that a parallel region would use (1 without OpenMP).
int available_threads();

}  // namespace domroots::kernels
