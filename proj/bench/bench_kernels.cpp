// Serial reference kernels against their OpenMP counterparts.

#include <chrono>
#include <cstdio>
#include <random>

#include "domroots/atlas.hpp"
#include "domroots/dompoly.hpp"
#include "domroots/kernels.hpp"

using namespace domroots;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 22;
  const int sweep_n = argc > 2 ? std::atoi(argv[2]) : 6;
  std::mt19937_64 rng(1);
  Graph g(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng() % 4 == 0) g.add_edge(i, j);

  std::printf("threads available: %d\n", kernels::available_threads());

  Poly a, b;
  const double ts = seconds([&] { a = dom_poly_inclusion_exclusion_serial(g); });
  const double tp = seconds([&] { b = dom_poly_inclusion_exclusion_omp(g); });
  std::printf("inclusion-exclusion n=%d  serial %.3f s  omp %.3f s  speedup %.2f  %s\n", n, ts, tp, ts / tp,
              a == b ? "equal" : "MISMATCH");

  const GraphStream stream = GraphStream::all_labeled(sweep_n);
  std::uint64_t rs = 0, rp = 0;
  SweepOptions opts;
  const double ss = seconds([&] { sweep_serial(stream, opts, [&](const GraphResult& r) { rs += r.roots.size(); }); });
  const double sp = seconds([&] { sweep_parallel(stream, opts, [&](const GraphResult& r) { rp += r.roots.size(); }); });
  std::printf("root sweep n=%d  serial %.3f s  omp %.3f s  speedup %.2f  %s\n", sweep_n, ss, sp, ss / sp,
              rs == rp ? "equal" : "MISMATCH");
  return a == b && rs == rp ? 0 : 1;
}
