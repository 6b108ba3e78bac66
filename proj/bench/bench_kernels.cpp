#include <benchmark/benchmark.h>

#include "cpt/cpt_groups.hpp"
#include "cpt/kernels.hpp"

using namespace cpt;

namespace {

const BladeGroup& group_for(int n) {
  static const BladeGroup g14 = clifford_group({1, 4});
  static const BladeGroup g33 = clifford_group({3, 3});
  static const BladeGroup g44 = clifford_group({4, 4});
  if (n == 5) return g14;
  if (n == 6) return g33;
  return g44;
}

// Table fill over G(p,q) with the blade product; arg = p + q.
void BM_FillTable(benchmark::State& state, bool parallel) {
  const BladeGroup& g = group_for(static_cast<int>(state.range(0)));
  const AlgebraSignature sig = state.range(0) == 5 ? AlgebraSignature{1, 4}
                               : state.range(0) == 6 ? AlgebraSignature{3, 3}
                                                     : AlgebraSignature{4, 4};
  const int n = g.group.order();
  const auto product = [&](int r, int c) {
    const SignedBlade p = blade_mul(sig, g.elements[r], g.elements[c]);
    return static_cast<int>(std::lower_bound(g.elements.begin(), g.elements.end(), p, BladeOrder{}) -
                            g.elements.begin());
  };
  for (auto _ : state) {
    auto t = parallel ? kernels::fill_table(n, product) : kernels::fill_table_serial(n, product);
    benchmark::DoNotOptimize(t.data());
  }
  state.counters["order"] = n;
}

void BM_Associativity(benchmark::State& state, bool parallel) {
  const FiniteGroup& g = group_for(static_cast<int>(state.range(0))).group;
  for (auto _ : state) {
    auto v = parallel ? kernels::associativity_violation(g.order(), g.table())
                      : kernels::associativity_violation_serial(g.order(), g.table());
    benchmark::DoNotOptimize(v);
  }
  state.counters["order"] = g.order();
}

void BM_SalingarosIsomorphism(benchmark::State& state, bool parallel) {
  const SalingarosReport r = salingaros_check();
  for (auto _ : state) {
    auto h = parallel ? find_isomorphism(r.construct, r.g14) : find_isomorphism_serial(r.construct, r.g14);
    benchmark::DoNotOptimize(h);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_FillTable, serial, false)->Arg(5)->Arg(6)->Arg(8);
BENCHMARK_CAPTURE(BM_FillTable, parallel, true)->Arg(5)->Arg(6)->Arg(8);
BENCHMARK_CAPTURE(BM_Associativity, serial, false)->Arg(5)->Arg(6)->Arg(8);
BENCHMARK_CAPTURE(BM_Associativity, parallel, true)->Arg(5)->Arg(6)->Arg(8);
BENCHMARK_CAPTURE(BM_SalingarosIsomorphism, serial, false);
BENCHMARK_CAPTURE(BM_SalingarosIsomorphism, parallel, true);

BENCHMARK_MAIN();
