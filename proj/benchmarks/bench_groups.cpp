#include <benchmark/benchmark.h>

#include "pcode/cayley.hpp"
#include "pcode/group_ops.hpp"
#include "pcode/linear_groups.hpp"
#include "pcode/perfect_code.hpp"
#include "pcode/small_groups.hpp"

namespace {

using namespace pcode;

void BM_Closure_PSL2(benchmark::State& state) {
  long q = state.range(0);
  std::vector<Perm> gens = psl2(q)->generators();
  for (auto _ : state) {
    GroupPtr g = generate(gens);
    benchmark::DoNotOptimize(g->order());
  }
}
BENCHMARK(BM_Closure_PSL2)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_Sylow2_PSL2(benchmark::State& state) {
  GroupPtr g = psl2(state.range(0));
  for (auto _ : state) {
    Subgroup p = sylow2(g);
    benchmark::DoNotOptimize(p.group->order());
  }
}
BENCHMARK(BM_Sylow2_PSL2)->Arg(7)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_Normalizer(benchmark::State& state) {
  GroupPtr g = psl2(state.range(0));
  GroupPtr q = sylow2(g).group;
  for (auto _ : state) {
    Subgroup n = normalizer(g, *q);
    benchmark::DoNotOptimize(n.group->order());
  }
}
BENCHMARK(BM_Normalizer)->Arg(11)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_CheckElementwise_Borel(benchmark::State& state) {
  long q = state.range(0);
  Subgroup m = psl2_maximal(q, {MaximalTag::Family::Borel});
  for (auto _ : state) {
    Verdict v = check_elementwise(m);
    benchmark::DoNotOptimize(v.is_perfect_code);
  }
}
BENCHMARK(BM_CheckElementwise_Borel)->Arg(11)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_AutoCheck_Borel(benchmark::State& state) {
  long q = state.range(0);
  Subgroup m = psl2_maximal(q, {MaximalTag::Family::Borel});
  for (auto _ : state) {
    Verdict v = auto_check(m);
    benchmark::DoNotOptimize(v.is_perfect_code);
  }
}
BENCHMARK(BM_AutoCheck_Borel)->Arg(11)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_TransversalSearch(benchmark::State& state) {
  GroupPtr g = symmetric_group(static_cast<int>(state.range(0)));
  Subgroup h = make_subgroup(g, {Perm::from_cycles(g->degree(), {{0, 1}})});
  for (auto _ : state) {
    auto r = find_inverse_closed_transversal(h);
    benchmark::DoNotOptimize(r.status);
  }
}
BENCHMARK(BM_TransversalSearch)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_OracleDecide(benchmark::State& state) {
  GroupPtr g = sl2(5);
  Subgroup h = sylow2(g);
  for (auto _ : state) {
    bool b = oracle_decide(h);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_OracleDecide)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
