#include "coverspec/io.hpp"
#include "coverspec/obstruction.hpp"
#include "coverspec/ret.hpp"
#include "coverspec/specialize.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace coverspec;

namespace {

PolyQ random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<RatQ> v;
  for (int i = 0; i < degree; ++i) v.emplace_back(c(rng));
  v.emplace_back(1);
  return PolyQ(v);
}

void BM_GeneratePsl2(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psl2(p).order());
}
BENCHMARK(BM_GeneratePsl2)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_MaximalCyclicS6(benchmark::State& state) {
  const FiniteGroup g = sym(6);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cyclic_classes(g).nu);
}
BENCHMARK(BM_MaximalCyclicS6)->Unit(benchmark::kMillisecond);

void BM_RankS6(benchmark::State& state) {
  const FiniteGroup g = sym(6);
  for (auto _ : state) benchmark::DoNotOptimize(rank(g).rank);
}
BENCHMARK(BM_RankS6)->Unit(benchmark::kMillisecond);

void BM_PolyGcd(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<int>(state.range(0));
  const PolyQ common = random_poly(rng, n / 2);
  const PolyQ a = common * random_poly(rng, n / 2);
  const PolyQ b = common * random_poly(rng, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b).degree());
}
BENCHMARK(BM_PolyGcd)->Arg(8)->Arg(16)->Arg(32);

void BM_SpecializeD10(benchmark::State& state) {
  const auto table = std::make_shared<const ClassTable>(ClassTable::from_group(dihedral(5)));
  const auto data = RamificationData::make(ClassTuple::from_names(table, {"2A", "2A", "2A", "2A"}),
                                           std::vector<P1Q>{P1Q(0), P1Q(1), P1Q(-1), P1Q(RatQ(1, 5))});
  std::mt19937_64 rng(2);
  const auto n = static_cast<int>(state.range(0));
  const RatFunc t0(random_poly(rng, n), random_poly(rng, n - 1));
  for (auto _ : state) benchmark::DoNotOptimize(specialize_cover(data, t0).r_t0);
}
BENCHMARK(BM_SpecializeD10)->Arg(2)->Arg(4)->Arg(8);

void BM_NielsenA5(benchmark::State& state) {
  const FiniteGroup g = alt(5);
  const std::vector<std::size_t> ids = {g.class_by_name("[2^2,1^1]"), g.class_by_name("[3^1,1^2]"),
                                        g.class_by_name("[5^1]A")};
  for (auto _ : state) benchmark::DoNotOptimize(nielsen_count(g, ids).nielsen_count);
}
BENCHMARK(BM_NielsenA5)->Unit(benchmark::kMillisecond);

void BM_Psl2Refined(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psl2_refined(19).obstructed);
}
BENCHMARK(BM_Psl2Refined)->Unit(benchmark::kMillisecond);

void BM_MonsterRefined(benchmark::State& state) {
  const auto table = std::make_shared<const ClassTable>(
      ClassTable::from_declaration(io::read_json_file(std::string(COVERSPEC_DATA_DIR) + "/monster.json")));
  for (auto _ : state) benchmark::DoNotOptimize(monster_refined(table).obstructed);
}
BENCHMARK(BM_MonsterRefined);

}  // namespace

BENCHMARK_MAIN();
