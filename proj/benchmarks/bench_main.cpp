#include <benchmark/benchmark.h>

#include <random>

#include "trinom/inverter.hpp"
#include "trinom/permcheck.hpp"

using namespace trinom;

namespace {

std::vector<Bits> random_elements(const FieldSpec& f, std::size_t count) {
  std::mt19937_64 rng(1);
  std::vector<Bits> v(count);
  for (auto& x : v) x = static_cast<Bits>(rng() & (f.size() - 1));
  return v;
}

void BM_MulLogTable(benchmark::State& state) {
  auto f = FieldSpec::standard(static_cast<unsigned>(state.range(0)));
  const auto xs = random_elements(*f, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f->mul(xs[i & 1023], xs[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_MulLogTable)->Arg(8)->Arg(16)->Arg(20);

void BM_MulShiftXor(benchmark::State& state) {
  auto f = FieldSpec::standard(static_cast<unsigned>(state.range(0)));
  const auto xs = random_elements(*f, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f->mul_shift_xor(xs[i & 1023], xs[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_MulShiftXor)->Arg(8)->Arg(16)->Arg(32);

void BM_Evaluate(benchmark::State& state) {
  const auto inst = instantiate(FamilyId::F6, {static_cast<unsigned>(state.range(0)), 4});
  const auto xs = random_elements(inst.field(), 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(inst(xs[i++ & 1023]));
}
BENCHMARK(BM_Evaluate)->Arg(3)->Arg(7);

void BM_Check(benchmark::State& state) {
  const auto inst = instantiate(FamilyId::F4, {static_cast<unsigned>(state.range(0)), 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check(inst, inst.field(), {.cycle_type = false}).is_permutation);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inst.field().size()));
}
BENCHMARK(BM_Check)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Invert(benchmark::State& state) {
  const auto id = static_cast<FamilyId>(state.range(0));
  const auto e = enumerate_params(id, 16).back();
  const auto inst = instantiate(id, e.params);
  const auto as = random_elements(inst.field(), 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(invert(inst, as[i++ & 1023]).x);
  state.SetLabel(std::string(to_string(id)) + " n=" + std::to_string(inst.degree()));
}
BENCHMARK(BM_Invert)->DenseRange(0, 5);

}  // namespace

BENCHMARK_MAIN();
