#include <benchmark/benchmark.h>

#include "dioph/campaign.hpp"
#include "dioph/pell.hpp"
#include "dioph/reduction.hpp"
#include "dioph/tuple.hpp"

using namespace dioph;

namespace {

const mpz_class kM("19000000000000000");

void BM_DPlus(benchmark::State& st) {
  const auto t = DiophantineTriple::make(1, 3, 8);
  for (auto _ : st) benchmark::DoNotOptimize(d_plus(t));
}
BENCHMARK(BM_DPlus);

void BM_ReduceLambda1(benchmark::State& st) {
  const long r = st.range(0);
  const long n = r * r - 1;
  for (auto _ : st) benchmark::DoNotOptimize(reduce_lambda1(1, n, 1 + n + 2 * r, kM));
}
BENCHMARK(BM_ReduceLambda1)->Arg(2)->Arg(1000)->Arg(900153);

void BM_ThirdElements(benchmark::State& st) {
  const auto p = PellProblem::make(1, 8);
  for (auto _ : st) {
    benchmark::DoNotOptimize(third_elements(p, mpz_class(st.range(0)), ThirdElementFilter::AnyDistinct));
  }
}
BENCHMARK(BM_ThirdElements)->Arg(1000000)->Arg(1000000000);

void BM_CaseIVUnit(benchmark::State& st) {
  const auto spec = CampaignSpec::defaults(CampaignKind::CaseIV);
  for (auto _ : st) benchmark::DoNotOptimize(run_unit(spec, static_cast<std::uint64_t>(st.range(0))));
}
BENCHMARK(BM_CaseIVUnit)->Arg(35)->Arg(300);

void BM_Search(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_search(static_cast<std::uint64_t>(st.range(0))));
}
BENCHMARK(BM_Search)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
