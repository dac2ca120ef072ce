#include <benchmark/benchmark.h>

#include "trunclab/frame/surjection.hpp"
#include "trunclab/kernel/kernel.hpp"
#include "trunclab/props/generators.hpp"
#include "trunclab/seqspace/ex1.hpp"
#include "trunclab/trunc/sequences.hpp"

using namespace trunclab;

namespace {

boolean::SpacePtr space_of(std::size_t n) {
  std::vector<std::string> pts = {"*"};
  for (std::size_t i = 1; i < n; ++i) pts.push_back(std::to_string(i));
  return boolean::make_space(pts, "*");
}

void BM_NormalForm(benchmark::State& st) {
  Sampler rng(1);
  auto g = props::random_simple(space_of(static_cast<std::size_t>(st.range(0))), rng);
  for (auto _ : st) benchmark::DoNotOptimize(trunc::normal_form(g));
}
BENCHMARK(BM_NormalForm)->Arg(8)->Arg(32)->Arg(60);

void BM_GoodFromElement(benchmark::State& st) {
  std::vector<Rational> v;
  for (std::int64_t i = 1; i < 32; ++i) v.emplace_back(i % st.range(0) + 1, 3);
  auto g = trunc::SimpleElement::from_tuple(space_of(32), v);
  for (auto _ : st) benchmark::DoNotOptimize(trunc::good_from_element(g));
}
BENCHMARK(BM_GoodFromElement)->Arg(4)->Arg(16)->Arg(64);

void BM_FrameAdd(benchmark::State& st) {
  Sampler rng(2);
  auto p = props::random_pointed(props::random_frame(rng, 20), rng);
  auto a = props::random_frame_real(p, rng), b = props::random_frame_real(p, rng);
  for (auto _ : st) benchmark::DoNotOptimize(frame::induced_op(Op::add(), a, b));
}
BENCHMARK(BM_FrameAdd);

void BM_TailMeet(benchmark::State& st) {
  Sampler rng(3);
  seq::SeqTrunc m(static_cast<std::size_t>(st.range(0)));
  auto a = m.sample(rng), b = m.sample(rng);
  for (auto _ : st) benchmark::DoNotOptimize(seq::meet(a, b));
}
BENCHMARK(BM_TailMeet)->Arg(1)->Arg(2)->Arg(3);

void BM_E0qMember(benchmark::State& st) {
  Sampler rng(4);
  std::optional<frame::FrameSurjection> q;
  while (!q || !q->dense()) q = props::random_surjection(rng, 12);
  auto h = props::random_frame_real(q->target(), rng);
  for (auto _ : st) benchmark::DoNotOptimize(frame::e0q_member(*q, h));
}
BENCHMARK(BM_E0qMember);

void BM_KernelConditionsTailZero(benchmark::State& st) {
  kernel::KernelSpec k = kernel::SeqKernel::finite_support(seq::SeqTrunc(1));
  for (auto _ : st) benchmark::DoNotOptimize(kernel::kernel_conditions(k, static_cast<std::size_t>(st.range(0)), 0));
}
BENCHMARK(BM_KernelConditionsTailZero)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Ex1Report(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(seq::ex1_report(500, 0));
}
BENCHMARK(BM_Ex1Report)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
