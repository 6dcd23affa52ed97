#include "cflp/cflp.hpp"

#include <benchmark/benchmark.h>

#include <iterator>

namespace {

const cflp::Alpha kThird{cflp::Rational(1, 3)};

void BM_ExplicitSum(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cflp::cflp(n, kThird));
}
BENCHMARK(BM_ExplicitSum)->Arg(5)->Arg(20)->Arg(64);

void BM_ConstructionRoute(benchmark::State& state) {
  const auto form = cflp::kAllCflpForms[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(cflp::to_string(form));
  for (auto _ : state) benchmark::DoNotOptimize(cflp::cflp_via(form, 20, kThird));
}
BENCHMARK(BM_ConstructionRoute)->DenseRange(0, static_cast<int>(std::size(cflp::kAllCflpForms)) - 1);

void BM_Eval(benchmark::State& state) {
  const auto p = cflp::cflp(static_cast<unsigned>(state.range(0)), kThird);
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cflp::eval(p, x));
    x += 1e-9;
  }
}
BENCHMARK(BM_Eval)->Arg(5)->Arg(20);

void BM_ShiftedRoots(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cflp::sclp_roots(k, kThird));
}
BENCHMARK(BM_ShiftedRoots)->Arg(4)->Arg(16)->Arg(64);

void BM_GaussLegendre(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cflp::gauss_legendre(order));
}
BENCHMARK(BM_GaussLegendre)->Arg(16)->Arg(64)->Arg(256);

void BM_SolveBagleyTorvik(benchmark::State& state) {
  cflp::FdeProblem p;
  p.gamma = cflp::Rational(2);
  p.lower_terms = {{1.0, cflp::Rational(3, 2)}};
  p.zero_order_coeff = 1.0;
  p.rhs = cflp::FracPoly::constant(cflp::Rational(1)) +
          cflp::FracPoly::monomial(cflp::Rational(1), cflp::Rational(1));
  p.initial_conditions = {1.0, 1.0};
  p.m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cflp::solve(p));
}
BENCHMARK(BM_SolveBagleyTorvik)->Arg(2)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
