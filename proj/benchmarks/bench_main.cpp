#include <benchmark/benchmark.h>

#include "hecke/calibration.hpp"
#include "hecke/field.hpp"
#include "hecke/matrix_rep.hpp"
#include "hecke/rational.hpp"
#include "hecke/root_system.hpp"
#include "hecke/skew.hpp"
#include "hecke/weight.hpp"
#include "hecke/weyl.hpp"

using namespace hecke;

namespace {

void BM_FieldArithmetic(benchmark::State& state) {
  QContext ctx{6};
  const FieldElem a = (q_power(ctx, 2) - q_power(ctx, -2)) / (FieldElem::one() - q_power(ctx, Rational(1, 3)));
  const FieldElem b = q_power(ctx, Rational(5, 6)) + FieldElem::constant(Rational(3, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b + a / b);
  }
}
BENCHMARK(BM_FieldArithmetic);

void BM_WeylEnumerate(benchmark::State& state) {
  const RootSystem rs(Family::B, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(WeylGroup::enumerate(rs).size());
  }
}
BENCHMARK(BM_WeylEnumerate)->Arg(2)->Arg(3)->Arg(4);

void BM_CalibrationGraph(benchmark::State& state) {
  const RootSystem rs(Family::A, 3);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7), Rational(1, 11)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_calibration_graph(t).vertices.size());
  }
}
BENCHMARK(BM_CalibrationGraph);

void BM_SkewBuildAndVerify(benchmark::State& state) {
  const RootSystem rs(Family::G, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  for (auto _ : state) {
    const SkewModule m = build_skew_module(t, {});
    benchmark::DoNotOptimize(m.verification.all_pass());
  }
}
BENCHMARK(BM_SkewBuildAndVerify);

void BM_PrincipalSeries(benchmark::State& state) {
  const RootSystem rs(Family::C, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(principal_series(rs, t).dim());
  }
}
BENCHMARK(BM_PrincipalSeries);

void BM_WeightSpaceAnalysis(benchmark::State& state) {
  const RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});
  const MatrixRep m = principal_series(rs, t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weight_space_analysis(m).spaces.size());
  }
}
BENCHMARK(BM_WeightSpaceAnalysis);

}  // namespace

BENCHMARK_MAIN();
