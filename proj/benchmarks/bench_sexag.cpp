#include <benchmark/benchmark.h>

#include "sexag/expr.hpp"
#include "sexag/interest.hpp"
#include "sexag/metrology.hpp"
#include "sexag/rational.hpp"
#include "sexag/sexagesimal.hpp"

using namespace sexag;

static void BM_PowInt(benchmark::State& state) {
  Rational base(4, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pow_int(base, state.range(0)));
  }
}
BENCHMARK(BM_PowInt)->Arg(7)->Arg(64)->Arg(512);

static void BM_FormatSex(benchmark::State& state) {
  Rational value = pow_int(Rational(4, 3), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(format_sex(value, 20, RoundingMode::floor));
  }
}
BENCHMARK(BM_FormatSex);

static void BM_ParseSex(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_sex("7;29,29,32,50,22,13,20"));
  }
}
BENCHMARK(BM_ParseSex);

static void BM_ReciprocalRegular(benchmark::State& state) {
  Rational value(216, 125);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reciprocal_regular(value));
  }
}
BENCHMARK(BM_ReciprocalRegular);

static void BM_ParseQuantity(benchmark::State& state) {
  UnitSystem system = UnitSystem::builtin();
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_quantity("4(šar'u-gal) gur₇", system));
  }
}
BENCHMARK(BM_ParseQuantity);

static void BM_EvalExpression(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_expression("7;30 * 5,20,0,0"));
  }
}
BENCHMARK(BM_EvalExpression);

static void BM_SolveDurationInterpolated(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_duration_interpolated(Rational(2), Rational(1, 5)));
  }
}
BENCHMARK(BM_SolveDurationInterpolated);

static void BM_SolveDurationModern(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_duration_modern(Rational(2), Rational(1, 5), 2));
  }
}
BENCHMARK(BM_SolveDurationModern);

BENCHMARK_MAIN();
