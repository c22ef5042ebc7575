#include <benchmark/benchmark.h>

#include "percycle/bounds.hpp"
#include "percycle/degree.hpp"
#include "percycle/integrate.hpp"
#include "percycle/model.hpp"
#include "percycle/params.hpp"

namespace {

const percycle::ParamSet& example() {
  static const percycle::ParamSet p = percycle::builtin_example();
  return p;
}

void BM_RhsEval(benchmark::State& state) {
  const auto& p = example();
  const percycle::State5 x{1.0, 0.5, 0.25, 0.125, 0.0625};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(percycle::rhs(p, t, x));
    t += 1e-3;
  }
}
BENCHMARK(BM_RhsEval);

void BM_AvgField(benchmark::State& state) {
  const auto& p = example();
  const percycle::State5 x{2.0, 1.6, 1.0, 4.2, 6.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(percycle::degree::avg_field(p, x));
  }
}
BENCHMARK(BM_AvgField);

void BM_FaceCertificate(benchmark::State& state) {
  const auto& p = example();
  const auto box = percycle::bounds::build_box(p).box;
  for (auto _ : state) {
    benchmark::DoNotOptimize(percycle::degree::face_reports(p, box, {}));
  }
}
BENCHMARK(BM_FaceCertificate);

void BM_IntegratePeriod(benchmark::State& state) {
  const auto& p = example();
  const percycle::State5 x0 =
      percycle::builtin_history().eval(0.0, p.T);
  const auto field = percycle::solver::model_field(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        percycle::solver::integrate(field, 0.0, p.T, x0, {}));
  }
}
BENCHMARK(BM_IntegratePeriod);

}  // namespace

BENCHMARK_MAIN();
