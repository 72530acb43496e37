#include <benchmark/benchmark.h>

#include "mvlaw/asymptotic.hpp"
#include "mvlaw/continuum.hpp"
#include "mvlaw/evaluate.hpp"
#include "mvlaw/montecarlo.hpp"
#include "mvlaw/parser.hpp"
#include "mvlaw/qe.hpp"
#include "mvlaw/translate.hpp"

using namespace mvlaw;

namespace {

const char* kGuard = "forall x. (P(x) | not P(x))";

void BM_EvaluateUnary(benchmark::State& state) {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}}, false};
  FormulaPtr f = parse_formula(kGuard, vocab, *l3);
  auto p = AtomDistribution::uniform(vocab, *l3);
  auto m = sample_structure(static_cast<int>(state.range(0)), l3, vocab, p, {}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(m, *f));
}
BENCHMARK(BM_EvaluateUnary)->Arg(50)->Arg(200)->Arg(1000);

void BM_EvaluateBinary(benchmark::State& state) {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"R", 2}}, false};
  FormulaPtr f = parse_formula("forall x. exists y. (R(x,y) & not R(y,x))", vocab, *l3);
  auto p = AtomDistribution::uniform(vocab, *l3);
  auto m = sample_structure(static_cast<int>(state.range(0)), l3, vocab, p, {}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(m, *f));
}
BENCHMARK(BM_EvaluateBinary)->Arg(20)->Arg(50);

void BM_Decider(benchmark::State& state) {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"P", 1}, {"R", 2}}, false};
  FormulaPtr f = parse_formula(
      "forall x. exists y. ((R(x,y) & P(y)) | not R(y,x))", vocab, *l3);
  for (auto _ : state) {
    AsymptoticDecider d(l3, vocab);
    benchmark::DoNotOptimize(d.almost_sure_value(f));
  }
}
BENCHMARK(BM_Decider);

void BM_QuantifierElimination(benchmark::State& state) {
  auto l4 = algebra_by_name("L4");
  Vocabulary vocab{{{"P", 1}, {"Q", 1}}, false};
  FormulaPtr f = parse_formula(
      "forall x. exists y. ((P(x) & not Q(y)) | (not P(y) & Q(x)))", vocab, *l4);
  for (auto _ : state) benchmark::DoNotOptimize(qe_demorgan(f, *l4));
}
BENCHMARK(BM_QuantifierElimination);

void BM_Translate(benchmark::State& state) {
  auto l4 = algebra_by_name("L4");
  Vocabulary vocab{{{"R", 2}}, false};
  FormulaPtr f = parse_formula("forall x. exists y. (R(x,y) -> not R(y,x))", vocab, *l4);
  for (auto _ : state) benchmark::DoNotOptimize(translate(f, *l4, vocab));
}
BENCHMARK(BM_Translate);

void BM_SampleStructure(benchmark::State& state) {
  auto l3 = algebra_by_name("L3");
  Vocabulary vocab{{{"R", 2}}, false};
  auto p = AtomDistribution::uniform(vocab, *l3);
  std::uint64_t s = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sample_structure(static_cast<int>(state.range(0)), l3, vocab, p, {}, 7, s++));
}
BENCHMARK(BM_SampleStructure)->Arg(20)->Arg(100);

void BM_GridExtremum(benchmark::State& state) {
  auto sig = continuum_signature();
  TermPtr t = parse_term("not v | prod(v,v)", *sig);
  for (auto _ : state) benchmark::DoNotOptimize(term_extremum_interval(*t, 1e-4));
}
BENCHMARK(BM_GridExtremum);

}  // namespace

BENCHMARK_MAIN();
