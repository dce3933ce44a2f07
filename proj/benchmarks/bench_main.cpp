#include <benchmark/benchmark.h>

#include <memory>

#include "ffrag/eliminate.hpp"
#include "ffrag/enumerate.hpp"
#include "ffrag/generate.hpp"
#include "ffrag/godel.hpp"
#include "ffrag/interpret.hpp"
#include "ffrag/model.hpp"
#include "ffrag/oracle.hpp"
#include "ffrag/parse.hpp"
#include "ffrag/print.hpp"
#include "ffrag/series.hpp"
#include "ffrag/strata.hpp"
#include "ffrag/toy.hpp"

using namespace ffrag;

namespace {

const char* kSample = "(exists (x K) (exists (y K) (= (*.K x y) (+.K 1.K 1.K))))";

void BM_ParsePrintRoundTrip(benchmark::State& state) {
  const Signature& sig = ring_signature();
  for (auto _ : state) {
    Sentence s = parse_sentence(kSample, sig);
    benchmark::DoNotOptimize(print_canonical(s));
  }
}
BENCHMARK(BM_ParsePrintRoundTrip);

void BM_GodelCodeDecode(benchmark::State& state) {
  Sentence s = parse_sentence(kSample, ring_signature());
  for (auto _ : state) {
    Natural n = godel_code(s);
    benchmark::DoNotOptimize(godel_decode(n, ring_signature()));
  }
}
BENCHMARK(BM_GodelCodeDecode);

void BM_EvaluatePrimeField(benchmark::State& state) {
  StructurePtr f = prime_field(static_cast<uint64_t>(state.range(0)));
  Sentence s = parse_sentence(kSample, ring_signature());
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(*f, s));
}
BENCHMARK(BM_EvaluatePrimeField)->Arg(7)->Arg(31)->Arg(101);

void BM_ResidueInterpret(benchmark::State& state) {
  Rng rng(1);
  Sentence s = gen_ring_sentence(rng);
  for (auto _ : state) benchmark::DoNotOptimize(residue_interpret(s));
}
BENCHMARK(BM_ResidueInterpret);

void BM_HenselLift(benchmark::State& state) {
  uint32_t N = static_cast<uint32_t>(state.range(0));
  SeriesPoly f;
  f.coeff.push_back(TruncatedSeries(3, N, {2, 2}));  // -(1+t)
  f.coeff.push_back(TruncatedSeries(3, N));
  f.coeff.push_back(TruncatedSeries::constant(3, N, 1));
  for (auto _ : state) benchmark::DoNotOptimize(hensel_lift(f, 1, N));
}
BENCHMARK(BM_HenselLift)->Arg(8)->Arg(32)->Arg(128);

void BM_ToySigmaOracle(benchmark::State& state) {
  auto inst = std::make_shared<ToyInstance>(4);
  Rng rng(2);
  Sentence s = gen_toy_sentence(rng, *inst, 3);
  for (auto _ : state) benchmark::DoNotOptimize(inst->in_sigma_pos(s));
}
BENCHMARK(BM_ToySigmaOracle);

void BM_DecideZeroChar(benchmark::State& state) {
  auto inst = std::make_shared<ToyInstance>(4);
  ToyOracleFamily fam = toy_oracles(inst);
  CharFamily cf = toy_char_family(inst);
  Sentence r1 = inst->atom(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        decide_zero_char(r1, fam.sigma, fam.positive, fam.eventually, cf));
}
BENCHMARK(BM_DecideZeroChar);

void BM_EliminationToySearch(benchmark::State& state) {
  auto inst = std::make_shared<ToyInstance>(3, 0);
  auto sig_r = std::shared_ptr<const Signature>(inst, &inst->sig());
  auto sig_s = std::make_shared<Signature>(propositional_signature({"s1", "s2", "s3"}));
  TranslationMap iota = prop_rename_map(sig_r, sig_s);
  auto tt = truth_table_prover(all_assignments(*sig_s), {});
  auto lt = std::make_shared<LtClassEnumerator>(std::make_shared<ToyInstance>(3));
  CandidateEnumerator cands{"lt", [lt](uint64_t i) { return lt->at(i); }, lt->size()};
  Sentence psi = parse_sentence("(or (and (s1) (not (s2))) (and (not (s1)) (s2)))", *sig_s);
  EliminationOptions opts;
  opts.fast_path = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(search_elimination(psi, iota, cands, *tt, opts));
}
BENCHMARK(BM_EliminationToySearch);

void BM_FragmentEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    FragmentEnumerator en(fragment_qf(ring_signature()));
    benchmark::DoNotOptimize(en.at(static_cast<size_t>(state.range(0))));
  }
}
BENCHMARK(BM_FragmentEnumeration)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
