#include <benchmark/benchmark.h>

#include <random>

#include "relsa/catalog.hpp"

using namespace relsa;

namespace {

FpMat random_mat(std::size_t n, std::int64_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  FpMat m(n, n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Fp(dist(rng), p);
  return m;
}

void BM_solve(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const std::int64_t p = 7;
  const std::size_t n = std::size_t(state.range(0));
  FpMat a = random_mat(n, p, rng);
  FpVec b = zero_vec(n, p);
  for (auto& c : b) c = Fp(3, p);
  for (auto _ : state) {
    auto r = solve(a, b);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_solve)->Arg(8)->Arg(16)->Arg(32);

void BM_extend_roundtrip(benchmark::State& state) {
  ExampleParams prm;
  prm.p = 5;
  prm.q = 2;
  prm.u = 3;
  ExampleEntry e = load_example("D7", prm);
  for (auto _ : state) {
    Extension ext = extend(e.alg, *e.pmap, e.forms[0], e.recipes[0]);
    Reduction red = reduce(ext.alg, ext.form, ext.pmap,
                           ext.alg.space().e(ext.x_index),
                           ExtKind::ortho_even);
    benchmark::DoNotOptimize(red);
  }
}
BENCHMARK(BM_extend_roundtrip);

void BM_detect_qf_witt(benchmark::State& state) {
  ExampleParams prm;
  prm.p = state.range(0);
  ExampleEntry e = load_example("W1", prm);
  for (auto _ : state) {
    QfDetection det = detect_qf(e.alg, Parity::even);
    benchmark::DoNotOptimize(det);
  }
}
BENCHMARK(BM_detect_qf_witt)->Arg(5)->Arg(7);

void BM_verify_claims_k2m(benchmark::State& state) {
  ExampleParams prm;
  prm.p = 3;
  prm.m = 3;
  prm.lambda = 1;
  for (auto _ : state) {
    ClaimReport rep = verify_claims("K2m_odd", prm);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_verify_claims_k2m);

}  // namespace

BENCHMARK_MAIN();
