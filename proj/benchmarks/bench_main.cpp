#include <benchmark/benchmark.h>

#include "ipx/catalog.hpp"
#include "ipx/identities.hpp"
#include "ipx/operators.hpp"

namespace {

ipx::Operator selberg_operator(std::size_t dim, std::size_t members) {
  ipx::Rng rng(7);
  std::vector<ipx::Vec> zs;
  for (std::size_t i = 0; i < members; ++i) zs.push_back(ipx::gaussian_vec(dim, false, rng));
  return ipx::combine<ipx::Complex>({{ipx::Complex(2.0), ipx::selberg(zs)}}, ipx::Complex(-1.0));
}

void BM_SpectralNormStructured(benchmark::State& state) {
  const auto op = selberg_operator(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ipx::spectral_norm(op));
}
BENCHMARK(BM_SpectralNormStructured)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_SpectralNormDense(benchmark::State& state) {
  const auto op = selberg_operator(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ipx::spectral_norm_dense(op));
}
BENCHMARK(BM_SpectralNormDense)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_EvaluateEntry(benchmark::State& state, const char* id) {
  const auto& entry = ipx::find_entry(id);
  ipx::Rng rng(11);
  const auto c = ipx::sample_case(entry, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ipx::evaluate(entry, c));
}
BENCHMARK_CAPTURE(BM_EvaluateEntry, richard, "RICHARD");
BENCHMARK_CAPTURE(BM_EvaluateEntry, th_gen, "TH_GEN");
BENCHMARK_CAPTURE(BM_EvaluateEntry, prod_richard, "PROD_RICHARD");

void BM_ExactIdentity(benchmark::State& state) {
  ipx::Rng rng(13);
  const auto in = ipx::random_exact_instance(ipx::IdentityId::Id12, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(ipx::check_identity(ipx::IdentityId::Id12, in));
}
BENCHMARK(BM_ExactIdentity)->Arg(2)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
