#include <benchmark/benchmark.h>

#include "czlab/czdecomp.hpp"
#include "czlab/harness.hpp"
#include "czlab/rng.hpp"

using namespace czlab;

namespace {

AtomicMeasure planar_instance(std::size_t count) {
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::segment_plus_atoms;
  spec.dim = 2;
  spec.count = count;
  spec.n = 1.0;
  spec.iso_count = 4;
  spec.seed = 17;
  return gen_measure(spec);
}

void bm_truncated_transform(benchmark::State& state) {
  const auto mu = planar_instance(static_cast<std::size_t>(state.range(0)));
  DensitySpec ds;
  ds.kind = DensitySpec::Kind::ones;
  const auto f = gen_density(ds, mu);
  const double eps = 2.0 * mu.growth().r_min;
  for (auto _ : state) {
    auto v = truncated_transform(mu, Kernel::cauchy(), f, eps);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_truncated_transform)->Arg(128)->Arg(512)->Arg(1024)->Complexity();

void bm_cube_mass(benchmark::State& state) {
  const auto mu = planar_instance(static_cast<std::size_t>(state.range(0)));
  const Cube q({0.5, 0.0}, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(cube_mass(mu, q));
}
BENCHMARK(bm_cube_mass)->Arg(512)->Arg(4096);

void bm_decompose(benchmark::State& state) {
  const auto mu = planar_instance(static_cast<std::size_t>(state.range(0)));
  DensitySpec ds;
  ds.kind = DensitySpec::Kind::spikes;
  ds.spike_count = 4;
  ds.spike_scale = 300.0;
  ds.seed = 3;
  const auto f = gen_density(ds, mu);
  const auto lambdas = auto_lambda_grid(mu, f, 3);
  for (auto _ : state) {
    auto dec = decompose(mu, f, lambdas.front());
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(bm_decompose)->Arg(128)->Arg(512);

void bm_verify(benchmark::State& state) {
  const auto mu = planar_instance(static_cast<std::size_t>(state.range(0)));
  DensitySpec ds;
  ds.kind = DensitySpec::Kind::spikes;
  ds.spike_count = 4;
  ds.spike_scale = 300.0;
  ds.seed = 3;
  const auto f = gen_density(ds, mu);
  const auto lambdas = auto_lambda_grid(mu, f, 3);
  const auto dec = decompose(mu, f, lambdas.front());
  for (auto _ : state) {
    auto rep = verify_decomposition(mu, f, lambdas.front(), dec);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(bm_verify)->Arg(128)->Arg(512);

void bm_verify_growth(benchmark::State& state) {
  const auto mu = planar_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_growth(mu));
}
BENCHMARK(bm_verify_growth)->Arg(512)->Arg(2048);

void bm_besicovich(benchmark::State& state) {
  const auto mu = planar_instance(static_cast<std::size_t>(state.range(0)));
  Rng rng(9);
  std::vector<Candidate> cands;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    const auto x = mu.position(j);
    cands.push_back({j, Cube(std::vector<double>(x.begin(), x.end()),
                             rng.log_uniform(0.01, 0.5))});
  }
  for (auto _ : state) {
    auto rep = besicovich_select(mu, cands, 1024.0);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(bm_besicovich)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
