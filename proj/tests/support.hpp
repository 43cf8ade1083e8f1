#pragma once

#include <complex>
#include <vector>

#include "czlab/czdecomp.hpp"
#include "czlab/harness.hpp"
#include "czlab/rng.hpp"

namespace czlab::test {

// The three-atom line measure used as the worked example throughout:
// atoms at 0, 1, 3 with weights 1, 2, 4; n = 1, C0 = 8, r_min = 0.5.
inline AtomicMeasure three_atom_line() {
  return AtomicMeasure(1, {0.0, 1.0, 3.0}, {1.0, 2.0, 4.0},
                       GrowthProfile{1.0, 8.0, 0.5});
}

inline DensityVector spike_density() {
  return DensityVector::real(std::vector<double>{10.0, 0.0, 0.0});
}

inline AtomicMeasure line_measure(std::vector<double> xs,
                                  std::vector<double> ws,
                                  GrowthProfile g = {1.0, 100.0, 1e-3}) {
  return AtomicMeasure(1, std::move(xs), std::move(ws), g);
}

inline Cube interval(double center, double side) {
  return Cube({center}, side);
}

// A randomized instance drawn from the generator families, suitable for
// property tests.
inline AtomicMeasure random_measure(std::uint64_t seed) {
  Rng rng(seed);
  GeneratorSpec spec;
  switch (rng.index(4)) {
    case 0:
      spec.kind = GeneratorSpec::Kind::grid;
      spec.dim = 1;
      spec.count = 20 + rng.index(60);
      spec.n = 1.0;
      spec.jitter = rng.uniform(0.0, 0.8);
      spec.weight_spread = rng.uniform(1.0, 3.0);
      break;
    case 1:
      spec.kind = GeneratorSpec::Kind::grid;
      spec.dim = 2;
      spec.count = 36 + rng.index(80);
      spec.n = 2.0;
      spec.jitter = rng.uniform(0.0, 0.8);
      spec.weight_spread = rng.uniform(1.0, 3.0);
      break;
    case 2:
      spec.kind = GeneratorSpec::Kind::cantor;
      spec.dim = 1 + rng.index(2);
      spec.depth = spec.dim == 1 ? 5 + static_cast<int>(rng.index(3)) : 3;
      spec.n = spec.dim == 1 ? rng.uniform(0.4, 1.0) : rng.uniform(0.5, 1.5);
      break;
    default:
      spec.kind = GeneratorSpec::Kind::segment_plus_atoms;
      spec.dim = 1 + rng.index(2);
      spec.count = 30 + rng.index(70);
      spec.n = 1.0;
      spec.jitter = rng.uniform(0.0, 0.5);
      spec.iso_count = 1 + rng.index(3);
      break;
  }
  spec.seed = rng.bits();
  return gen_measure(spec);
}

inline DensityVector random_spiky_density(const AtomicMeasure& mu,
                                          std::uint64_t seed,
                                          bool complex_phases = false) {
  DensitySpec spec;
  spec.kind = DensitySpec::Kind::spikes;
  spec.spike_count = 1 + seed % 5;
  spec.spike_scale = 50.0 + static_cast<double>(seed % 97);
  spec.complex_phases = complex_phases;
  spec.background = (seed % 3 == 0) ? 0.1 : 0.0;
  spec.seed = seed;
  return gen_density(spec, mu);
}

}  // namespace czlab::test
