#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "czlab/czdecomp.hpp"
#include "czlab/operators.hpp"

namespace czlab {

/// Measure generators. `grid` is the doubling baseline; `cantor` produces the
/// self-similar corner construction with exponent n (ratio (2^d)^{-1/n});
/// `segment_plus_atoms` puts most of the mass on a line and adds a few heavy
/// isolated atoms, which makes cube masses jump violently across scales.
struct GeneratorSpec {
  enum class Kind { grid, cantor, segment_plus_atoms, custom };

  Kind kind = Kind::grid;
  std::size_t dim = 1;
  std::size_t count = 100;  // grid / segment atom budget
  int depth = 4;            // cantor
  double n = 1.0;           // declared growth exponent
  double C0 = 0.0;          // 0 = fit the tight constant from the instance
  double r_min = 0.0;       // 0 = smallest pairwise distance
  double total_mass = 1.0;
  double jitter = 0.0;      // fraction of the local spacing, in [0, 1)
  double weight_spread = 1.0;  // >= 1; log-uniform weight perturbation factor
  std::size_t iso_count = 3;   // segment_plus_atoms
  double iso_mass_fraction = 0.5;
  std::uint64_t seed = 0;
  std::string file;  // custom
};

AtomicMeasure gen_measure(const GeneratorSpec& spec);

/// Largest mu(2Q)/mu(Q) over atom-centered cubes with critical sides; the
/// quick gauge of how far the instance is from doubling.
double max_doubling_ratio(const AtomicMeasure& mu);

struct DensitySpec {
  enum class Kind { ones, spikes, random_sign, random_phase, custom };

  Kind kind = Kind::spikes;
  std::size_t spike_count = 3;
  double spike_scale = 100.0;
  bool complex_phases = false;
  double background = 0.0;  // uniform |value| added to non-spike atoms
  std::uint64_t seed = 0;
  std::string file;
};

DensityVector gen_density(const DensitySpec& spec, const AtomicMeasure& mu);

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
  std::vector<double> values;  // explicit override

  bool empty() const { return count == 0 && values.empty(); }
};

std::vector<double> geometric_grid(double lo, double hi, std::size_t count);

/// Geometric lambda grid between 1.01x the admissibility floor and
/// 2x max|f|; empty when the range collapses.
std::vector<double> auto_lambda_grid(const AtomicMeasure& mu,
                                     const DensityVector& f,
                                     std::size_t count);

struct ExperimentConfig {
  GeneratorSpec measure;
  DensitySpec density;
  Kernel kernel = Kernel::cauchy();
  GridSpec lambdas;   // default: auto grid with 12 points
  GridSpec epsilons;  // default: [r_min, 100 r_min], 9 points
  int l2_iterations = 40;
  bool with_l2 = true;
  DecompositionOptions decomp;
};

struct LambdaRun {
  double lambda = 0.0;
  bool admissible = true;
  std::size_t parts = 0;
  bool pass = true;
  double max_phi_over_lambda = 0.0;  // max_x sum_i |phi_i(x)| / lambda
  double max_alpha_over_lambda = 0.0;
  double max_annulus_integral = 0.0;
  int max_overlap = 0;
  InvariantReport report;
};

struct EpsRun {
  double eps = 0.0;
  double quasinorm = 0.0;
  double l2_norm = 0.0;
};

struct ExperimentReport {
  GeneratorSpec measure_spec;
  DensitySpec density_spec;
  std::size_t atom_count = 0;
  double total_mass = 0.0;
  double density_norm1 = 0.0;
  double doubling_ratio = 0.0;
  DerivedConstants constants;
  std::vector<LambdaRun> lambda_runs;
  std::vector<EpsRun> eps_runs;
  double max_quasinorm = 0.0;
  double quasinorm_spread = 0.0;  // max/min over the eps grid
  double max_l2_norm = 0.0;
  double seconds = 0.0;  // timing only; excluded from determinism comparisons
};

/// Decomposes and verifies at every admissible lambda, sweeps the truncated
/// transform over the eps grid. Throws InvariantViolation naming the failing
/// condition, the seed and the lambda if any verification fails.
ExperimentReport run_weak11_experiment(const ExperimentConfig& cfg);

}  // namespace czlab
