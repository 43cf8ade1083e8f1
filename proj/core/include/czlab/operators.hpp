#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "czlab/measure.hpp"

namespace czlab {

enum class KernelKind { cauchy, riesz, power_law };

/// A singular kernel with declared size/smoothness data (n, delta, C_k).
/// cauchy: 1/(x-y) as complex division in the plane (n = 1, delta = 1).
/// riesz:  component j of (x-y)/|x-y|^{n+1}.
/// power_law: |x-y|^{-exponent}; with exponent > n it violates the size
/// condition and serves as the negative control.
struct Kernel {
  KernelKind kind = KernelKind::cauchy;
  std::size_t dim = 2;
  double n = 1.0;
  double delta = 1.0;
  double size_const = 2.0;  // declared C_k
  std::size_t component = 0;
  double exponent = 0.0;

  static Kernel cauchy();
  static Kernel riesz(std::size_t dim, double n, std::size_t component);
  static Kernel power_law(std::size_t dim, double n, double exponent);

  /// Never evaluated on the diagonal; throws for x == y.
  std::complex<double> eval(std::span<const double> x,
                            std::span<const double> y) const;
};

struct KernelConditionReport {
  std::size_t samples = 0;
  double max_size_ratio = 0.0;    // sup |k(x,y)| |x-y|^n
  double max_smooth_ratio = 0.0;  // sup of either difference quotient against |x-x'|^delta/|x-y|^{n+delta}
  bool size_pass = true;
  bool smooth_pass = true;
  bool pass = true;
};

/// Randomized triples (x, x', y) with |x-x'| <= |x-y|/2, |x-y| spanning six
/// decades; reports the measured size and smoothness constants against the
/// declared C_k.
KernelConditionReport verify_kernel_conditions(const Kernel& k,
                                               std::size_t samples,
                                               std::uint64_t seed = 1);

/// T_eps f at the given atoms: sum over |x - x_j| > eps (strict) of
/// k(x, x_j) f_j w_j, direct summation in atom-index order. eps must be at
/// least the measure's r_min.
std::vector<std::complex<double>> truncated_transform(
    const AtomicMeasure& mu, const Kernel& k, const DensityVector& f,
    double eps);
std::vector<std::complex<double>> truncated_transform(
    const AtomicMeasure& mu, const Kernel& k, const DensityVector& f,
    double eps, std::span<const std::size_t> eval_atoms);

/// Adjoint against the weighted inner product <u,v> = sum u_j conj(v_j) w_j;
/// uses conj(k(y,x)).
std::vector<std::complex<double>> adjoint_truncated_transform(
    const AtomicMeasure& mu, const Kernel& k, const DensityVector& g,
    double eps);

/// max over the lambda grid (augmented with |v_j| (1 - 1e-9) to catch the
/// sup of step data) of lambda * mu{|v| > lambda} / norm1.
double weak_quasinorm(const AtomicMeasure& mu,
                      std::span<const std::complex<double>> values,
                      double norm1, std::span<const double> lambdas);

/// Operator norm of T_eps on L^2(mu) estimated by power iteration on the
/// adjoint composition.
double empirical_l2_norm(const AtomicMeasure& mu, const Kernel& k, double eps,
                         int iterations, std::uint64_t seed = 1);

struct WeakSweep {
  std::vector<double> epsilons;
  std::vector<double> lambdas;
  std::vector<std::vector<double>> exceedance;  // [eps][lambda] mass of {|T_eps f| > lambda}
  std::vector<double> quasinorm_per_eps;        // augmented sup per epsilon
  double quasinorm = 0.0;                       // max over the sweep
};

WeakSweep weak_sweep(const AtomicMeasure& mu, const Kernel& k,
                     const DensityVector& f, std::span<const double> epsilons,
                     std::span<const double> lambdas);

}  // namespace czlab
