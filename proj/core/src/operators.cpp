#include "czlab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "czlab/parallel.hpp"
#include "czlab/rng.hpp"

namespace czlab {

Kernel Kernel::cauchy() {
  Kernel k;
  k.kind = KernelKind::cauchy;
  k.dim = 2;
  k.n = 1.0;
  k.delta = 1.0;
  k.size_const = 2.0;
  return k;
}

Kernel Kernel::riesz(std::size_t dim, double n, std::size_t component) {
  if (component >= dim) throw std::invalid_argument("riesz: component out of range");
  Kernel k;
  k.kind = KernelKind::riesz;
  k.dim = dim;
  k.n = n;
  k.delta = 1.0;
  k.size_const = 2.0;
  k.component = component;
  return k;
}

Kernel Kernel::power_law(std::size_t dim, double n, double exponent) {
  Kernel k;
  k.kind = KernelKind::power_law;
  k.dim = dim;
  k.n = n;
  k.delta = 1.0;
  k.size_const = 2.0;
  k.exponent = exponent;
  return k;
}

std::complex<double> Kernel::eval(std::span<const double> x,
                                  std::span<const double> y) const {
  if (x.size() != dim || y.size() != dim)
    throw std::invalid_argument("kernel: dimension mismatch");
  switch (kind) {
    case KernelKind::cauchy: {
      const std::complex<double> z(x[0] - y[0], x[1] - y[1]);
      if (z == 0.0) throw std::invalid_argument("kernel: diagonal evaluation");
      return 1.0 / z;
    }
    case KernelKind::riesz: {
      const double r2 = dist_sq(x, y);
      if (r2 == 0.0) throw std::invalid_argument("kernel: diagonal evaluation");
      return (x[component] - y[component]) /
             std::pow(std::sqrt(r2), n + 1.0);
    }
    case KernelKind::power_law: {
      const double r2 = dist_sq(x, y);
      if (r2 == 0.0) throw std::invalid_argument("kernel: diagonal evaluation");
      return std::pow(std::sqrt(r2), -exponent);
    }
  }
  throw std::logic_error("kernel: unknown kind");
}

KernelConditionReport verify_kernel_conditions(const Kernel& k,
                                               std::size_t samples,
                                               std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("kernel check: samples must be >= 1");
  Rng rng(seed);
  KernelConditionReport rep;
  rep.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    const double scale = std::pow(10.0, rng.uniform(-3.0, 3.0));
    std::vector<double> y(k.dim);
    for (auto& c : y) c = rng.uniform(-1.0, 1.0);
    const auto u = rng.direction(k.dim);
    std::vector<double> x(k.dim);
    for (std::size_t t = 0; t < k.dim; ++t) x[t] = y[t] + scale * u[t];
    // Displacement up to half the separation, log-uniform over six decades.
    const double frac = std::pow(10.0, rng.uniform(-6.0, std::log10(0.5)));
    const auto v = rng.direction(k.dim);
    std::vector<double> xp(k.dim);
    for (std::size_t t = 0; t < k.dim; ++t) xp[t] = x[t] + frac * scale * v[t];

    const double dxy = std::sqrt(dist_sq(x, y));
    const double dxx = std::sqrt(dist_sq(x, xp));
    if (!(dxx > 0.0) || dxx > 0.5 * dxy) continue;

    const double size_ratio = std::abs(k.eval(x, y)) * std::pow(dxy, k.n);
    rep.max_size_ratio = std::max(rep.max_size_ratio, size_ratio);

    const double d1 = std::abs(k.eval(x, y) - k.eval(xp, y));
    const double d2 = std::abs(k.eval(y, x) - k.eval(y, xp));
    const double smooth_ratio = std::max(d1, d2) * std::pow(dxy, k.n + k.delta) /
                                std::pow(dxx, k.delta);
    rep.max_smooth_ratio = std::max(rep.max_smooth_ratio, smooth_ratio);
  }
  rep.size_pass = rep.max_size_ratio <= k.size_const;
  rep.smooth_pass = rep.max_smooth_ratio <= k.size_const;
  rep.pass = rep.size_pass && rep.smooth_pass;
  return rep;
}

namespace {

void check_transform_args(const AtomicMeasure& mu, const Kernel& k,
                          std::size_t flen, double eps) {
  if (k.dim != mu.dim())
    throw std::invalid_argument("transform: kernel/measure dimension mismatch");
  if (flen != mu.size())
    throw std::invalid_argument("transform: density length mismatch");
  if (!(eps >= mu.growth().r_min))
    throw std::invalid_argument("transform: eps below the resolution floor r_min");
}

}  // namespace

std::vector<std::complex<double>> truncated_transform(
    const AtomicMeasure& mu, const Kernel& k, const DensityVector& f,
    double eps, std::span<const std::size_t> eval_atoms) {
  check_transform_args(mu, k, f.size(), eps);
  const double eps2 = eps * eps;
  std::vector<std::complex<double>> out(eval_atoms.size());
  parallel_for(eval_atoms.size(), [&](std::size_t i) {
    const auto x = mu.position(eval_atoms[i]);
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (dist_sq(x, mu.position(j)) <= eps2) continue;  // strict truncation
      acc += k.eval(x, mu.position(j)) * f[j] * mu.weight(j);
    }
    out[i] = acc;
  });
  return out;
}

std::vector<std::complex<double>> truncated_transform(const AtomicMeasure& mu,
                                                      const Kernel& k,
                                                      const DensityVector& f,
                                                      double eps) {
  std::vector<std::size_t> all(mu.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return truncated_transform(mu, k, f, eps, all);
}

std::vector<std::complex<double>> adjoint_truncated_transform(
    const AtomicMeasure& mu, const Kernel& k, const DensityVector& g,
    double eps) {
  check_transform_args(mu, k, g.size(), eps);
  const double eps2 = eps * eps;
  std::vector<std::complex<double>> out(mu.size());
  parallel_for(mu.size(), [&](std::size_t j) {
    const auto xj = mu.position(j);
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (dist_sq(mu.position(i), xj) <= eps2) continue;
      acc += std::conj(k.eval(mu.position(i), xj)) * g[i] * mu.weight(i);
    }
    out[j] = acc;
  });
  return out;
}

double weak_quasinorm(const AtomicMeasure& mu,
                      std::span<const std::complex<double>> values,
                      double norm1, std::span<const double> lambdas) {
  if (values.size() != mu.size())
    throw std::invalid_argument("weak_quasinorm: value length mismatch");
  if (!(norm1 > 0.0))
    throw std::invalid_argument("weak_quasinorm: norm1 must be positive");
  std::vector<double> grid(lambdas.begin(), lambdas.end());
  // The sup of lambda * mu{|v| > lambda} over step data is approached just
  // below each |v_j|; pin those points onto the grid.
  for (const auto& v : values) {
    const double a = std::abs(v);
    if (a > 0.0) grid.push_back(a * (1.0 - 1e-9));
  }
  double best = 0.0;
  for (double lam : grid) {
    if (!(lam > 0.0)) continue;
    double mass = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j)
      if (std::abs(values[j]) > lam) mass += mu.weight(j);
    best = std::max(best, lam * mass / norm1);
  }
  return best;
}

double empirical_l2_norm(const AtomicMeasure& mu, const Kernel& k, double eps,
                         int iterations, std::uint64_t seed) {
  if (iterations < 1)
    throw std::invalid_argument("l2 norm: iterations must be >= 1");
  Rng rng(seed);
  const std::size_t n = mu.size();
  std::vector<std::complex<double>> v(n);
  for (auto& z : v) z = rng.unit_phase();

  auto weighted_norm = [&](std::span<const std::complex<double>> u) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::norm(u[j]) * mu.weight(j);
    return std::sqrt(s);
  };

  double estimate = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const double nv = weighted_norm(v);
    if (nv == 0.0) return 0.0;
    for (auto& z : v) z /= nv;
    auto tv = truncated_transform(mu, k, DensityVector(v), eps);
    const double ntv = weighted_norm(tv);
    if (ntv == 0.0) return 0.0;
    estimate = ntv;  // ||T v|| with ||v|| = 1
    v = adjoint_truncated_transform(mu, k, DensityVector(std::move(tv)), eps);
  }
  return estimate;
}

WeakSweep weak_sweep(const AtomicMeasure& mu, const Kernel& k,
                     const DensityVector& f, std::span<const double> epsilons,
                     std::span<const double> lambdas) {
  WeakSweep sweep;
  sweep.epsilons.assign(epsilons.begin(), epsilons.end());
  sweep.lambdas.assign(lambdas.begin(), lambdas.end());
  sweep.exceedance.resize(epsilons.size());
  sweep.quasinorm_per_eps.resize(epsilons.size());
  const double norm1 = norm_l1(mu, f);
  for (std::size_t e = 0; e < epsilons.size(); ++e) {
    const auto values = truncated_transform(mu, k, f, epsilons[e]);
    auto& row = sweep.exceedance[e];
    row.resize(lambdas.size());
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
      double mass = 0.0;
      for (std::size_t j = 0; j < values.size(); ++j)
        if (std::abs(values[j]) > lambdas[l]) mass += mu.weight(j);
      row[l] = mass;
    }
    sweep.quasinorm_per_eps[e] =
        norm1 > 0.0 ? weak_quasinorm(mu, values, norm1, lambdas) : 0.0;
    sweep.quasinorm = std::max(sweep.quasinorm, sweep.quasinorm_per_eps[e]);
  }
  return sweep;
}

}  // namespace czlab
