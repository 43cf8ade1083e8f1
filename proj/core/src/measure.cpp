#include "czlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace czlab {

AtomicMeasure::AtomicMeasure(std::size_t dim, std::vector<double> flat_positions,
                             std::vector<double> weights, GrowthProfile growth)
    : dim_(dim),
      positions_(std::move(flat_positions)),
      weights_(std::move(weights)),
      growth_(growth) {
  if (dim_ == 0) throw std::invalid_argument("measure: dim must be >= 1");
  if (weights_.empty()) throw std::invalid_argument("measure: no atoms");
  if (positions_.size() != weights_.size() * dim_)
    throw std::invalid_argument("measure: positions/weights length mismatch");
  for (double x : positions_)
    if (!std::isfinite(x))
      throw std::invalid_argument("measure: non-finite position");
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("measure: weights must be positive and finite");
  }
  if (!(growth_.n > 0.0) || growth_.n > static_cast<double>(dim_))
    throw std::invalid_argument("measure: growth exponent must satisfy 0 < n <= dim");
  if (!(growth_.C0 > 0.0))
    throw std::invalid_argument("measure: growth constant C0 must be positive");
  if (!(growth_.r_min > 0.0))
    throw std::invalid_argument("measure: r_min must be positive");

  total_mass_ = 0.0;
  for (double w : weights_) total_mass_ += w;

  const std::size_t n = weights_.size();
  double min_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const auto xj = position(j);
    for (std::size_t k = j + 1; k < n; ++k) {
      const double d2 = dist_sq(xj, position(k));
      if (d2 == 0.0)
        throw std::invalid_argument("measure: atom positions must be pairwise distinct");
      min_d2 = std::min(min_d2, d2);
    }
  }
  min_pair_dist_ = n > 1 ? std::sqrt(min_d2) : std::numeric_limits<double>::infinity();

  bbox_extent_ = 0.0;
  for (std::size_t t = 0; t < dim_; ++t) {
    double lo = positions_[t], hi = positions_[t];
    for (std::size_t j = 1; j < n; ++j) {
      lo = std::min(lo, positions_[j * dim_ + t]);
      hi = std::max(hi, positions_[j * dim_ + t]);
    }
    bbox_extent_ = std::max(bbox_extent_, hi - lo);
  }
}

double AtomicMeasure::sup_radius(std::span<const double> c) const {
  double m = 0.0;
  for (std::size_t j = 0; j < size(); ++j)
    m = std::max(m, sup_dist(position(j), c));
  return m;
}

DensityVector::DensityVector(std::vector<std::complex<double>> values)
    : values_(std::move(values)) {
  for (const auto& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("density: non-finite value");
}

DensityVector DensityVector::real(std::span<const double> values) {
  std::vector<std::complex<double>> v(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) v[j] = values[j];
  return DensityVector(std::move(v));
}

bool DensityVector::is_real() const {
  for (const auto& v : values_)
    if (v.imag() != 0.0) return false;
  return true;
}

namespace {

void check_pairing(const AtomicMeasure& mu, const DensityVector& f) {
  if (f.size() != mu.size())
    throw std::invalid_argument("density length does not match atom count");
}

}  // namespace

double cube_mass(const AtomicMeasure& mu, const Cube& q) {
  if (q.dim() != mu.dim())
    throw std::invalid_argument("cube_mass: dimension mismatch");
  double mass = 0.0;
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (q.contains(mu.position(j))) mass += mu.weight(j);
  return mass;
}

double ball_mass(const AtomicMeasure& mu, std::span<const double> x, double r) {
  if (x.size() != mu.dim())
    throw std::invalid_argument("ball_mass: dimension mismatch");
  if (!(r > 0.0)) throw std::invalid_argument("ball_mass: radius must be positive");
  const double r2 = r * r;
  double mass = 0.0;
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (dist_sq(mu.position(j), x) <= r2) mass += mu.weight(j);
  return mass;
}

double integrate_abs(const AtomicMeasure& mu, const DensityVector& f,
                     const Cube& q) {
  check_pairing(mu, f);
  if (q.dim() != mu.dim())
    throw std::invalid_argument("integrate_abs: dimension mismatch");
  double acc = 0.0;
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (q.contains(mu.position(j))) acc += std::abs(f[j]) * mu.weight(j);
  return acc;
}

double norm_l1(const AtomicMeasure& mu, const DensityVector& f) {
  check_pairing(mu, f);
  double acc = 0.0;
  for (std::size_t j = 0; j < mu.size(); ++j)
    acc += std::abs(f[j]) * mu.weight(j);
  return acc;
}

double max_abs(const DensityVector& f) {
  double m = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) m = std::max(m, std::abs(f[j]));
  return m;
}

GrowthReport verify_growth(const AtomicMeasure& mu) {
  const GrowthProfile& g = mu.growth();
  const std::size_t n = mu.size();
  GrowthReport rep;
  const double rmin2 = g.r_min * g.r_min;

  std::vector<double> d2(n);
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto xj = mu.position(j);
    for (std::size_t k = 0; k < n; ++k) d2[k] = dist_sq(mu.position(k), xj);
    order.resize(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return d2[a] < d2[b]; });

    // Walk radii in increasing order, carrying the running ball mass. The
    // candidate radii are r_min and every interatom distance above it.
    double mass = 0.0;
    std::size_t t = 0;
    auto check = [&](double r, double ratio_mass) {
      const double ratio = ratio_mass / std::pow(r, g.n);
      if (ratio > rep.worst_ratio) {
        rep.worst_ratio = ratio;
        rep.worst_atom = j;
        rep.worst_radius = r;
      }
      if (ratio > g.C0) rep.violations.push_back({j, r, ratio});
    };
    while (t < n && d2[order[t]] <= rmin2) mass += mu.weight(order[t++]);
    check(g.r_min, mass);
    while (t < n) {
      const double r2 = d2[order[t]];
      while (t < n && d2[order[t]] == r2) mass += mu.weight(order[t++]);
      check(std::sqrt(r2), mass);
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

}  // namespace czlab
