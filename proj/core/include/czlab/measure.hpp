#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "czlab/geometry.hpp"

namespace czlab {

/// Growth profile of a measure: mu(B(x,r)) <= C0 * r^n for all r >= r_min.
/// r_min is the resolution floor of the atomic model; below it a point mass
/// makes any polynomial bound impossible.
struct GrowthProfile {
  double n = 1.0;
  double C0 = 1.0;
  double r_min = 1.0;
};

struct GrowthViolation {
  std::size_t atom = 0;
  double radius = 0.0;
  double ratio = 0.0;
};

struct GrowthReport {
  bool pass = true;
  double worst_ratio = 0.0;  // max over checked (x, r) of mu(B(x,r)) / r^n
  std::size_t worst_atom = 0;
  double worst_radius = 0.0;
  std::vector<GrowthViolation> violations;
};

/// Finite atomic measure: weighted points in R^d with a declared growth
/// profile. Immutable after construction; all queries are pure.
class AtomicMeasure {
 public:
  AtomicMeasure(std::size_t dim, std::vector<double> flat_positions,
                std::vector<double> weights, GrowthProfile growth);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const double> position(std::size_t j) const {
    return {positions_.data() + j * dim_, dim_};
  }
  double weight(std::size_t j) const { return weights_[j]; }
  std::span<const double> weights() const { return weights_; }
  std::span<const double> positions_flat() const { return positions_; }
  const GrowthProfile& growth() const { return growth_; }
  double total_mass() const { return total_mass_; }

  /// Smallest pairwise Euclidean distance between atoms (> 0 by invariant).
  double min_pair_distance() const { return min_pair_dist_; }

  /// Max over coordinates of (max - min) atom coordinate.
  double bbox_extent() const { return bbox_extent_; }

  /// Smallest cube centered at c containing every atom has this half-side.
  double sup_radius(std::span<const double> c) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> positions_;  // flat, size() * dim_
  std::vector<double> weights_;
  GrowthProfile growth_;
  double total_mass_ = 0.0;
  double min_pair_dist_ = 0.0;
  double bbox_extent_ = 0.0;
};

/// Per-atom values of a density f against a paired measure. Real densities
/// are the special case of zero imaginary parts.
class DensityVector {
 public:
  DensityVector() = default;
  explicit DensityVector(std::vector<std::complex<double>> values);
  static DensityVector real(std::span<const double> values);

  std::size_t size() const { return values_.size(); }
  std::complex<double> operator[](std::size_t j) const { return values_[j]; }
  std::span<const std::complex<double>> values() const { return values_; }
  bool is_real() const;

 private:
  std::vector<std::complex<double>> values_;
};

/// mu(Q), closed-cube membership (boundary atoms count).
double cube_mass(const AtomicMeasure& mu, const Cube& q);

/// mu(B(x,r)), closed Euclidean ball.
double ball_mass(const AtomicMeasure& mu, std::span<const double> x, double r);

/// Integral of |f| over Q: sum of |f_j| w_j over atoms in Q.
double integrate_abs(const AtomicMeasure& mu, const DensityVector& f,
                     const Cube& q);

/// ||f||_{L1(mu)} = sum |f_j| w_j.
double norm_l1(const AtomicMeasure& mu, const DensityVector& f);

double max_abs(const DensityVector& f);

/// Checks mu(B(x_j,r)) <= C0 r^n at every atom center over the finite set of
/// critical radii {r_min} and {|x_k - x_j| : >= r_min}. Ball mass is a
/// right-continuous step function of r jumping only at interatom distances
/// while C0 r^n is increasing, so these radii decide the bound for all
/// r >= r_min.
GrowthReport verify_growth(const AtomicMeasure& mu);

}  // namespace czlab
