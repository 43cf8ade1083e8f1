#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace czlab {

class AtomicMeasure;

/// Closed axis-parallel cube: center x_Q, side length l(Q).
struct Cube {
  std::vector<double> center;
  double side = 0.0;

  Cube() = default;
  Cube(std::vector<double> c, double s);

  std::size_t dim() const { return center.size(); }
  double half_side() const { return 0.5 * side; }

  /// Concentric cube with side eta * l(Q). Throws for eta <= 0.
  Cube dilated(double eta) const;

  /// Closed membership: |x_t - c_t| <= l(Q)/2 in every coordinate.
  bool contains(std::span<const double> x) const;

  /// Coordinatewise interval containment; equality counts.
  bool contains(const Cube& inner) const;

  /// Closed cubes; touching faces intersect.
  bool intersects(const Cube& other) const;
};

/// Sup-norm distance, the metric that decides cube membership.
double sup_dist(std::span<const double> x, std::span<const double> y);

/// Squared Euclidean distance (balls and kernels use this one).
double dist_sq(std::span<const double> x, std::span<const double> y);

/// All eta in [1, eta_max] at which some atom sits exactly on the boundary of
/// eta*Q. The map eta -> mu(eta Q) is a right-continuous step function whose
/// jumps are contained in this set; duplicates are merged, values are exact
/// functions of the inputs.
std::vector<double> critical_dilations(const AtomicMeasure& mu, const Cube& q,
                                       double eta_max);

}  // namespace czlab
