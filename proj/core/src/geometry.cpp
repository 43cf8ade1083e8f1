#include "czlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "czlab/measure.hpp"

namespace czlab {

Cube::Cube(std::vector<double> c, double s) : center(std::move(c)), side(s) {
  if (center.empty()) throw std::invalid_argument("cube: empty center");
  if (!(side > 0.0) || !std::isfinite(side))
    throw std::invalid_argument("cube: side must be positive and finite");
}

Cube Cube::dilated(double eta) const {
  if (!(eta > 0.0)) throw std::invalid_argument("dilate: eta must be positive");
  Cube out = *this;
  out.side = side * eta;
  return out;
}

bool Cube::contains(std::span<const double> x) const {
  if (x.size() != center.size())
    throw std::invalid_argument("cube: dimension mismatch");
  const double h = half_side();
  for (std::size_t t = 0; t < x.size(); ++t)
    if (std::abs(x[t] - center[t]) > h) return false;
  return true;
}

bool Cube::contains(const Cube& inner) const {
  if (inner.center.size() != center.size())
    throw std::invalid_argument("cube: dimension mismatch");
  const double slack = half_side() - inner.half_side();
  if (slack < 0.0) return false;
  for (std::size_t t = 0; t < center.size(); ++t)
    if (std::abs(inner.center[t] - center[t]) > slack) return false;
  return true;
}

bool Cube::intersects(const Cube& other) const {
  if (other.center.size() != center.size())
    throw std::invalid_argument("cube: dimension mismatch");
  const double reach = half_side() + other.half_side();
  for (std::size_t t = 0; t < center.size(); ++t)
    if (std::abs(other.center[t] - center[t]) > reach) return false;
  return true;
}

double sup_dist(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("sup_dist: dimension mismatch");
  double m = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t)
    m = std::max(m, std::abs(x[t] - y[t]));
  return m;
}

double dist_sq(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dist_sq: dimension mismatch");
  double s = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    const double d = x[t] - y[t];
    s += d * d;
  }
  return s;
}

std::vector<double> critical_dilations(const AtomicMeasure& mu, const Cube& q,
                                       double eta_max) {
  if (q.dim() != mu.dim())
    throw std::invalid_argument("critical_dilations: dimension mismatch");
  if (!(eta_max >= 1.0))
    throw std::invalid_argument("critical_dilations: eta_max must be >= 1");
  std::vector<double> out;
  out.reserve(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) {
    // Atom j sits on the boundary of eta Q exactly when
    // eta = 2 |x_j - x_Q|_inf / l(Q).
    const double eta = 2.0 * sup_dist(mu.position(j), q.center) / q.side;
    if (eta >= 1.0 && eta <= eta_max) out.push_back(eta);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace czlab
