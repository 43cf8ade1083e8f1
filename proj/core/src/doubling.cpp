#include "czlab/doubling.hpp"

#include <cmath>
#include <stdexcept>

namespace czlab {

bool DoublingParams::valid_for_growth(double n) const {
  return alpha > 1.0 && beta > std::pow(alpha, n);
}

bool DoublingParams::small_cube_regime(std::size_t dim) const {
  return alpha > 1.0 && beta > std::pow(alpha, static_cast<double>(dim));
}

DerivedConstants DerivedConstants::compute(std::size_t dim, double n, double C0,
                                           double k_overlap, double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("constants: alpha must exceed 1");
  if (!(C0 > 0.0) || !(n > 0.0) || !(k_overlap >= 1.0))
    throw std::invalid_argument("constants: bad parameters");
  const double beta = std::pow(alpha, n + 1.0);
  const double an = std::pow(alpha, n);
  const double two_d1 = std::pow(2.0, static_cast<double>(dim) + 1.0);
  DerivedConstants c;
  c.C1 = C0 * std::pow(std::sqrt(static_cast<double>(dim)) * alpha, n) * beta /
         (beta - an);
  c.C2 = k_overlap * beta / two_d1;
  c.C3 = 2.0 / two_d1;
  c.B = 2.0 * c.C2 + c.C3;
  c.K_overlap = k_overlap;
  return c;
}

bool is_doubling(const AtomicMeasure& mu, const Cube& q,
                 const DoublingParams& p) {
  if (!(p.alpha > 1.0)) throw std::invalid_argument("is_doubling: alpha must exceed 1");
  const double m = cube_mass(mu, q);
  const double md = cube_mass(mu, q.dilated(p.alpha));
  // For m == 0 this reads md <= 0, i.e. the dilation must be empty too.
  return md <= p.beta * m;
}

namespace {

// The scan always terminates: once the cube swallows every atom its dilation
// has the same mass and beta >= 1 makes it doubling. The cap flags a broken
// instance (non-finite sides) rather than a mathematical possibility.
int swallow_cap(const AtomicMeasure& mu, std::span<const double> center,
                double side0, double alpha) {
  const double need = 2.0 * mu.sup_radius(center) + side0;
  int k = 0;
  double side = side0;
  while (side < need && k < 4000) {
    side *= alpha;
    ++k;
  }
  return k + 2;
}

}  // namespace

DoublingSearch doubling_cube_at_least(const AtomicMeasure& mu,
                                      std::size_t atom, double min_side,
                                      const DoublingParams& p) {
  if (atom >= mu.size()) throw std::invalid_argument("doubling search: bad atom index");
  if (!(min_side > 0.0)) throw std::invalid_argument("doubling search: side must be positive");
  if (!p.valid_for_growth(mu.growth().n))
    throw std::invalid_argument("doubling search: requires beta > alpha^n");
  const auto x = mu.position(atom);
  const Cube base(std::vector<double>(x.begin(), x.end()), min_side);
  const int cap = swallow_cap(mu, base.center, min_side, p.alpha);
  for (int k = 0; k <= cap; ++k) {
    Cube q = base.dilated(std::pow(p.alpha, k));
    if (is_doubling(mu, q, p)) return {std::move(q), k};
  }
  throw std::runtime_error(
      "doubling search: iteration cap exceeded (growth condition violated?)");
}

DoublingSearch smallest_doubling_power(const AtomicMeasure& mu, const Cube& q,
                                       double base, int k_min) {
  if (!(base > 1.0)) throw std::invalid_argument("doubling power: base must exceed 1");
  if (k_min < 0) throw std::invalid_argument("doubling power: k_min must be >= 0");
  const DoublingParams p{base, std::pow(base, mu.growth().n + 1.0)};
  const int cap = k_min + swallow_cap(mu, q.center, q.side, base);
  for (int k = k_min; k <= cap; ++k) {
    Cube cand = q.dilated(std::pow(base, k));
    if (is_doubling(mu, cand, p)) return {std::move(cand), k};
  }
  throw std::runtime_error(
      "doubling power: iteration cap exceeded (growth condition violated?)");
}

double annulus_kernel_integral(const AtomicMeasure& mu, const Cube& q,
                               const Cube& r) {
  if (q.dim() != mu.dim() || r.dim() != mu.dim())
    throw std::invalid_argument("annulus integral: dimension mismatch");
  if (q.center != r.center)
    throw std::invalid_argument("annulus integral: cubes must be concentric");
  if (r.side < q.side)
    throw std::invalid_argument("annulus integral: l(R) must be >= l(Q)");
  const double n = mu.growth().n;
  double acc = 0.0;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    const auto x = mu.position(j);
    if (!r.contains(x) || q.contains(x)) continue;
    const double d = std::sqrt(dist_sq(x, q.center));
    acc += mu.weight(j) / std::pow(d, n);
  }
  return acc;
}

}  // namespace czlab
