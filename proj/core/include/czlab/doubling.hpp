#pragma once

#include <cstddef>

#include "czlab/measure.hpp"

namespace czlab {

/// Q is (alpha,beta)-doubling when mu(alpha Q) <= beta mu(Q). The upward
/// search below needs beta > alpha^n; beta > alpha^dim additionally puts the
/// parameters in the small-cube regime.
struct DoublingParams {
  double alpha = 2.0;
  double beta = 0.0;

  bool valid_for_growth(double n) const;
  bool small_cube_regime(std::size_t dim) const;
};

/// Constants derived once per run from (dim, n, C0, K_overlap); every report
/// carries them so the measured estimates are checkable numbers.
///   C1 = C0 (sqrt(d) alpha)^n beta/(beta - alpha^n)   with beta = alpha^{n+1}
///   C2 = K_overlap alpha^{n+1} / 2^{d+1}
///   C3 = 2 / 2^{d+1}
///   B  = 2 C2 + C3
struct DerivedConstants {
  double C1 = 0.0;
  double C2 = 0.0;
  double C3 = 0.0;
  double B = 0.0;
  double K_overlap = 0.0;

  static DerivedConstants compute(std::size_t dim, double n, double C0,
                                  double k_overlap, double alpha = 6.0);
};

/// Zero-mass cubes count as doubling iff the dilation also has zero mass.
bool is_doubling(const AtomicMeasure& mu, const Cube& q,
                 const DoublingParams& p);

struct DoublingSearch {
  Cube cube;
  int power = 0;  // accepted exponent k
};

/// Smallest k >= 0 such that the cube centered at atom x with side
/// min_side * alpha^k is (alpha,beta)-doubling. Terminates for every finite
/// measure; the iteration cap only trips on a broken growth profile.
DoublingSearch doubling_cube_at_least(const AtomicMeasure& mu,
                                      std::size_t atom, double min_side,
                                      const DoublingParams& p);

/// Smallest k >= k_min such that base^k Q is (base, base^{n+1})-doubling,
/// with n taken from the measure's growth profile.
DoublingSearch smallest_doubling_power(const AtomicMeasure& mu, const Cube& q,
                                       double base = 6.0, int k_min = 1);

/// Sum of w_j / |x_j - x_Q|^n over atoms of R \ Q. Q and R must be concentric
/// (exact center equality) with l(R) >= l(Q).
double annulus_kernel_integral(const AtomicMeasure& mu, const Cube& q,
                               const Cube& r);

}  // namespace czlab
