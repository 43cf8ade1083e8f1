#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "czlab/covering.hpp"
#include "czlab/doubling.hpp"

namespace czlab {

/// Hard failure of a constructed invariant (wrong constant, geometry bug).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DecompositionOptions {
  double k_overlap = 0.0;  // 0 -> 2^dim
  // The annulus covering path engages when the level set's bounding box
  // exceeds this extent; default never.
  double annulus_engage_extent = std::numeric_limits<double>::infinity();
  double annulus_ratio = 1.25;
  int annulus_N = 0;       // 0 -> scan
  int annulus_Nprime = 0;
};

struct SelectionInfo {
  std::size_t candidates = 0;
  std::vector<int> atom_overlap;  // per atom: count of selected cubes containing it
  int max_overlap = 0;
  double k_overlap_bound = 0.0;
  bool annulus_engaged = false;
  int annulus_N = 0;
  int annulus_Nprime = 0;
};

/// One bad piece b_i = w_i f - phi_i with its stopping cube Q, doubling
/// companion R = 6^k Q, coefficient alpha and support A of phi_i.
struct CZPart {
  Cube q;
  Cube r;
  int r_power = 1;
  std::size_t gen_atom = 0;
  std::vector<std::size_t> atoms_q;  // atoms inside q, ascending
  std::vector<std::size_t> atoms_r;  // atoms inside r, ascending
  std::vector<std::size_t> support;  // A_i, subset of atoms_r, ascending
  std::complex<double> alpha;
  std::vector<std::complex<double>> b;  // aligned with atoms_r
};

struct CZDecomposition {
  double lambda = 0.0;
  double theta = 0.0;  // lambda / 2^{d+1}
  DerivedConstants constants;
  std::vector<CZPart> parts;  // in phi processing order: l(R) non-decreasing
  std::vector<std::complex<double>> g;
  SelectionInfo selection;
};

/// 2^{d+1} ||f||_1 / ||mu||; lambda must exceed this strictly.
double admissibility_floor(const AtomicMeasure& mu, const DensityVector& f);
bool is_admissible(const AtomicMeasure& mu, const DensityVector& f,
                   double lambda);

/// Stopping cube of an atom with |f| > lambda. With theta = lambda/2^{d+1}
/// and h(l) the ratio of the |f|-integral over the cube of side l to the
/// mass of the doubled cube, h is a right-continuous step function of l that
/// starts at |f_j| > theta and ends at ||f||_1/||mu|| < theta. The returned
/// side is the midpoint of the last maximal interval where h > theta, which
/// makes h(l') <= theta for every l' > 2 l*.
Cube stopping_cube(const AtomicMeasure& mu, const DensityVector& f,
                   double lambda, std::size_t atom);

struct SelectedCubes {
  std::vector<Candidate> cubes;  // in selection acceptance order
  SelectionInfo info;
};

/// Stopping cubes for every atom above lambda, thinned to an almost disjoint
/// family by the covering module.
SelectedCubes select_cubes(const AtomicMeasure& mu, const DensityVector& f,
                           double lambda,
                           const DecompositionOptions& opts = {});

/// Companion R_i = 6^k Q_i, smallest k >= 1 that is (6,6^{n+1})-doubling.
std::vector<DoublingSearch> attach_r(const AtomicMeasure& mu,
                                     std::span<const Candidate> cubes);

/// Builds the flattening functions phi_i = alpha_i chi_{A_i} in order of
/// non-decreasing l(R_i) (ties: generator atom index), together with the bad
/// parts b_i. Throws InvariantViolation if mu(A_i) < mu(R_i)/2.
std::vector<CZPart> build_phi(const AtomicMeasure& mu, const DensityVector& f,
                              double lambda, std::span<const Candidate> cubes,
                              std::span<const DoublingSearch> rs,
                              const DerivedConstants& constants);

/// Full pipeline: select -> attach companions -> build phi -> assemble
/// g = f off the union of Q_i plus the sum of phi_i.
CZDecomposition decompose(const AtomicMeasure& mu, const DensityVector& f,
                          double lambda,
                          const DecompositionOptions& opts = {});

struct ConditionResult {
  std::string id;
  bool pass = true;
  double measured = 0.0;  // worst measured value, normalized by the bound where sensible
  double bound = 0.0;
  std::string note;
};

struct InvariantReport {
  bool pass = true;
  std::vector<ConditionResult> conditions;
  DerivedConstants constants;

  const ConditionResult* find(std::string_view id) const;
};

/// Re-derives every decomposition invariant from scratch (fresh mass and
/// integral queries, membership recomputed from the cubes) and reports
/// pass/fail with measured slack per condition.
InvariantReport verify_decomposition(const AtomicMeasure& mu,
                                     const DensityVector& f, double lambda,
                                     const CZDecomposition& dec);

}  // namespace czlab
