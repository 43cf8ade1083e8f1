#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "czlab/measure.hpp"

namespace czlab {

/// A stopping cube centered at an atom, tagged with the atom index.
struct Candidate {
  std::size_t atom = 0;
  Cube cube;
};

struct SelectionReport {
  std::vector<std::size_t> selected;  // indices into the candidate list, in acceptance order
  std::vector<int> atom_overlap;      // per measure atom: selected cubes containing it
  int max_overlap = 0;
};

/// Greedy almost-disjoint selection: candidates sorted by side descending
/// (ties: lower atom index), a cube is accepted iff no previously accepted
/// cube contains its center. Every candidate center ends up covered by an
/// accepted cube, and at most 2^d accepted cubes can share a point (one per
/// orthant around it). Throws when the measured overlap exceeds
/// k_overlap_bound, which signals a geometry bug.
SelectionReport besicovich_select(const AtomicMeasure& mu,
                                  std::span<const Candidate> candidates,
                                  double k_overlap_bound);

/// Annulus strategy for widely spread level sets: candidates are grouped by
/// the smallest m with center in Q_m = ratio^m Q_0 and selected per group.
struct AnnulusConfig {
  double ratio = 1.25;
  Cube q0;          // base cube; mu(Q0) must exceed 2^{d+1} ||f||_1 / lambda
  int N = 0;        // confinement window; 0 = scan for the smallest passing value
  int Nprime = 0;   // first annulus index the confinement check applies to
};

struct AnnulusReport {
  SelectionReport selection;          // indices refer to the original candidate list
  std::vector<int> annulus_index;     // per candidate
  int N = 0;
  int Nprime = 0;
  bool confinement_ok = true;
  std::vector<std::size_t> confinement_violations;  // candidate indices
};

/// Selected cubes are re-measured for overlap globally. The confinement
/// property checked per selected cube Q_x from annulus m >= Nprime is
/// Q_x inside Q_{m+N} and disjoint from Q_{m-N} (empty when m < N).
AnnulusReport annulus_cover(const AtomicMeasure& mu, const DensityVector& f,
                            double lambda,
                            std::span<const Candidate> candidates,
                            const AnnulusConfig& cfg, double k_overlap_bound);

}  // namespace czlab
