#include "czlab/covering.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "czlab/czdecomp.hpp"

namespace czlab {

namespace {

std::vector<std::size_t> greedy_order(std::span<const Candidate> candidates) {
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (candidates[a].cube.side != candidates[b].cube.side)
      return candidates[a].cube.side > candidates[b].cube.side;
    if (candidates[a].atom != candidates[b].atom)
      return candidates[a].atom < candidates[b].atom;
    return a < b;
  });
  return order;
}

std::vector<std::size_t> greedy_accept(std::span<const Candidate> candidates,
                                       std::span<const std::size_t> order) {
  std::vector<std::size_t> accepted;
  for (std::size_t idx : order) {
    const auto& c = candidates[idx];
    bool covered = false;
    for (std::size_t a : accepted) {
      if (candidates[a].cube.contains(std::span<const double>(c.cube.center))) {
        covered = true;
        break;
      }
    }
    if (!covered) accepted.push_back(idx);
  }
  return accepted;
}

void measure_overlap(const AtomicMeasure& mu,
                     std::span<const Candidate> candidates,
                     std::span<const std::size_t> accepted,
                     SelectionReport& rep) {
  rep.atom_overlap.assign(mu.size(), 0);
  for (std::size_t j = 0; j < mu.size(); ++j) {
    const auto x = mu.position(j);
    for (std::size_t a : accepted)
      if (candidates[a].cube.contains(x)) ++rep.atom_overlap[j];
  }
  rep.max_overlap = 0;
  for (int c : rep.atom_overlap) rep.max_overlap = std::max(rep.max_overlap, c);
}

}  // namespace

SelectionReport besicovich_select(const AtomicMeasure& mu,
                                  std::span<const Candidate> candidates,
                                  double k_overlap_bound) {
  SelectionReport rep;
  rep.selected = greedy_accept(candidates, greedy_order(candidates));
  measure_overlap(mu, candidates, rep.selected, rep);
  if (rep.max_overlap > k_overlap_bound)
    throw InvariantViolation("besicovich_select: measured overlap " +
                             std::to_string(rep.max_overlap) +
                             " exceeds the configured bound");
  return rep;
}

namespace {

// Smallest m >= 0 with the point inside ratio^m Q0. Uses the same
// side = l(Q0) * ratio^m arithmetic as the confinement cubes.
int annulus_of(const Cube& q0, double ratio, std::span<const double> x) {
  Cube q = q0;
  for (int m = 0; m <= 8000; ++m) {
    q.side = q0.side * std::pow(ratio, m);
    if (q.contains(x)) return m;
  }
  throw std::runtime_error("annulus_cover: point not reached by dilations");
}

bool confined(const Cube& q0, double ratio, const Cube& qx, int m, int window) {
  Cube outer = q0;
  outer.side *= std::pow(ratio, m + window);
  if (!outer.contains(qx)) return false;
  if (m - window >= 0) {
    Cube inner = q0;
    inner.side *= std::pow(ratio, m - window);
    if (qx.intersects(inner)) return false;
  }
  return true;
}

}  // namespace

AnnulusReport annulus_cover(const AtomicMeasure& mu, const DensityVector& f,
                            double lambda,
                            std::span<const Candidate> candidates,
                            const AnnulusConfig& cfg, double k_overlap_bound) {
  if (cfg.q0.dim() != mu.dim())
    throw std::invalid_argument("annulus_cover: Q0 dimension mismatch");
  if (!(cfg.ratio > 1.0))
    throw std::invalid_argument("annulus_cover: ratio must exceed 1");
  const double two_d1 = std::pow(2.0, static_cast<double>(mu.dim()) + 1.0);
  if (!(lambda * cube_mass(mu, cfg.q0) > two_d1 * norm_l1(mu, f)))
    throw std::invalid_argument(
        "annulus_cover: mu(Q0) too small for this lambda");

  AnnulusReport rep;
  rep.annulus_index.resize(candidates.size());
  std::map<int, std::vector<Candidate>> groups;
  std::map<int, std::vector<std::size_t>> group_ids;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const int m = annulus_of(cfg.q0, cfg.ratio,
                             std::span<const double>(candidates[i].cube.center));
    rep.annulus_index[i] = m;
    groups[m].push_back(candidates[i]);
    group_ids[m].push_back(i);
  }

  // Union of the per-annulus greedy selections, ascending annulus index.
  std::vector<std::size_t> accepted;
  for (const auto& [m, group] : groups) {
    const auto local = greedy_accept(group, greedy_order(group));
    for (std::size_t l : local) accepted.push_back(group_ids.at(m)[l]);
  }
  rep.selection.selected = std::move(accepted);
  measure_overlap(mu, candidates, rep.selection.selected, rep.selection);
  if (rep.selection.max_overlap > k_overlap_bound)
    throw InvariantViolation("annulus_cover: measured overlap " +
                             std::to_string(rep.selection.max_overlap) +
                             " exceeds the configured bound");

  int max_m = 0;
  for (int m : rep.annulus_index) max_m = std::max(max_m, m);

  auto all_confined = [&](int window, int from) {
    rep.confinement_violations.clear();
    bool ok = true;
    for (std::size_t s : rep.selection.selected) {
      const int m = rep.annulus_index[s];
      if (m < from) continue;
      if (!confined(cfg.q0, cfg.ratio, candidates[s].cube, m, window)) {
        ok = false;
        rep.confinement_violations.push_back(s);
      }
    }
    return ok;
  };

  if (cfg.N > 0) {
    rep.N = cfg.N;
    rep.Nprime = cfg.Nprime;
    rep.confinement_ok = all_confined(cfg.N, cfg.Nprime);
  } else {
    // Smallest window first, then the smallest annulus index it holds from.
    rep.confinement_ok = false;
    for (int window = 1; window <= max_m + 400 && !rep.confinement_ok; ++window) {
      for (int from = 0; from <= max_m + 1; ++from) {
        if (all_confined(window, from)) {
          rep.N = window;
          rep.Nprime = from;
          rep.confinement_ok = true;
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace czlab
