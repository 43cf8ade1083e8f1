#include "czlab/czdecomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace czlab {

namespace {

constexpr double kRelTol = 1e-12;

double two_pow_d1(const AtomicMeasure& mu) {
  return std::pow(2.0, static_cast<double>(mu.dim()) + 1.0);
}

void check_pairing(const AtomicMeasure& mu, const DensityVector& f) {
  if (f.size() != mu.size())
    throw std::invalid_argument("density length does not match atom count");
}

std::vector<std::size_t> atoms_inside(const AtomicMeasure& mu, const Cube& q) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (q.contains(mu.position(j))) out.push_back(j);
  return out;
}

}  // namespace

double admissibility_floor(const AtomicMeasure& mu, const DensityVector& f) {
  return two_pow_d1(mu) * norm_l1(mu, f) / mu.total_mass();
}

bool is_admissible(const AtomicMeasure& mu, const DensityVector& f,
                   double lambda) {
  return lambda * mu.total_mass() > two_pow_d1(mu) * norm_l1(mu, f);
}

Cube stopping_cube(const AtomicMeasure& mu, const DensityVector& f,
                   double lambda, std::size_t atom) {
  check_pairing(mu, f);
  if (atom >= mu.size()) throw std::invalid_argument("stopping_cube: bad atom index");
  if (!is_admissible(mu, f, lambda))
    throw std::invalid_argument("stopping_cube: lambda below the admissibility floor");
  if (!(std::abs(f[atom]) > lambda))
    throw std::invalid_argument("stopping_cube: |f| does not exceed lambda at the atom");
  const double theta = lambda / two_pow_d1(mu);
  const std::size_t n = mu.size();
  const auto x = mu.position(atom);

  // Atom k enters the cube of side l when l >= s_k = 2 |x_k - x|_inf, and the
  // doubled cube when l >= s_k / 2. Between consecutive values of
  // {s_k} u {s_k/2} the ratio h(l) is constant.
  std::vector<double> entry(n);
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) {
    entry[k] = 2.0 * sup_dist(mu.position(k), x);
    order[k] = k;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return entry[a] < entry[b]; });

  std::vector<double> pref_num(n + 1, 0.0), pref_mass(n + 1, 0.0);
  std::vector<double> sorted_entry(n);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t k = order[t];
    sorted_entry[t] = entry[k];
    pref_num[t + 1] = pref_num[t] + std::abs(f[k]) * mu.weight(k);
    pref_mass[t + 1] = pref_mass[t] + mu.weight(k);
  }
  auto count_le = [&](double v) {
    return static_cast<std::size_t>(
        std::upper_bound(sorted_entry.begin(), sorted_entry.end(), v) -
        sorted_entry.begin());
  };
  auto h_at = [&](double l) {
    return pref_num[count_le(l)] / pref_mass[count_le(2.0 * l)];
  };

  std::vector<double> bounds;
  bounds.reserve(2 * n + 1);
  bounds.push_back(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (entry[k] > 0.0) {
      bounds.push_back(entry[k]);
      bounds.push_back(0.5 * entry[k]);
    }
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  // h is right-continuous with jumps inside `bounds`; its value on
  // [bounds[t], bounds[t+1]) is h(bounds[t]).  h(bounds.back()) equals
  // ||f||_1/||mu|| < theta by admissibility, and h(0) = |f_atom| > theta,
  // so the last run of h > theta ends strictly inside the list.
  std::size_t last = 0;
  bool found = false;
  for (std::size_t t = 0; t < bounds.size(); ++t) {
    if (h_at(bounds[t]) > theta) {
      last = t;
      found = true;
    }
  }
  if (!found || last + 1 >= bounds.size())
    throw std::logic_error("stopping_cube: no stopping interval found");
  std::size_t first = last;
  while (first > 0 && h_at(bounds[first - 1]) > theta) --first;

  const double side = 0.5 * (bounds[first] + bounds[last + 1]);
  return Cube(std::vector<double>(x.begin(), x.end()), side);
}

SelectedCubes select_cubes(const AtomicMeasure& mu, const DensityVector& f,
                           double lambda, const DecompositionOptions& opts) {
  check_pairing(mu, f);
  if (!is_admissible(mu, f, lambda))
    throw std::invalid_argument("select_cubes: lambda below the admissibility floor");
  const double k_bound =
      opts.k_overlap > 0.0
          ? opts.k_overlap
          : std::pow(2.0, static_cast<double>(mu.dim()));

  SelectedCubes out;
  out.info.k_overlap_bound = k_bound;
  out.info.atom_overlap.assign(mu.size(), 0);

  std::vector<Candidate> candidates;
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (std::abs(f[j]) > lambda)
      candidates.push_back({j, stopping_cube(mu, f, lambda, j)});
  out.info.candidates = candidates.size();
  if (candidates.empty()) return out;

  // Bounding-box extent of the level set decides the covering strategy.
  double extent = 0.0;
  for (std::size_t t = 0; t < mu.dim(); ++t) {
    double lo = mu.position(candidates[0].atom)[t], hi = lo;
    for (const auto& c : candidates) {
      lo = std::min(lo, mu.position(c.atom)[t]);
      hi = std::max(hi, mu.position(c.atom)[t]);
    }
    extent = std::max(extent, hi - lo);
  }

  SelectionReport sel;
  if (extent > opts.annulus_engage_extent) {
    AnnulusConfig cfg;
    cfg.ratio = opts.annulus_ratio;
    cfg.N = opts.annulus_N;
    cfg.Nprime = opts.annulus_Nprime;
    // Base cube at the origin, grown until its mass beats the level bound.
    const double target = two_pow_d1(mu) * norm_l1(mu, f) / lambda;
    Cube q0(std::vector<double>(mu.dim(), 0.0), 1.0);
    int guard = 0;
    while (!(cube_mass(mu, q0) > target)) {
      q0.side *= cfg.ratio;
      if (++guard > 8000)
        throw std::logic_error("select_cubes: could not size the base cube");
    }
    cfg.q0 = q0;
    AnnulusReport rep = annulus_cover(mu, f, lambda, candidates, cfg, k_bound);
    if (!rep.confinement_ok)
      throw InvariantViolation(
          "select_cubes: annulus confinement failed for the configured window");
    sel = std::move(rep.selection);
    out.info.annulus_engaged = true;
    out.info.annulus_N = rep.N;
    out.info.annulus_Nprime = rep.Nprime;
  } else {
    sel = besicovich_select(mu, candidates, k_bound);
  }

  out.info.atom_overlap = std::move(sel.atom_overlap);
  out.info.max_overlap = sel.max_overlap;
  out.cubes.reserve(sel.selected.size());
  for (std::size_t idx : sel.selected) out.cubes.push_back(candidates[idx]);
  return out;
}

std::vector<DoublingSearch> attach_r(const AtomicMeasure& mu,
                                     std::span<const Candidate> cubes) {
  std::vector<DoublingSearch> out;
  out.reserve(cubes.size());
  for (const auto& c : cubes) {
    if (!(cube_mass(mu, c.cube) > 0.0))
      throw std::invalid_argument("attach_r: stopping cube carries no mass");
    DoublingSearch r = smallest_doubling_power(mu, c.cube, 6.0, 1);
    if (!(r.cube.side > 4.0 * c.cube.side))
      throw std::logic_error("attach_r: companion cube not larger than 4 l(Q)");
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::vector<int> overlap_counts(const AtomicMeasure& mu,
                                std::span<const Candidate> cubes) {
  std::vector<int> nu(mu.size(), 0);
  for (std::size_t j = 0; j < mu.size(); ++j) {
    const auto x = mu.position(j);
    for (const auto& c : cubes)
      if (c.cube.contains(x)) ++nu[j];
  }
  return nu;
}

}  // namespace

std::vector<CZPart> build_phi(const AtomicMeasure& mu, const DensityVector& f,
                              double lambda, std::span<const Candidate> cubes,
                              std::span<const DoublingSearch> rs,
                              const DerivedConstants& constants) {
  check_pairing(mu, f);
  if (cubes.size() != rs.size())
    throw std::invalid_argument("build_phi: cube/companion length mismatch");

  const std::vector<int> nu = overlap_counts(mu, cubes);

  // Processing order: l(R) non-decreasing, ties by generator atom index.
  std::vector<std::size_t> order(cubes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rs[a].cube.side != rs[b].cube.side)
      return rs[a].cube.side < rs[b].cube.side;
    return cubes[a].atom < cubes[b].atom;
  });

  std::vector<CZPart> parts;
  parts.reserve(cubes.size());
  std::vector<double> phi_sum(mu.size(), 0.0);  // running sum of |phi_i|
  const double truncation = 2.0 * constants.C2 * lambda;

  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::size_t i = order[rank];
    CZPart part;
    part.q = cubes[i].cube;
    part.r = rs[i].cube;
    part.r_power = rs[i].power;
    part.gen_atom = cubes[i].atom;
    part.atoms_q = atoms_inside(mu, part.q);
    part.atoms_r = atoms_inside(mu, part.r);

    // A_1 is all of R_1; later supports drop atoms already loaded past
    // 2 C2 lambda by earlier phi's.
    if (rank == 0) {
      part.support = part.atoms_r;
    } else {
      for (std::size_t j : part.atoms_r)
        if (phi_sum[j] <= truncation) part.support.push_back(j);
    }

    double mass_a = 0.0;
    for (std::size_t j : part.support) mass_a += mu.weight(j);
    const double mass_r = cube_mass(mu, part.r);
    if (!(mass_a >= 0.5 * mass_r * (1.0 - kRelTol)))
      throw InvariantViolation(
          "build_phi: mu(A) fell below mu(R)/2; overlap constant too small");

    std::complex<double> target = 0.0;
    for (std::size_t j : part.atoms_q)
      target += f[j] * (mu.weight(j) / static_cast<double>(nu[j]));
    part.alpha = target / mass_a;

    const double alpha_abs = std::abs(part.alpha);
    if (!(alpha_abs <= constants.C3 * lambda * (1.0 + kRelTol)))
      throw InvariantViolation("build_phi: |alpha| exceeds C3 lambda");

    double int_abs_q = 0.0;
    for (std::size_t j : part.atoms_q)
      int_abs_q += std::abs(f[j]) * mu.weight(j);
    if (!(alpha_abs * mass_r <= 2.0 * int_abs_q * (1.0 + kRelTol)))
      throw InvariantViolation(
          "build_phi: sup-norm mass bound |alpha| mu(R) > 2 int_Q |f|");

    for (std::size_t j : part.support) phi_sum[j] += alpha_abs;

    part.b.resize(part.atoms_r.size());
    std::size_t s = 0;  // part.support is an ascending subset of atoms_r
    for (std::size_t t = 0; t < part.atoms_r.size(); ++t) {
      const std::size_t j = part.atoms_r[t];
      std::complex<double> val = 0.0;
      if (part.q.contains(mu.position(j)))
        val = f[j] / static_cast<double>(nu[j]);
      while (s < part.support.size() && part.support[s] < j) ++s;
      if (s < part.support.size() && part.support[s] == j) val -= part.alpha;
      part.b[t] = val;
    }
    parts.push_back(std::move(part));
  }

  const double bound = constants.B * lambda;
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (!(phi_sum[j] <= bound * (1.0 + kRelTol)))
      throw InvariantViolation("build_phi: pointwise sum of |phi_i| exceeds B lambda");
  return parts;
}

CZDecomposition decompose(const AtomicMeasure& mu, const DensityVector& f,
                          double lambda, const DecompositionOptions& opts) {
  check_pairing(mu, f);
  if (!is_admissible(mu, f, lambda))
    throw std::invalid_argument("decompose: lambda below the admissibility floor");

  CZDecomposition dec;
  dec.lambda = lambda;
  dec.theta = lambda / two_pow_d1(mu);

  SelectedCubes sel = select_cubes(mu, f, lambda, opts);
  dec.selection = sel.info;
  dec.constants = DerivedConstants::compute(mu.dim(), mu.growth().n,
                                            mu.growth().C0,
                                            sel.info.k_overlap_bound);

  dec.g.assign(f.values().begin(), f.values().end());
  if (sel.cubes.empty()) return dec;  // nothing above lambda: g = f, b = 0

  const auto rs = attach_r(mu, sel.cubes);
  dec.parts = build_phi(mu, f, lambda, sel.cubes, rs, dec.constants);

  // g = f off the union of the stopping cubes, plus the sum of the phi_i.
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (dec.selection.atom_overlap[j] > 0) dec.g[j] = 0.0;
  for (const auto& part : dec.parts)
    for (std::size_t j : part.support) dec.g[j] += part.alpha;
  return dec;
}

const ConditionResult* InvariantReport::find(std::string_view id) const {
  for (const auto& c : conditions)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

struct Checker {
  InvariantReport rep;

  ConditionResult& add(std::string id, bool pass, double measured, double bound,
                       std::string note = {}) {
    rep.conditions.push_back(
        {std::move(id), pass, measured, bound, std::move(note)});
    if (!pass) rep.pass = false;
    return rep.conditions.back();
  }
};

}  // namespace

InvariantReport verify_decomposition(const AtomicMeasure& mu,
                                     const DensityVector& f, double lambda,
                                     const CZDecomposition& dec) {
  check_pairing(mu, f);
  Checker ck;
  ck.rep.constants = dec.constants;
  const double theta = lambda / two_pow_d1(mu);
  const std::size_t n = mu.size();
  const double norm1 = norm_l1(mu, f);

  ck.add("admissible", is_admissible(mu, f, lambda),
         admissibility_floor(mu, f), lambda);

  if (dec.g.size() != n) {
    ck.add("shape", false, static_cast<double>(dec.g.size()),
           static_cast<double>(n), "g length mismatch");
    return ck.rep;
  }

  // Membership and overlap recomputed from the stored cubes alone.
  std::vector<Candidate> cubes;
  cubes.reserve(dec.parts.size());
  for (const auto& p : dec.parts) cubes.push_back({p.gen_atom, p.q});
  const std::vector<int> nu = overlap_counts(mu, cubes);

  // Stopping ratio: int_Q |f| / mu(2Q) > theta.
  double worst_stop = std::numeric_limits<double>::infinity();
  for (const auto& p : dec.parts) {
    const double ratio =
        integrate_abs(mu, f, p.q) / cube_mass(mu, p.q.dilated(2.0));
    worst_stop = std::min(worst_stop, ratio / theta);
  }
  if (dec.parts.empty()) worst_stop = 1.0;  // vacuous
  ck.add("stopping_ratio", worst_stop > 1.0 - kRelTol, worst_stop, 1.0,
         "min over parts of ratio/theta; must exceed 1");

  // Maximal dilation: the ratio stays <= theta for every eta > 2. Both the
  // numerator and the denominator are right-continuous nondecreasing step
  // functions of eta, so between numerator jumps the ratio can only fall;
  // checking eta = 2 and every numerator jump above 2 decides the whole
  // range, and beyond the last jump the value is ||f||_1/||mu|| which
  // admissibility bounds by theta.
  double worst_dil = 0.0;
  for (const auto& p : dec.parts) {
    std::vector<double> etas;
    etas.push_back(2.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double t = sup_dist(mu.position(j), p.q.center);
      const double e_num = 2.0 * t / p.q.side;  // atom enters eta Q here
      if (e_num > 2.0) etas.push_back(e_num);
    }
    std::sort(etas.begin(), etas.end());
    etas.erase(std::unique(etas.begin(), etas.end()), etas.end());
    for (double eta : etas) {
      const double ratio = integrate_abs(mu, f, p.q.dilated(eta)) /
                           cube_mass(mu, p.q.dilated(2.0 * eta));
      worst_dil = std::max(worst_dil, ratio / theta);
    }
  }
  worst_dil = std::max(worst_dil, (norm1 / mu.total_mass()) / theta);
  ck.add("maximal_dilation", worst_dil <= 1.0 + kRelTol, worst_dil, 1.0,
         "max over parts and eta > 2 of ratio/theta; must stay <= 1");

  // Level-set coverage: every atom with |f| > lambda lies in some Q_i.
  std::size_t uncovered = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(f[j]) > lambda && nu[j] == 0) ++uncovered;
  ck.add("level_set_covered", uncovered == 0, static_cast<double>(uncovered),
         0.0);

  // Per-part bookkeeping.
  double worst_mean = 0.0;       // phi mean vs int_Q f w
  double worst_alpha = 0.0;      // |alpha| / (C3 lambda)
  double worst_mass_bound = 0.0; // |alpha| mu(R) / (2 int_Q |f|)
  double worst_half = std::numeric_limits<double>::infinity();
  double worst_cancel = 0.0;
  double worst_annulus = 0.0;
  bool support_ok = true;
  bool companion_ok = true;
  double worst_b = 0.0;
  const DoublingParams p6{6.0, std::pow(6.0, mu.growth().n + 1.0)};

  std::vector<double> phi_sum(n, 0.0);
  std::vector<std::complex<double>> b_total(n, 0.0);

  for (const auto& part : dec.parts) {
    const auto atoms_r = atoms_inside(mu, part.r);
    if (part.atoms_r != atoms_r || part.b.size() != atoms_r.size())
      support_ok = false;
    if (!std::includes(atoms_r.begin(), atoms_r.end(), part.support.begin(),
                       part.support.end()))
      support_ok = false;

    double mass_a = 0.0;
    for (std::size_t j : part.support) mass_a += mu.weight(j);
    const double mass_r = cube_mass(mu, part.r);
    worst_half = std::min(worst_half, 2.0 * mass_a / mass_r);

    std::complex<double> target = 0.0;
    double int_abs_q = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!part.q.contains(mu.position(j))) continue;
      target += f[j] * (mu.weight(j) / static_cast<double>(nu[j]));
      int_abs_q += std::abs(f[j]) * mu.weight(j);
    }
    worst_mean = std::max(worst_mean,
                          std::abs(part.alpha * mass_a - target) /
                              (1.0 + std::abs(target)));
    worst_alpha = std::max(worst_alpha, std::abs(part.alpha) /
                                            (dec.constants.C3 * lambda));
    worst_mass_bound = std::max(
        worst_mass_bound, std::abs(part.alpha) * mass_r / (2.0 * int_abs_q));

    for (std::size_t j : part.support) phi_sum[j] += std::abs(part.alpha);

    // Companion choice: R = 6^k Q doubling, intermediate powers not.
    if (part.r.center != part.q.center) companion_ok = false;
    const double kf = std::log(part.r.side / part.q.side) / std::log(6.0);
    const int k = static_cast<int>(std::lround(kf));
    if (k < 1 ||
        std::abs(part.r.side - part.q.side * std::pow(6.0, k)) >
            kRelTol * part.r.side)
      companion_ok = false;
    else {
      if (!is_doubling(mu, part.q.dilated(std::pow(6.0, k)), p6))
        companion_ok = false;
      for (int jj = 1; jj < k; ++jj)
        if (is_doubling(mu, part.q.dilated(std::pow(6.0, jj)), p6))
          companion_ok = false;
    }

    worst_annulus =
        std::max(worst_annulus,
                 annulus_kernel_integral(mu, part.q.dilated(6.0), part.r) /
                     dec.constants.C1);

    // Derived b_i = w_i f - phi_i over the recomputed atoms of R_i; the
    // stored vector must match it entry for entry. Reconstruction below uses
    // the derived values, so a corrupted alpha breaks it.
    std::complex<double> b_int = 0.0;
    const bool shapes_match =
        part.atoms_r == atoms_r && part.b.size() == atoms_r.size();
    std::size_t s = 0;
    for (std::size_t t = 0; t < atoms_r.size(); ++t) {
      const std::size_t j = atoms_r[t];
      std::complex<double> expect = 0.0;
      if (part.q.contains(mu.position(j)))
        expect = f[j] / static_cast<double>(nu[j]);
      while (s < part.support.size() && part.support[s] < j) ++s;
      if (s < part.support.size() && part.support[s] == j)
        expect -= part.alpha;
      b_total[j] += expect;
      if (shapes_match) {
        worst_b = std::max(worst_b, std::abs(part.b[t] - expect) /
                                        (1.0 + std::abs(f[j])));
        b_int += part.b[t] * mu.weight(j);
      }
    }
    if (!shapes_match)
      worst_b = std::numeric_limits<double>::infinity();
    worst_cancel = std::max(worst_cancel, std::abs(b_int) / int_abs_q);
  }

  ck.add("mean_match", worst_mean <= kRelTol, worst_mean, kRelTol,
         "max |int phi - int_Q f w| / (1 + |int_Q f w|)");
  ck.add("alpha_bound", dec.parts.empty() || worst_alpha <= 1.0 + kRelTol,
         worst_alpha, 1.0, "max |alpha| / (C3 lambda)");
  ck.add("phi_mass_bound",
         dec.parts.empty() || worst_mass_bound <= 1.0 + kRelTol,
         worst_mass_bound, 1.0, "max |alpha| mu(R) / (2 int_Q |f|)");
  if (dec.parts.empty()) worst_half = 1.0;  // vacuous
  ck.add("half_mass", worst_half >= 1.0 - kRelTol, worst_half, 1.0,
         "min 2 mu(A)/mu(R); must be >= 1");
  double worst_phi_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    worst_phi_sum =
        std::max(worst_phi_sum, phi_sum[j] / (dec.constants.B * lambda));
  ck.add("phi_sum_bound", worst_phi_sum <= 1.0 + kRelTol, worst_phi_sum, 1.0,
         "max_x sum_i |phi_i(x)| / (B lambda)");
  ck.add("support_in_r", support_ok, support_ok ? 1.0 : 0.0, 1.0,
         "A_i and b_i live on the atoms of R_i");
  ck.add("cancellation", worst_cancel <= kRelTol, worst_cancel, kRelTol,
         "max |int b_i| / int_Q |f|");
  ck.add("b_consistency", worst_b <= kRelTol, worst_b, kRelTol,
         "stored b against w_i f - phi_i");
  ck.add("companion_doubling", companion_ok, companion_ok ? 1.0 : 0.0, 1.0,
         "R_i = 6^k Q_i doubling with no smaller doubling power");
  ck.add("annulus_integral",
         dec.parts.empty() || worst_annulus <= 1.0 + kRelTol, worst_annulus,
         1.0, "max annulus integral over C1");

  // Overlap of the selected family.
  int max_nu = 0;
  bool every_q_covered = true;
  for (const auto& part : dec.parts)
    for (std::size_t j : part.atoms_q)
      if (nu[j] < 1) every_q_covered = false;
  for (int v : nu) max_nu = std::max(max_nu, v);
  const double k_bound = dec.constants.K_overlap;
  ck.add("overlap_bound", every_q_covered && max_nu <= k_bound,
         static_cast<double>(max_nu), k_bound);

  // g agrees with f chi_{off union Q} + sum phi_i.
  double worst_g = 0.0;
  std::vector<std::complex<double>> g_expect(n);
  for (std::size_t j = 0; j < n; ++j)
    g_expect[j] = nu[j] > 0 ? std::complex<double>(0.0) : f[j];
  for (const auto& part : dec.parts)
    for (std::size_t j : part.support) g_expect[j] += part.alpha;
  for (std::size_t j = 0; j < n; ++j)
    worst_g = std::max(worst_g, std::abs(dec.g[j] - g_expect[j]) /
                                    (1.0 + std::abs(f[j])));
  ck.add("g_consistency", worst_g <= kRelTol, worst_g, kRelTol);

  double worst_gb = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    worst_gb = std::max(worst_gb, std::abs(dec.g[j]));
  const double g_bound = (dec.constants.B + 1.0) * lambda;
  ck.add("g_bound", worst_gb <= g_bound * (1.0 + kRelTol), worst_gb / g_bound,
         1.0, "max |g| / ((B+1) lambda)");

  // Reconstruction f = g + sum b_i from the re-derived bad parts.
  double worst_rec = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    worst_rec = std::max(worst_rec, std::abs(f[j] - dec.g[j] - b_total[j]) /
                                        (1.0 + std::abs(f[j])));
  ck.add("reconstruction", worst_rec <= kRelTol, worst_rec, kRelTol,
         "max |f - g - sum b_i| / (1 + |f|)");

  return ck.rep;
}

}  // namespace czlab
