#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "czlab/harness.hpp"
#include "czlab/io.hpp"
#include "czlab/rng.hpp"

namespace czlab {

namespace {

struct RawAtoms {
  std::size_t dim = 0;
  std::vector<double> pos;
  std::vector<double> w;
};

RawAtoms make_grid(const GeneratorSpec& spec, Rng& rng) {
  RawAtoms out;
  out.dim = spec.dim;
  if (spec.count == 0) throw std::invalid_argument("gen: empty grid");
  std::size_t per_axis = spec.count;
  if (spec.dim == 2)
    per_axis = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::lround(std::sqrt(
               static_cast<double>(spec.count)))));
  else if (spec.dim > 2)
    throw std::invalid_argument("gen: grid supports dim 1 and 2");
  const double h = 1.0 / static_cast<double>(per_axis);
  const std::size_t total = spec.dim == 1 ? per_axis : per_axis * per_axis;
  const double base_w = spec.total_mass / static_cast<double>(total);
  out.pos.reserve(total * spec.dim);
  out.w.reserve(total);
  auto emit = [&](double x0, double x1) {
    out.pos.push_back(x0 + spec.jitter * h * (rng.uniform() - 0.5));
    if (spec.dim == 2)
      out.pos.push_back(x1 + spec.jitter * h * (rng.uniform() - 0.5));
    double w = base_w;
    if (spec.weight_spread > 1.0)
      w *= rng.log_uniform(1.0 / spec.weight_spread, spec.weight_spread);
    out.w.push_back(w);
  };
  if (spec.dim == 1) {
    for (std::size_t i = 0; i < per_axis; ++i)
      emit(static_cast<double>(i) * h, 0.0);
  } else {
    for (std::size_t i = 0; i < per_axis; ++i)
      for (std::size_t j = 0; j < per_axis; ++j)
        emit(static_cast<double>(i) * h, static_cast<double>(j) * h);
  }
  return out;
}

// Self-similar corner construction: 2^d children per cell, contraction ratio
// (2^d)^{-1/n}, atoms at the centers of the depth-level cells. n = d gives a
// dyadic grid; smaller n opens gaps and lowers the growth exponent.
RawAtoms make_cantor(const GeneratorSpec& spec, Rng& rng) {
  if (spec.depth < 1) throw std::invalid_argument("gen: cantor depth must be >= 1");
  if (spec.dim < 1 || spec.dim > 2)
    throw std::invalid_argument("gen: cantor supports dim 1 and 2");
  if (!(spec.n > 0.0) || spec.n > static_cast<double>(spec.dim))
    throw std::invalid_argument("gen: cantor needs 0 < n <= dim");
  const double ratio =
      std::exp(-static_cast<double>(spec.dim) * std::log(2.0) / spec.n);
  const std::size_t branches = spec.dim == 1 ? 2 : 4;
  std::size_t count = 1;
  for (int l = 0; l < spec.depth; ++l) {
    count *= branches;
    if (count > 200000) throw std::invalid_argument("gen: cantor depth too large");
  }

  RawAtoms out;
  out.dim = spec.dim;
  std::vector<double> starts(spec.dim, 0.0);  // lower corners, flat
  std::vector<double> next;
  double len = 1.0;
  for (int l = 0; l < spec.depth; ++l) {
    const double child = len * ratio;
    const double off = len - child;  // far corner offset
    next.clear();
    for (std::size_t s = 0; s * spec.dim < starts.size(); ++s) {
      const double* base = &starts[s * spec.dim];
      for (std::size_t b = 0; b < branches; ++b) {
        for (std::size_t t = 0; t < spec.dim; ++t)
          next.push_back(base[t] + (((b >> t) & 1u) ? off : 0.0));
      }
    }
    starts.swap(next);
    len = child;
  }

  const double w = spec.total_mass / static_cast<double>(count);
  out.w.assign(count, w);
  out.pos.reserve(count * spec.dim);
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t t = 0; t < spec.dim; ++t) {
      double x = starts[s * spec.dim + t] + 0.5 * len;
      if (spec.jitter > 0.0)
        x += spec.jitter * 0.45 * len * (rng.uniform() - 0.5);
      out.pos.push_back(x);
    }
  }
  return out;
}

RawAtoms make_segment_plus_atoms(const GeneratorSpec& spec, Rng& rng) {
  if (spec.count < 2) throw std::invalid_argument("gen: segment needs >= 2 atoms");
  RawAtoms out;
  out.dim = spec.dim;
  const std::size_t nseg = spec.count;
  const double h = 1.0 / static_cast<double>(nseg);
  const double seg_mass = spec.total_mass * (1.0 - spec.iso_mass_fraction);
  for (std::size_t i = 0; i < nseg; ++i) {
    out.pos.push_back(static_cast<double>(i) * h +
                      spec.jitter * h * (rng.uniform() - 0.5));
    for (std::size_t t = 1; t < spec.dim; ++t) out.pos.push_back(0.0);
    out.w.push_back(seg_mass / static_cast<double>(nseg));
  }
  const std::size_t niso = spec.iso_count;
  if (niso > 0) {
    const double iso_w = spec.total_mass * spec.iso_mass_fraction /
                         static_cast<double>(niso);
    for (std::size_t i = 0; i < niso; ++i) {
      // Heavy atoms hover near the segment, clear of every other atom by a
      // few spacings: a small cube around a close-by segment atom carries a
      // sliver of mass while its double swallows the heavy one.
      for (int tries = 0; tries < 4096; ++tries) {
        const double offset = rng.uniform(4.0 * h, 24.0 * h) * rng.sign();
        std::vector<double> cand(spec.dim, 0.0);
        if (spec.dim == 1) {
          cand[0] = rng.uniform() < 0.5 ? -std::abs(offset)
                                        : 1.0 + std::abs(offset);
        } else {
          cand[0] = rng.uniform(0.0, 1.0);
          cand[1 + rng.index(spec.dim - 1)] = offset;
        }
        bool clear = true;
        for (std::size_t j = 0; j * spec.dim < out.pos.size() && clear; ++j) {
          double d2 = 0.0;
          for (std::size_t t = 0; t < spec.dim; ++t) {
            const double d = cand[t] - out.pos[j * spec.dim + t];
            d2 += d * d;
          }
          if (d2 < (3.0 * h) * (3.0 * h)) clear = false;
        }
        if (clear) {
          for (double c : cand) out.pos.push_back(c);
          out.w.push_back(iso_w * rng.uniform(0.5, 1.5));
          break;
        }
        if (tries == 4095)
          throw std::runtime_error("gen: could not place isolated atoms");
      }
    }
  }
  return out;
}

}  // namespace

AtomicMeasure gen_measure(const GeneratorSpec& spec) {
  if (spec.kind == GeneratorSpec::Kind::custom) return io::load_measure(spec.file);
  Rng rng(spec.seed);
  RawAtoms raw;
  switch (spec.kind) {
    case GeneratorSpec::Kind::grid: raw = make_grid(spec, rng); break;
    case GeneratorSpec::Kind::cantor: raw = make_cantor(spec, rng); break;
    case GeneratorSpec::Kind::segment_plus_atoms:
      raw = make_segment_plus_atoms(spec, rng);
      break;
    case GeneratorSpec::Kind::custom: break;
  }

  // Probe instance to fix r_min and, when not declared, the tight C0.
  GrowthProfile probe{spec.n, 1.0, 1.0};
  AtomicMeasure tmp(raw.dim, raw.pos, raw.w, probe);
  double r_min = tmp.min_pair_distance();
  if (spec.r_min > 0.0) {
    if (spec.r_min > r_min)
      throw std::invalid_argument(
          "gen: declared r_min above the smallest interatom distance");
    r_min = spec.r_min;
  }
  GrowthProfile growth{spec.n, spec.C0, r_min};
  if (spec.C0 <= 0.0) {
    AtomicMeasure fit(raw.dim, raw.pos, raw.w, GrowthProfile{spec.n, 1.0, r_min});
    growth.C0 = verify_growth(fit).worst_ratio;
  }
  AtomicMeasure mu(raw.dim, std::move(raw.pos), std::move(raw.w), growth);
  const GrowthReport rep = verify_growth(mu);
  if (!rep.pass)
    throw std::invalid_argument(
        "gen: declared growth profile fails verification (worst ratio " +
        std::to_string(rep.worst_ratio) + ")");
  return mu;
}

double max_doubling_ratio(const AtomicMeasure& mu) {
  // Exact sup over atom-centered cubes of mu(2Q)/mu(Q). Both masses are step
  // functions of the side; the ratio changes only where the cube or its
  // double gains an atom, so the events are the sup-distances and their
  // doubles.
  double worst = 0.0;
  const std::size_t n = mu.size();
  std::vector<std::pair<double, double>> td(n);  // (sup distance, weight)
  for (std::size_t j = 0; j < n; ++j) {
    const auto x = mu.position(j);
    for (std::size_t k = 0; k < n; ++k)
      td[k] = {sup_dist(mu.position(k), x), mu.weight(k)};
    std::sort(td.begin(), td.end());
    std::vector<double> dist(n), pref(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      dist[k] = td[k].first;
      pref[k + 1] = pref[k] + td[k].second;
    }
    auto mass_within = [&](double s) {
      return pref[std::upper_bound(dist.begin(), dist.end(), s) -
                  dist.begin()];
    };
    for (std::size_t k = 0; k < n; ++k) {
      if (dist[k] <= 0.0) continue;
      for (const double side : {dist[k], 2.0 * dist[k]}) {
        const double m1 = mass_within(0.5 * side);
        if (m1 > 0.0) worst = std::max(worst, mass_within(side) / m1);
      }
    }
  }
  return worst;
}

DensityVector gen_density(const DensitySpec& spec, const AtomicMeasure& mu) {
  if (spec.kind == DensitySpec::Kind::custom) {
    auto vals = io::values_from_json_file(spec.file);
    if (vals.size() != mu.size())
      throw std::invalid_argument("gen: density file length mismatch");
    return DensityVector(std::move(vals));
  }
  Rng rng(spec.seed);
  const std::size_t n = mu.size();
  std::vector<std::complex<double>> v(n, 0.0);
  switch (spec.kind) {
    case DensitySpec::Kind::ones:
      for (auto& z : v) z = 1.0;
      break;
    case DensitySpec::Kind::random_sign:
      for (auto& z : v) z = rng.sign();
      break;
    case DensitySpec::Kind::random_phase:
      for (auto& z : v) z = rng.unit_phase();
      break;
    case DensitySpec::Kind::spikes: {
      if (spec.background != 0.0)
        for (auto& z : v) z = spec.background * rng.sign();
      const std::size_t count = std::min(spec.spike_count, n);
      std::vector<std::size_t> picked;
      while (picked.size() < count) {
        const std::size_t j = rng.index(n);
        if (std::find(picked.begin(), picked.end(), j) == picked.end())
          picked.push_back(j);
      }
      for (std::size_t j : picked) {
        const double mag = spec.spike_scale * rng.uniform(0.5, 1.5);
        v[j] = spec.complex_phases ? mag * rng.unit_phase()
                                   : std::complex<double>(mag * rng.sign());
      }
      break;
    }
    case DensitySpec::Kind::custom: break;
  }
  return DensityVector(std::move(v));
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo))
    throw std::invalid_argument("grid: need 0 < lo <= hi");
  if (count == 0) return {};
  if (count == 1 || hi == lo) return {lo};
  std::vector<double> out(count);
  const double step = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = lo * std::exp(step * static_cast<double>(i));
  return out;
}

std::vector<double> auto_lambda_grid(const AtomicMeasure& mu,
                                     const DensityVector& f,
                                     std::size_t count) {
  const double lo = 1.01 * admissibility_floor(mu, f);
  const double hi = 2.0 * max_abs(f);
  if (!(lo > 0.0) || hi <= lo) return {};
  return geometric_grid(lo, hi, count);
}

}  // namespace czlab
