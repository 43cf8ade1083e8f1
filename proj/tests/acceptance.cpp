// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the randomized decomposition corpus once and feeds the
// collected statistics to the constant-chain checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "czlab/harness.hpp"
#include "czlab/io.hpp"
#include "czlab/rng.hpp"

using namespace czlab;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int failures = 0;

void report(int id, bool pass, const std::string& text, double secs) {
  std::printf("[%s] criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", id,
              text.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct Corpus {
  std::size_t instances = 0;
  std::size_t lambda_runs = 0;
  std::size_t short_lambda_instances = 0;  // fewer than 10 admissible lambdas
  std::size_t condition_failures = 0;
  std::string first_failure;
  double worst_reconstruction = 0.0;
  double worst_cancellation = 0.0;
  double worst_half_mass = std::numeric_limits<double>::infinity();
  bool support_ok = true;
  double max_annulus_over_c1 = 0.0;
  std::size_t annulus_pairs = 0;
  double max_phi_over_b = 0.0;
  double max_alpha_over_c3 = 0.0;
  int max_overlap = 0;
  double k_bound = 0.0;
  std::size_t parts_total = 0;
};

std::vector<GeneratorSpec> corpus_specs() {
  std::vector<GeneratorSpec> specs;
  Rng rng(20260810);
  const int per_family = 30;
  for (int i = 0; i < per_family; ++i) {
    {  // d=1, n=1, jittered weighted grid
      GeneratorSpec s;
      s.kind = GeneratorSpec::Kind::grid;
      s.dim = 1;
      s.count = 40 + rng.index(460);
      s.n = 1.0;
      s.jitter = rng.uniform(0.0, 0.9);
      s.weight_spread = rng.uniform(1.0, 4.0);
      s.seed = rng.bits();
      specs.push_back(s);
    }
    {  // d=1, n=1, segment with heavy isolated atoms
      GeneratorSpec s;
      s.kind = GeneratorSpec::Kind::segment_plus_atoms;
      s.dim = 1;
      s.count = 40 + rng.index(400);
      s.n = 1.0;
      s.jitter = rng.uniform(0.0, 0.5);
      s.iso_count = 1 + rng.index(4);
      s.iso_mass_fraction = rng.uniform(0.2, 0.7);
      s.seed = rng.bits();
      specs.push_back(s);
    }
    {  // d=1, n=0.5 corner construction
      GeneratorSpec s;
      s.kind = GeneratorSpec::Kind::cantor;
      s.dim = 1;
      s.depth = 5 + static_cast<int>(rng.index(4));  // 32..256 atoms
      s.n = 0.5;
      s.jitter = rng.uniform(0.0, 0.4);
      s.seed = rng.bits();
      specs.push_back(s);
    }
    {  // d=2, n=1 planar corner set
      GeneratorSpec s;
      s.kind = GeneratorSpec::Kind::cantor;
      s.dim = 2;
      s.depth = 3 + static_cast<int>(rng.index(2));  // 64 or 256 atoms
      s.n = 1.0;
      s.jitter = rng.uniform(0.0, 0.4);
      s.seed = rng.bits();
      specs.push_back(s);
    }
    {  // d=2, n=1 segment in the plane
      GeneratorSpec s;
      s.kind = GeneratorSpec::Kind::segment_plus_atoms;
      s.dim = 2;
      s.count = 40 + rng.index(400);
      s.n = 1.0;
      s.jitter = rng.uniform(0.0, 0.5);
      s.iso_count = 1 + rng.index(4);
      s.seed = rng.bits();
      specs.push_back(s);
    }
    {  // d=2, n=0.5 sparse corner set
      GeneratorSpec s;
      s.kind = GeneratorSpec::Kind::cantor;
      s.dim = 2;
      s.depth = 3 + static_cast<int>(rng.index(2));
      s.n = 0.5;
      s.jitter = rng.uniform(0.0, 0.3);
      s.seed = rng.bits();
      specs.push_back(s);
    }
    {  // d=2, n=2 jittered grid
      GeneratorSpec s;
      s.kind = GeneratorSpec::Kind::grid;
      s.dim = 2;
      s.count = 49 + rng.index(440);
      s.n = 2.0;
      s.jitter = rng.uniform(0.0, 0.9);
      s.weight_spread = rng.uniform(1.0, 3.0);
      s.seed = rng.bits();
      specs.push_back(s);
    }
  }
  return specs;
}

Corpus run_corpus() {
  Corpus c;
  const auto specs = corpus_specs();
  Rng rng(711);
  for (const auto& spec : specs) {
    const AtomicMeasure mu = gen_measure(spec);
    DensitySpec ds;
    ds.kind = DensitySpec::Kind::spikes;
    ds.spike_count = 1 + rng.index(5);
    ds.spike_scale = 100.0 * rng.uniform(0.5, 4.0);
    ds.complex_phases = (c.instances % 4 == 0);
    ds.background = (c.instances % 3 == 0) ? 0.2 : 0.0;
    // A spike landing on a very heavy atom can pin the admissibility floor
    // near 2 max|f| and collapse the lambda range; redraw in that case.
    DensityVector f;
    std::vector<double> lambdas;
    for (int attempt = 0; attempt < 64; ++attempt) {
      ds.seed = rng.bits();
      f = gen_density(ds, mu);
      lambdas = auto_lambda_grid(mu, f, 12);
      if (lambdas.size() >= 10) break;
    }
    if (lambdas.size() < 10) ++c.short_lambda_instances;
    ++c.instances;
    c.k_bound = std::max(c.k_bound, std::pow(2.0, double(mu.dim())));
    for (double lambda : lambdas) {
      ++c.lambda_runs;
      const CZDecomposition dec = decompose(mu, f, lambda);
      const InvariantReport rep = verify_decomposition(mu, f, lambda, dec);
      c.parts_total += dec.parts.size();
      if (!rep.pass) {
        ++c.condition_failures;
        if (c.first_failure.empty())
          for (const auto& cond : rep.conditions)
            if (!cond.pass) {
              c.first_failure = cond.id + " at lambda " + std::to_string(lambda);
              break;
            }
      }
      if (const auto* r = rep.find("reconstruction"))
        c.worst_reconstruction = std::max(c.worst_reconstruction, r->measured);
      if (const auto* r = rep.find("cancellation"))
        c.worst_cancellation = std::max(c.worst_cancellation, r->measured);
      if (const auto* r = rep.find("half_mass"))
        if (!dec.parts.empty())
          c.worst_half_mass = std::min(c.worst_half_mass, r->measured);
      if (const auto* r = rep.find("support_in_r"))
        c.support_ok = c.support_ok && r->pass;
      if (const auto* r = rep.find("annulus_integral"))
        if (!dec.parts.empty()) {
          c.max_annulus_over_c1 = std::max(c.max_annulus_over_c1, r->measured);
          c.annulus_pairs += dec.parts.size();
        }
      if (const auto* r = rep.find("phi_sum_bound"))
        c.max_phi_over_b = std::max(c.max_phi_over_b, r->measured);
      if (const auto* r = rep.find("alpha_bound"))
        if (!dec.parts.empty())
          c.max_alpha_over_c3 = std::max(c.max_alpha_over_c3, r->measured);
      c.max_overlap = std::max(c.max_overlap, dec.selection.max_overlap);
    }
  }
  return c;
}

bool criterion4_annulus_path() {
  // Wide-spread instances through the annulus covering with confinement.
  for (int i = 0; i < 5; ++i) {
    std::vector<double> xs, ws;
    const double spread = 30.0 + 10.0 * i;
    for (int cluster = 0; cluster < 3 + i % 2; ++cluster) {
      const double base = std::pow(spread, cluster);
      for (int t = 0; t < 15; ++t) {
        xs.push_back(base + 0.05 * t);
        ws.push_back(1.0);
      }
    }
    const std::size_t n = ws.size();
    AtomicMeasure mu(1, std::move(xs), std::move(ws),
                     GrowthProfile{1.0, 1.0, 0.05});
    // Refit the tight growth constant.
    {
      GrowthProfile g = mu.growth();
      g.C0 = verify_growth(mu).worst_ratio;
      mu = AtomicMeasure(1, std::vector<double>(mu.positions_flat().begin(),
                                                mu.positions_flat().end()),
                         std::vector<double>(mu.weights().begin(),
                                             mu.weights().end()),
                         g);
    }
    std::vector<double> fv(n, 0.0);
    for (std::size_t s = 2; s < n; s += 15) fv[s] = 500.0 + 10.0 * double(i);
    const DensityVector f = DensityVector::real(fv);
    DecompositionOptions opts;
    opts.annulus_engage_extent = 10.0;
    const double lambda = 400.0;
    if (!is_admissible(mu, f, lambda)) return false;
    const CZDecomposition dec = decompose(mu, f, lambda, opts);
    if (!dec.selection.annulus_engaged) return false;
    if (dec.selection.annulus_N < 1) return false;
    if (!verify_decomposition(mu, f, lambda, dec).pass) return false;
    if (dec.selection.max_overlap > std::pow(2.0, double(mu.dim())))
      return false;
  }
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");

  // Criteria 1-4 share the randomized corpus.
  Timer t_corpus;
  const Corpus c = run_corpus();
  const double corpus_secs = t_corpus.seconds();

  {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "decomposition invariants on %zu instances / %zu lambda runs "
                  "(%zu parts): %zu failures%s%s; worst reconstruction %.2e, "
                  "worst cancellation %.2e, min 2mu(A)/mu(R) %.6f",
                  c.instances, c.lambda_runs, c.parts_total,
                  c.condition_failures,
                  c.first_failure.empty() ? "" : ", first: ",
                  c.first_failure.c_str(), c.worst_reconstruction,
                  c.worst_cancellation, c.worst_half_mass);
    const bool pass = c.instances >= 200 && c.condition_failures == 0 &&
                      c.short_lambda_instances == 0 && c.support_ok &&
                      c.worst_reconstruction <= 1e-12 &&
                      c.worst_cancellation <= 1e-12 &&
                      c.worst_half_mass >= 1.0 - 1e-12;
    report(1, pass, buf, corpus_secs);
  }

  {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "annulus integral over %zu companion pairs: max value/C1 = "
                  "%.6f (C1 = C0 (6 sqrt(d))^n 6^{n+1}/(6^{n+1}-6^n))",
                  c.annulus_pairs, c.max_annulus_over_c1);
    report(2, c.max_annulus_over_c1 <= 1.0 + 1e-12, buf, 0.0);
  }

  {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "constant chain: max sum|phi|/(B lambda) = %.6f, max "
                  "|alpha|/(C3 lambda) = %.6f",
                  c.max_phi_over_b, c.max_alpha_over_c3);
    report(3, c.max_phi_over_b <= 1.0 + 1e-12 &&
                  c.max_alpha_over_c3 <= 1.0 + 1e-12,
           buf, 0.0);
  }

  {
    Timer t;
    const bool annulus_ok = criterion4_annulus_path();
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "covering overlap: max measured %d against K = %g; annulus "
                  "confinement on 5 wide instances %s",
                  c.max_overlap, c.k_bound, annulus_ok ? "holds" : "FAILS");
    report(4, c.max_overlap <= int(c.k_bound) && annulus_ok, buf, t.seconds());
  }

  {
    Timer t;
    bool finite = true, spread_ok = true, l2_ok = true;
    std::string detail;
    struct Family { const char* name; GeneratorSpec spec; };
    std::vector<Family> families;
    // Families with scale factor near 4 keep the truncation sweep inside a
    // couple of self-similarity periods; very sparse sets (n <= 0.8, factor
    // 16+) have log-periodic quasinorms whose swing over two decades is
    // intrinsic, so the stability demonstration uses exponents near 1.
    {
      GeneratorSpec s;
      s.kind = GeneratorSpec::Kind::cantor;
      s.dim = 2;
      s.depth = 5;
      s.n = 1.0;
      families.push_back({"corner-cantor n=1", s});
    }
    {
      GeneratorSpec s;
      s.kind = GeneratorSpec::Kind::cantor;
      s.dim = 2;
      s.depth = 5;
      s.n = 0.9;
      families.push_back({"corner-cantor n=0.9", s});
    }
    {
      GeneratorSpec s;
      s.kind = GeneratorSpec::Kind::segment_plus_atoms;
      s.dim = 2;
      s.count = 450;
      s.n = 1.0;
      s.iso_count = 4;
      s.iso_mass_fraction = 0.3;
      s.seed = 5;
      families.push_back({"segment+atoms", s});
    }
    for (const auto& fam : families) {
      ExperimentConfig cfg;
      cfg.measure = fam.spec;
      cfg.density.kind = DensitySpec::Kind::ones;
      cfg.kernel = Kernel::cauchy();
      cfg.lambdas.values = {1e30};  // skip decomposition side here
      cfg.epsilons.count = 9;      // [r_min, 100 r_min]
      cfg.l2_iterations = 40;
      ExperimentReport rep;
      try {
        rep = run_weak11_experiment(cfg);
      } catch (const std::exception& e) {
        finite = false;
        detail += std::string(" ") + fam.name + ": " + e.what();
        continue;
      }
      const double spread = rep.quasinorm_spread;
      const double q = rep.max_quasinorm;
      const double l2 = rep.max_l2_norm;
      if (!std::isfinite(q) || !std::isfinite(l2) || q <= 0.0) finite = false;
      if (!(spread < 2.0)) spread_ok = false;
      if (!(q < 10.0 * l2)) l2_ok = false;
      char piece[160];
      std::snprintf(piece, sizeof piece, " %s: spread %.3f, q %.3f, L2 %.3f;",
                    fam.name, spread, q, l2);
      detail += piece;
    }
    report(5, finite && spread_ok && l2_ok,
           "weak (1,1) stability over 2 decades of eps:" + detail, t.seconds());
  }

  {
    Timer t;
    const auto cauchy = verify_kernel_conditions(Kernel::cauchy(), 100000, 101);
    const auto riesz0 =
        verify_kernel_conditions(Kernel::riesz(2, 1.0, 0), 100000, 102);
    const auto riesz1 =
        verify_kernel_conditions(Kernel::riesz(2, 1.0, 1), 100000, 103);
    const auto control =
        verify_kernel_conditions(Kernel::power_law(2, 1.0, 2.0), 100000, 104);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "kernel conditions at 1e5 samples, C = 2: cauchy %.4f/%.4f, "
                  "riesz %.4f/%.4f, control size ratio %.3g",
                  cauchy.max_size_ratio, cauchy.max_smooth_ratio,
                  std::max(riesz0.max_size_ratio, riesz1.max_size_ratio),
                  std::max(riesz0.max_smooth_ratio, riesz1.max_smooth_ratio),
                  control.max_size_ratio);
    report(6, cauchy.pass && riesz0.pass && riesz1.pass && !control.pass, buf,
           t.seconds());
  }

  {
    Timer t;
    const AtomicMeasure mu(1, {0.0, 1.0, 3.0}, {1.0, 2.0, 4.0},
                           GrowthProfile{1.0, 8.0, 0.5});
    const DensityVector f =
        DensityVector::real(std::vector<double>{10.0, 0.0, 0.0});
    const CZDecomposition dec = decompose(mu, f, 8.0);
    bool pass = dec.parts.size() == 1;
    if (pass) {
      const auto& p = dec.parts[0];
      auto close_to = [](double a, double b) {
        return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b));
      };
      pass = close_to(p.q.side, 1.5) && p.q.center[0] == 0.0 &&
             close_to(p.r.side, 9.0) &&
             close_to(p.alpha.real(), 10.0 / 7.0) && p.alpha.imag() == 0.0;
      for (int j = 0; j < 3 && pass; ++j)
        pass = close_to(dec.g[j].real(), 10.0 / 7.0) && dec.g[j].imag() == 0.0;
      pass = pass && close_to(p.b[0].real(), 60.0 / 7.0) &&
             close_to(p.b[1].real(), -10.0 / 7.0) &&
             close_to(p.b[2].real(), -10.0 / 7.0);
    }
    report(7, pass,
           "worked 3-atom example: Q = [-0.75,0.75], R = [-4.5,4.5], alpha = "
           "10/7, g = 10/7, b = (60/7, -10/7, -10/7)",
           t.seconds());
  }

  std::printf("%d criterion failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
