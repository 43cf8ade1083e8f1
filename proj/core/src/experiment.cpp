#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "czlab/harness.hpp"
#include "czlab/parallel.hpp"

namespace czlab {

ExperimentReport run_weak11_experiment(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.measure_spec = cfg.measure;
  rep.density_spec = cfg.density;

  const AtomicMeasure mu = gen_measure(cfg.measure);
  const DensityVector f = gen_density(cfg.density, mu);
  rep.atom_count = mu.size();
  rep.total_mass = mu.total_mass();
  rep.density_norm1 = norm_l1(mu, f);
  rep.doubling_ratio = max_doubling_ratio(mu);

  const double k_bound = cfg.decomp.k_overlap > 0.0
                             ? cfg.decomp.k_overlap
                             : std::pow(2.0, static_cast<double>(mu.dim()));
  rep.constants = DerivedConstants::compute(mu.dim(), mu.growth().n,
                                            mu.growth().C0, k_bound);

  std::vector<double> lambdas = cfg.lambdas.values;
  if (lambdas.empty()) {
    const std::size_t count = cfg.lambdas.count ? cfg.lambdas.count : 12;
    lambdas = cfg.lambdas.lo > 0.0 && cfg.lambdas.hi > cfg.lambdas.lo
                  ? geometric_grid(cfg.lambdas.lo, cfg.lambdas.hi, count)
                  : auto_lambda_grid(mu, f, count);
  }

  // Inadmissible lambdas are flagged and skipped, never run.
  rep.lambda_runs.resize(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    LambdaRun& run = rep.lambda_runs[i];
    run.lambda = lambdas[i];
    run.admissible = is_admissible(mu, f, lambdas[i]);
    if (!run.admissible) {
      run.pass = false;
      return;
    }
    const CZDecomposition dec = decompose(mu, f, lambdas[i], cfg.decomp);
    run.parts = dec.parts.size();
    run.max_overlap = dec.selection.max_overlap;
    run.report = verify_decomposition(mu, f, lambdas[i], dec);
    run.pass = run.report.pass;
    if (const auto* c = run.report.find("phi_sum_bound"))
      run.max_phi_over_lambda = c->measured * dec.constants.B;
    if (const auto* c = run.report.find("alpha_bound"))
      run.max_alpha_over_lambda = c->measured * dec.constants.C3;
    if (const auto* c = run.report.find("annulus_integral"))
      run.max_annulus_integral = c->measured * dec.constants.C1;
  });
  for (const auto& run : rep.lambda_runs) {
    if (!run.admissible || run.pass) continue;
    std::string cond = "unknown";
    for (const auto& c : run.report.conditions)
      if (!c.pass) { cond = c.id; break; }
    throw InvariantViolation(
        "experiment: condition '" + cond + "' failed at lambda " +
        std::to_string(run.lambda) + " (measure seed " +
        std::to_string(cfg.measure.seed) + ", density seed " +
        std::to_string(cfg.density.seed) + ")");
  }

  std::vector<double> epsilons = cfg.epsilons.values;
  if (epsilons.empty()) {
    const std::size_t count = cfg.epsilons.count ? cfg.epsilons.count : 9;
    const double lo =
        cfg.epsilons.lo > 0.0 ? cfg.epsilons.lo : mu.growth().r_min;
    const double hi = cfg.epsilons.hi > lo ? cfg.epsilons.hi : 100.0 * lo;
    epsilons = geometric_grid(lo, hi, count);
  }

  rep.eps_runs.resize(epsilons.size());
  const double norm1 = rep.density_norm1;
  for (std::size_t e = 0; e < epsilons.size(); ++e) {
    EpsRun& run = rep.eps_runs[e];
    run.eps = epsilons[e];
    const auto values = truncated_transform(mu, cfg.kernel, f, epsilons[e]);
    run.quasinorm =
        norm1 > 0.0 ? weak_quasinorm(mu, values, norm1, {}) : 0.0;
    if (cfg.with_l2)
      run.l2_norm = empirical_l2_norm(mu, cfg.kernel, epsilons[e],
                                      cfg.l2_iterations);
  }

  double qmin = std::numeric_limits<double>::infinity(), qmax = 0.0;
  for (const auto& run : rep.eps_runs) {
    qmin = std::min(qmin, run.quasinorm);
    qmax = std::max(qmax, run.quasinorm);
    rep.max_l2_norm = std::max(rep.max_l2_norm, run.l2_norm);
  }
  rep.max_quasinorm = qmax;
  if (rep.eps_runs.empty())
    rep.quasinorm_spread = 0.0;
  else if (qmin > 0.0)
    rep.quasinorm_spread = qmax / qmin;
  else
    rep.quasinorm_spread =
        qmax > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;

  rep.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

}  // namespace czlab
