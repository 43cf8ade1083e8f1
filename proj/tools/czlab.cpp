// czlab — Calderon-Zygmund decomposition and truncated singular integrals on
// finite atomic measures.
//
// Exit codes: 0 success / all invariants pass, 1 invariant violation,
// 2 input error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "czlab/io.hpp"

namespace {

using namespace czlab;

struct KernelFlags {
  std::string kind = "cauchy";
  std::size_t dim = 2;
  double n = 1.0;
  std::size_t component = 0;
  double exponent = 0.0;

  Kernel build() const {
    if (kind == "cauchy") return Kernel::cauchy();
    if (kind == "riesz") return Kernel::riesz(dim, n, component);
    if (kind == "power")
      return Kernel::power_law(dim, n, exponent > 0.0 ? exponent : 2.0 * n);
    throw io::InputError("unknown kernel '" + kind + "'");
  }
};

void add_kernel_flags(CLI::App* cmd, KernelFlags& k) {
  cmd->add_option("--kernel", k.kind, "cauchy | riesz | power")
      ->default_val("cauchy");
  cmd->add_option("--kernel-dim", k.dim, "kernel dimension (riesz/power)");
  cmd->add_option("--kernel-n", k.n, "kernel growth exponent n");
  cmd->add_option("--component", k.component, "riesz component index");
  cmd->add_option("--exponent", k.exponent, "power kernel exponent");
}

std::vector<double> parse_grid(const std::string& text) {
  // "lo:hi:count", geometric.
  const auto a = text.find(':');
  const auto b = text.rfind(':');
  if (a == std::string::npos || b == a)
    throw io::InputError("grid must be lo:hi:count, got '" + text + "'");
  const double lo = std::stod(text.substr(0, a));
  const double hi = std::stod(text.substr(a + 1, b - a - 1));
  const std::size_t count = std::stoul(text.substr(b + 1));
  return geometric_grid(lo, hi, count);
}

GeneratorSpec::Kind parse_measure_kind(const std::string& s) {
  if (s == "grid") return GeneratorSpec::Kind::grid;
  if (s == "cantor") return GeneratorSpec::Kind::cantor;
  if (s == "segment" || s == "segment_plus_atoms")
    return GeneratorSpec::Kind::segment_plus_atoms;
  if (s == "file" || s == "custom") return GeneratorSpec::Kind::custom;
  throw io::InputError("unknown measure kind '" + s + "'");
}

DensitySpec::Kind parse_density_kind(const std::string& s) {
  if (s == "ones") return DensitySpec::Kind::ones;
  if (s == "spikes") return DensitySpec::Kind::spikes;
  if (s == "signs" || s == "random_sign") return DensitySpec::Kind::random_sign;
  if (s == "phases" || s == "random_phase") return DensitySpec::Kind::random_phase;
  if (s == "file" || s == "custom") return DensitySpec::Kind::custom;
  throw io::InputError("unknown density kind '" + s + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Calderon-Zygmund decomposition lab for atomic measures"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a measure (and optionally a density)");
  std::string gen_kind = "grid", gen_out, gen_density_kind, gen_density_out, gen_file;
  GeneratorSpec gspec;
  DensitySpec dspec;
  gen->add_option("--kind", gen_kind, "grid | cantor | segment | file")->required();
  gen->add_option("--file", gen_file, "measure file for --kind file");
  gen->add_option("--dim", gspec.dim);
  gen->add_option("--count", gspec.count);
  gen->add_option("--depth", gspec.depth);
  gen->add_option("--n", gspec.n, "declared growth exponent");
  gen->add_option("--C0", gspec.C0, "declared growth constant (default: fit)");
  gen->add_option("--r-min", gspec.r_min);
  gen->add_option("--total-mass", gspec.total_mass);
  gen->add_option("--jitter", gspec.jitter);
  gen->add_option("--weight-spread", gspec.weight_spread);
  gen->add_option("--iso-count", gspec.iso_count);
  gen->add_option("--iso-mass-fraction", gspec.iso_mass_fraction);
  gen->add_option("--seed", gspec.seed);
  gen->add_option("--out", gen_out, "measure output path")->required();
  gen->add_option("--density-kind", gen_density_kind, "ones | spikes | signs | phases");
  gen->add_option("--spike-count", dspec.spike_count);
  gen->add_option("--spike-scale", dspec.spike_scale);
  gen->add_flag("--complex", dspec.complex_phases, "complex spike phases");
  gen->add_option("--background", dspec.background);
  gen->add_option("--density-seed", dspec.seed);
  gen->add_option("--density-out", gen_density_out);

  // ---- verify-growth -------------------------------------------------------
  auto* vg = app.add_subcommand("verify-growth", "check mu(B(x,r)) <= C0 r^n");
  std::string vg_measure, vg_json;
  vg->add_option("--measure", vg_measure)->required();
  vg->add_option("--json", vg_json, "write the report here");

  // ---- decompose -----------------------------------------------------------
  auto* dc = app.add_subcommand("decompose", "Calderon-Zygmund decomposition at lambda");
  std::string dc_measure, dc_density, dc_out;
  double dc_lambda = 0.0;
  DecompositionOptions dc_opts;
  dc->add_option("--measure", dc_measure)->required();
  dc->add_option("--density", dc_density)->required();
  dc->add_option("--lambda", dc_lambda)->required();
  dc->add_option("--out", dc_out)->required();
  dc->add_option("--k-overlap", dc_opts.k_overlap);
  dc->add_option("--annulus-extent", dc_opts.annulus_engage_extent,
                 "engage the annulus covering above this level-set extent");
  dc->add_option("--annulus-ratio", dc_opts.annulus_ratio);
  dc->add_option("--annulus-N", dc_opts.annulus_N);
  dc->add_option("--annulus-Nprime", dc_opts.annulus_Nprime);

  // ---- verify ---------------------------------------------------------------
  auto* vf = app.add_subcommand("verify", "re-check every decomposition invariant");
  std::string vf_measure, vf_density, vf_dec, vf_json;
  double vf_lambda = -1.0;
  vf->add_option("--measure", vf_measure)->required();
  vf->add_option("--density", vf_density)->required();
  vf->add_option("--dec", vf_dec)->required();
  vf->add_option("--lambda", vf_lambda, "override the file's lambda");
  vf->add_option("--json", vf_json, "write the report here");

  // ---- transform -----------------------------------------------------------
  auto* tr = app.add_subcommand("transform", "truncated singular integral T_eps f");
  std::string tr_measure, tr_density, tr_out;
  double tr_eps = 0.0;
  KernelFlags tr_kernel;
  tr->add_option("--measure", tr_measure)->required();
  tr->add_option("--density", tr_density)->required();
  tr->add_option("--eps", tr_eps)->required();
  tr->add_option("--out", tr_out)->required();
  add_kernel_flags(tr, tr_kernel);

  // ---- weak11 ---------------------------------------------------------------
  auto* wk = app.add_subcommand("weak11", "exceedance sweep over (eps, lambda)");
  std::string wk_measure, wk_density, wk_out, wk_csv;
  std::string wk_eps = "", wk_lambda = "auto";
  KernelFlags wk_kernel;
  wk->add_option("--measure", wk_measure)->required();
  wk->add_option("--density", wk_density)->required();
  wk->add_option("--eps-grid", wk_eps, "lo:hi:count (default r_min:100r_min:9)");
  wk->add_option("--lambda-grid", wk_lambda, "lo:hi:count or 'auto'");
  wk->add_option("--out", wk_out, "report JSON path")->required();
  wk->add_option("--csv", wk_csv, "plot-ready CSV path");
  add_kernel_flags(wk, wk_kernel);

  // ---- report ---------------------------------------------------------------
  auto* rp = app.add_subcommand("report", "end-to-end experiment from a config file");
  std::string rp_config, rp_out, rp_csv;
  long long rp_seed = -1;
  rp->add_option("--config", rp_config)->required();
  rp->add_option("--out", rp_out, "report JSON path")->required();
  rp->add_option("--csv", rp_csv, "sweep CSV path");
  rp->add_option("--seed", rp_seed, "override the config's generator seeds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad command line is an input error
  }

  if (gen->parsed()) {
    gspec.kind = parse_measure_kind(gen_kind);
    gspec.file = gen_file;
    const AtomicMeasure mu = gen_measure(gspec);
    io::save_measure(mu, gen_out);
    std::printf("wrote %s: %zu atoms, ||mu|| = %.6g, C0 = %.6g, r_min = %.6g\n",
                gen_out.c_str(), mu.size(), mu.total_mass(), mu.growth().C0,
                mu.growth().r_min);
    if (!gen_density_out.empty()) {
      dspec.kind = gen_density_kind.empty()
                       ? DensitySpec::Kind::spikes
                       : parse_density_kind(gen_density_kind);
      const DensityVector f = gen_density(dspec, mu);
      io::save_density(f, gen_density_out);
      std::printf("wrote %s: ||f||_1 = %.6g, max|f| = %.6g\n",
                  gen_density_out.c_str(), norm_l1(mu, f), max_abs(f));
    }
    return 0;
  }

  if (vg->parsed()) {
    const AtomicMeasure mu = io::load_measure(vg_measure);
    const GrowthReport rep = verify_growth(mu);
    if (!vg_json.empty()) {
      std::ofstream out(vg_json);
      out << io::growth_report_to_json(rep) << '\n';
    }
    std::printf("%s: worst ratio %.6g against C0 = %.6g (atom %zu, r = %.6g)\n",
                rep.pass ? "pass" : "FAIL", rep.worst_ratio, mu.growth().C0,
                rep.worst_atom, rep.worst_radius);
    return rep.pass ? 0 : 1;
  }

  if (dc->parsed()) {
    const AtomicMeasure mu = io::load_measure(dc_measure);
    const DensityVector f = io::load_density(dc_density);
    const CZDecomposition dec = decompose(mu, f, dc_lambda, dc_opts);
    io::save_decomposition(dec, dc_out);
    std::printf("wrote %s: %zu parts, max overlap %d, theta = %.6g\n",
                dc_out.c_str(), dec.parts.size(), dec.selection.max_overlap,
                dec.theta);
    return 0;
  }

  if (vf->parsed()) {
    const AtomicMeasure mu = io::load_measure(vf_measure);
    const DensityVector f = io::load_density(vf_density);
    const CZDecomposition dec = io::load_decomposition(vf_dec, mu);
    const double lambda = vf_lambda > 0.0 ? vf_lambda : dec.lambda;
    const InvariantReport rep = verify_decomposition(mu, f, lambda, dec);
    for (const auto& c : rep.conditions)
      std::printf("%-18s %s  measured %.6g against %.6g\n", c.id.c_str(),
                  c.pass ? "pass" : "FAIL", c.measured, c.bound);
    if (!vf_json.empty()) {
      std::ofstream out(vf_json);
      out << io::invariant_report_to_json(rep) << '\n';
    }
    return rep.pass ? 0 : 1;
  }

  if (tr->parsed()) {
    const AtomicMeasure mu = io::load_measure(tr_measure);
    const DensityVector f = io::load_density(tr_density);
    const auto values = truncated_transform(mu, tr_kernel.build(), f, tr_eps);
    io::save_values(values, tr_out);
    std::printf("wrote %s: %zu values\n", tr_out.c_str(), values.size());
    return 0;
  }

  if (wk->parsed()) {
    const AtomicMeasure mu = io::load_measure(wk_measure);
    const DensityVector f = io::load_density(wk_density);
    const Kernel kernel = wk_kernel.build();
    std::vector<double> eps =
        wk_eps.empty()
            ? geometric_grid(mu.growth().r_min, 100.0 * mu.growth().r_min, 9)
            : parse_grid(wk_eps);
    std::vector<double> lambdas;
    if (wk_lambda == "auto") {
      // Span the value range of the coarsest and finest truncations.
      const auto v0 = truncated_transform(mu, kernel, f, eps.front());
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      for (const auto& z : v0) {
        const double a = std::abs(z);
        if (a > 0.0) lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
      lambdas = (hi > 0.0 && lo < hi)
                    ? geometric_grid(0.5 * lo, 2.0 * hi, 25)
                    : std::vector<double>{1.0};
    } else {
      lambdas = parse_grid(wk_lambda);
    }
    const WeakSweep sweep = weak_sweep(mu, kernel, f, eps, lambdas);
    const double norm1 = norm_l1(mu, f);
    std::ofstream out(wk_out);
    if (!out) throw io::InputError("cannot write " + wk_out);
    out << "{\n  \"quasinorm\": " << sweep.quasinorm << ",\n  \"per_eps\": [";
    for (std::size_t e = 0; e < sweep.epsilons.size(); ++e)
      out << (e ? ", " : "") << "{\"eps\": " << sweep.epsilons[e]
          << ", \"quasinorm\": " << sweep.quasinorm_per_eps[e] << "}";
    out << "]\n}\n";
    if (!wk_csv.empty()) io::save_sweep_csv(sweep, norm1, wk_csv);
    std::printf("sweep quasinorm %.6g over %zu eps x %zu lambda\n",
                sweep.quasinorm, sweep.epsilons.size(), sweep.lambdas.size());
    return 0;
  }

  if (rp->parsed()) {
    ExperimentConfig cfg = io::load_experiment_config(rp_config);
    if (rp_seed >= 0) {
      cfg.measure.seed = static_cast<std::uint64_t>(rp_seed);
      cfg.density.seed = static_cast<std::uint64_t>(rp_seed) + 1;
    }
    const ExperimentReport rep = run_weak11_experiment(cfg);
    io::save_experiment_report(rep, rp_out);
    if (!rp_csv.empty()) {
      const AtomicMeasure mu = gen_measure(cfg.measure);
      const DensityVector f = gen_density(cfg.density, mu);
      std::vector<double> eps;
      for (const auto& run : rep.eps_runs) eps.push_back(run.eps);
      std::vector<double> lambdas;
      for (const auto& run : rep.lambda_runs) lambdas.push_back(run.lambda);
      if (lambdas.empty()) lambdas.push_back(1.0);
      const WeakSweep sweep = weak_sweep(mu, cfg.kernel, f, eps, lambdas);
      io::save_sweep_csv(sweep, rep.density_norm1, rp_csv);
    }
    bool all = true;
    for (const auto& run : rep.lambda_runs) all = all && (!run.admissible || run.pass);
    std::printf("report: %zu lambda runs, max quasinorm %.6g, spread %.3g\n",
                rep.lambda_runs.size(), rep.max_quasinorm, rep.quasinorm_spread);
    return all ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const czlab::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 1;
  } catch (const czlab::io::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
