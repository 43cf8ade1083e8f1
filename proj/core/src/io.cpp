#include "czlab/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>

namespace czlab::io {

using nlohmann::json;

namespace {

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text << '\n';
}

json complex_to_json(std::complex<double> z) {
  if (z.imag() == 0.0) return json(z.real());
  return json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InputError("expected a number or [re, im] pair");
}

json cube_to_j(const Cube& q) {
  return json{{"center", q.center}, {"side", q.side}};
}

Cube cube_from_j(const json& j) {
  try {
    return Cube(j.at("center").get<std::vector<double>>(),
                j.at("side").get<double>());
  } catch (const json::exception& e) {
    throw InputError(std::string("bad cube: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad cube: ") + e.what());
  }
}

json constants_to_j(const DerivedConstants& c) {
  return json{{"C1", c.C1},
              {"C2", c.C2},
              {"C3", c.C3},
              {"B", c.B},
              {"K_overlap", c.K_overlap}};
}

DerivedConstants constants_from_j(const json& j) {
  DerivedConstants c;
  c.C1 = j.at("C1").get<double>();
  c.C2 = j.at("C2").get<double>();
  c.C3 = j.at("C3").get<double>();
  c.B = j.at("B").get<double>();
  c.K_overlap = j.at("K_overlap").get<double>();
  return c;
}

}  // namespace

AtomicMeasure load_measure(const std::filesystem::path& path) {
  const json j = load_json(path);
  try {
    const std::size_t dim = j.at("dim").get<std::size_t>();
    const auto& jg = j.at("growth");
    GrowthProfile g{jg.at("n").get<double>(), jg.at("C0").get<double>(),
                    jg.at("r_min").get<double>()};
    std::vector<double> pos;
    std::vector<double> w;
    for (const auto& atom : j.at("atoms")) {
      const auto x = atom.at("x").get<std::vector<double>>();
      if (x.size() != dim)
        throw InputError(path.string() + ": atom dimension mismatch");
      pos.insert(pos.end(), x.begin(), x.end());
      w.push_back(atom.at("w").get<double>());
    }
    return AtomicMeasure(dim, std::move(pos), std::move(w), g);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_measure(const AtomicMeasure& mu, const std::filesystem::path& path) {
  json atoms = json::array();
  for (std::size_t j = 0; j < mu.size(); ++j) {
    const auto x = mu.position(j);
    atoms.push_back(json{{"x", std::vector<double>(x.begin(), x.end())},
                         {"w", mu.weight(j)}});
  }
  const json j{{"dim", mu.dim()},
               {"growth",
                {{"n", mu.growth().n},
                 {"C0", mu.growth().C0},
                 {"r_min", mu.growth().r_min}}},
               {"atoms", atoms}};
  write_file(path, j.dump(2));
}

DensityVector load_density(const std::filesystem::path& path) {
  const json j = load_json(path);
  try {
    std::vector<std::complex<double>> v;
    for (const auto& item : j.at("values")) v.push_back(complex_from_json(item));
    return DensityVector(std::move(v));
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_density(const DensityVector& f, const std::filesystem::path& path) {
  json values = json::array();
  for (std::size_t j = 0; j < f.size(); ++j) values.push_back(complex_to_json(f[j]));
  write_file(path, json{{"values", values}}.dump(2));
}

std::string cube_to_json(const Cube& q) { return cube_to_j(q).dump(2); }

void save_decomposition(const CZDecomposition& dec,
                        const std::filesystem::path& path) {
  json parts = json::array();
  for (const auto& p : dec.parts) {
    json b = json::array();
    for (const auto& v : p.b) b.push_back(complex_to_json(v));
    parts.push_back(json{{"Q", cube_to_j(p.q)},
                         {"R", cube_to_j(p.r)},
                         {"alpha", complex_to_json(p.alpha)},
                         {"A", p.support},
                         {"b", b},
                         {"gen_atom", p.gen_atom},
                         {"r_power", p.r_power}});
  }
  json g = json::array();
  for (const auto& v : dec.g) g.push_back(complex_to_json(v));
  const json j{{"lambda", dec.lambda},
               {"parts", parts},
               {"g", g},
               {"constants", constants_to_j(dec.constants)},
               {"selection",
                {{"candidates", dec.selection.candidates},
                 {"atom_overlap", dec.selection.atom_overlap},
                 {"max_overlap", dec.selection.max_overlap},
                 {"K_overlap", dec.selection.k_overlap_bound},
                 {"annulus_engaged", dec.selection.annulus_engaged},
                 {"N", dec.selection.annulus_N},
                 {"N_prime", dec.selection.annulus_Nprime}}}};
  write_file(path, j.dump(2));
}

CZDecomposition load_decomposition(const std::filesystem::path& path,
                                   const AtomicMeasure& mu) {
  const json j = load_json(path);
  try {
    CZDecomposition dec;
    dec.lambda = j.at("lambda").get<double>();
    dec.theta = dec.lambda / std::pow(2.0, static_cast<double>(mu.dim()) + 1.0);
    dec.constants = constants_from_j(j.at("constants"));
    for (const auto& jp : j.at("parts")) {
      CZPart p;
      p.q = cube_from_j(jp.at("Q"));
      p.r = cube_from_j(jp.at("R"));
      p.alpha = complex_from_json(jp.at("alpha"));
      p.support = jp.at("A").get<std::vector<std::size_t>>();
      std::sort(p.support.begin(), p.support.end());
      if (jp.contains("gen_atom")) p.gen_atom = jp.at("gen_atom").get<std::size_t>();
      if (jp.contains("r_power")) p.r_power = jp.at("r_power").get<int>();
      for (std::size_t a = 0; a < mu.size(); ++a) {
        if (p.q.contains(mu.position(a))) p.atoms_q.push_back(a);
        if (p.r.contains(mu.position(a))) p.atoms_r.push_back(a);
      }
      for (const auto& v : jp.at("b")) p.b.push_back(complex_from_json(v));
      if (p.b.size() != p.atoms_r.size())
        throw InputError(path.string() +
                         ": b length does not match the atoms of R");
      dec.parts.push_back(std::move(p));
    }
    for (const auto& v : j.at("g")) dec.g.push_back(complex_from_json(v));
    if (dec.g.size() != mu.size())
      throw InputError(path.string() + ": g length mismatch");
    // Selection overlap re-derived from the stored cubes.
    dec.selection.atom_overlap.assign(mu.size(), 0);
    for (std::size_t a = 0; a < mu.size(); ++a)
      for (const auto& p : dec.parts)
        if (p.q.contains(mu.position(a))) ++dec.selection.atom_overlap[a];
    for (int c : dec.selection.atom_overlap)
      dec.selection.max_overlap = std::max(dec.selection.max_overlap, c);
    dec.selection.k_overlap_bound = dec.constants.K_overlap;
    return dec;
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string growth_report_to_json(const GrowthReport& rep) {
  json v = json::array();
  for (const auto& x : rep.violations)
    v.push_back(json{{"atom", x.atom}, {"radius", x.radius}, {"ratio", x.ratio}});
  return json{{"pass", rep.pass},
              {"worst_ratio", rep.worst_ratio},
              {"worst_atom", rep.worst_atom},
              {"worst_radius", rep.worst_radius},
              {"violations", v}}
      .dump(2);
}

std::string invariant_report_to_json(const InvariantReport& rep) {
  json conds = json::array();
  for (const auto& c : rep.conditions)
    conds.push_back(json{{"id", c.id},
                         {"pass", c.pass},
                         {"measured", c.measured},
                         {"bound", c.bound},
                         {"note", c.note}});
  return json{{"pass", rep.pass},
              {"constants", constants_to_j(rep.constants)},
              {"conditions", conds}}
      .dump(2);
}

std::string selection_info_to_json(const SelectionInfo& info) {
  return json{{"candidates", info.candidates},
              {"atom_overlap", info.atom_overlap},
              {"max_overlap", info.max_overlap},
              {"K_overlap", info.k_overlap_bound},
              {"annulus_engaged", info.annulus_engaged},
              {"N", info.annulus_N},
              {"N_prime", info.annulus_Nprime}}
      .dump(2);
}

std::string values_to_json(std::span<const std::complex<double>> values) {
  json v = json::array();
  for (const auto& z : values) v.push_back(complex_to_json(z));
  return json{{"values", v}}.dump(2);
}

std::vector<std::complex<double>> values_from_json_file(
    const std::filesystem::path& path) {
  const json j = load_json(path);
  try {
    std::vector<std::complex<double>> v;
    for (const auto& item : j.at("values")) v.push_back(complex_from_json(item));
    return v;
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_values(std::span<const std::complex<double>> values,
                 const std::filesystem::path& path) {
  write_file(path, values_to_json(values));
}

std::string kernel_report_to_json(const KernelConditionReport& rep) {
  return json{{"samples", rep.samples},
              {"max_size_ratio", rep.max_size_ratio},
              {"max_smooth_ratio", rep.max_smooth_ratio},
              {"size_pass", rep.size_pass},
              {"smooth_pass", rep.smooth_pass},
              {"pass", rep.pass}}
      .dump(2);
}

namespace {

GeneratorSpec::Kind measure_kind_from(const std::string& s) {
  if (s == "grid") return GeneratorSpec::Kind::grid;
  if (s == "cantor") return GeneratorSpec::Kind::cantor;
  if (s == "segment_plus_atoms" || s == "segment")
    return GeneratorSpec::Kind::segment_plus_atoms;
  if (s == "custom" || s == "file") return GeneratorSpec::Kind::custom;
  throw InputError("unknown measure kind '" + s + "'");
}

std::string measure_kind_name(GeneratorSpec::Kind k) {
  switch (k) {
    case GeneratorSpec::Kind::grid: return "grid";
    case GeneratorSpec::Kind::cantor: return "cantor";
    case GeneratorSpec::Kind::segment_plus_atoms: return "segment_plus_atoms";
    case GeneratorSpec::Kind::custom: return "custom";
  }
  return "grid";
}

DensitySpec::Kind density_kind_from(const std::string& s) {
  if (s == "ones") return DensitySpec::Kind::ones;
  if (s == "spikes") return DensitySpec::Kind::spikes;
  if (s == "random_sign" || s == "signs") return DensitySpec::Kind::random_sign;
  if (s == "random_phase" || s == "phases")
    return DensitySpec::Kind::random_phase;
  if (s == "custom" || s == "file") return DensitySpec::Kind::custom;
  throw InputError("unknown density kind '" + s + "'");
}

std::string density_kind_name(DensitySpec::Kind k) {
  switch (k) {
    case DensitySpec::Kind::ones: return "ones";
    case DensitySpec::Kind::spikes: return "spikes";
    case DensitySpec::Kind::random_sign: return "random_sign";
    case DensitySpec::Kind::random_phase: return "random_phase";
    case DensitySpec::Kind::custom: return "custom";
  }
  return "spikes";
}

GeneratorSpec measure_spec_from_j(const json& j) {
  GeneratorSpec s;
  if (j.contains("file") && !j.contains("kind")) {
    s.kind = GeneratorSpec::Kind::custom;
    s.file = j.at("file").get<std::string>();
    return s;
  }
  s.kind = measure_kind_from(j.at("kind").get<std::string>());
  if (j.contains("file")) s.file = j.at("file").get<std::string>();
  if (j.contains("dim")) s.dim = j.at("dim").get<std::size_t>();
  if (j.contains("count")) s.count = j.at("count").get<std::size_t>();
  if (j.contains("depth")) s.depth = j.at("depth").get<int>();
  if (j.contains("n")) s.n = j.at("n").get<double>();
  if (j.contains("C0")) s.C0 = j.at("C0").get<double>();
  if (j.contains("r_min")) s.r_min = j.at("r_min").get<double>();
  if (j.contains("total_mass")) s.total_mass = j.at("total_mass").get<double>();
  if (j.contains("jitter")) s.jitter = j.at("jitter").get<double>();
  if (j.contains("weight_spread"))
    s.weight_spread = j.at("weight_spread").get<double>();
  if (j.contains("iso_count")) s.iso_count = j.at("iso_count").get<std::size_t>();
  if (j.contains("iso_mass_fraction"))
    s.iso_mass_fraction = j.at("iso_mass_fraction").get<double>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

json measure_spec_to_j(const GeneratorSpec& s) {
  json j{{"kind", measure_kind_name(s.kind)}};
  if (s.kind == GeneratorSpec::Kind::custom) {
    j["file"] = s.file;
    return j;
  }
  j["dim"] = s.dim;
  j["count"] = s.count;
  j["depth"] = s.depth;
  j["n"] = s.n;
  j["C0"] = s.C0;
  j["r_min"] = s.r_min;
  j["total_mass"] = s.total_mass;
  j["jitter"] = s.jitter;
  j["weight_spread"] = s.weight_spread;
  j["iso_count"] = s.iso_count;
  j["iso_mass_fraction"] = s.iso_mass_fraction;
  j["seed"] = s.seed;
  return j;
}

DensitySpec density_spec_from_j(const json& j) {
  DensitySpec s;
  if (j.contains("file") && !j.contains("kind")) {
    s.kind = DensitySpec::Kind::custom;
    s.file = j.at("file").get<std::string>();
    return s;
  }
  s.kind = density_kind_from(j.at("kind").get<std::string>());
  if (j.contains("file")) s.file = j.at("file").get<std::string>();
  if (j.contains("count")) s.spike_count = j.at("count").get<std::size_t>();
  if (j.contains("scale")) s.spike_scale = j.at("scale").get<double>();
  if (j.contains("complex")) s.complex_phases = j.at("complex").get<bool>();
  if (j.contains("background")) s.background = j.at("background").get<double>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

json density_spec_to_j(const DensitySpec& s) {
  json j{{"kind", density_kind_name(s.kind)}};
  if (s.kind == DensitySpec::Kind::custom) {
    j["file"] = s.file;
    return j;
  }
  j["count"] = s.spike_count;
  j["scale"] = s.spike_scale;
  j["complex"] = s.complex_phases;
  j["background"] = s.background;
  j["seed"] = s.seed;
  return j;
}

Kernel kernel_from_j(const json& j) {
  const std::string kind = j.value("kind", std::string("cauchy"));
  if (kind == "cauchy") return Kernel::cauchy();
  if (kind == "riesz")
    return Kernel::riesz(j.value("dim", std::size_t{2}), j.value("n", 1.0),
                         j.value("component", std::size_t{0}));
  if (kind == "power" || kind == "power_law") {
    const double n = j.value("n", 1.0);
    return Kernel::power_law(j.value("dim", std::size_t{2}), n,
                             j.value("exponent", 2.0 * n));
  }
  throw InputError("unknown kernel kind '" + kind + "'");
}

GridSpec grid_from_j(const json& j) {
  GridSpec g;
  if (j.is_array()) {
    g.values = j.get<std::vector<double>>();
    return g;
  }
  if (j.contains("values")) g.values = j.at("values").get<std::vector<double>>();
  if (j.contains("lo")) g.lo = j.at("lo").get<double>();
  if (j.contains("hi")) g.hi = j.at("hi").get<double>();
  if (j.contains("count")) g.count = j.at("count").get<std::size_t>();
  return g;
}

}  // namespace

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  const json j = load_json(path);
  try {
    ExperimentConfig cfg;
    cfg.measure = measure_spec_from_j(j.at("measure"));
    cfg.density = density_spec_from_j(j.at("density"));
    if (j.contains("kernel")) cfg.kernel = kernel_from_j(j.at("kernel"));
    if (j.contains("lambda_grid")) cfg.lambdas = grid_from_j(j.at("lambda_grid"));
    if (j.contains("eps_grid")) cfg.epsilons = grid_from_j(j.at("eps_grid"));
    if (j.contains("l2_iterations"))
      cfg.l2_iterations = j.at("l2_iterations").get<int>();
    if (j.contains("with_l2")) cfg.with_l2 = j.at("with_l2").get<bool>();
    if (j.contains("k_overlap"))
      cfg.decomp.k_overlap = j.at("k_overlap").get<double>();
    if (j.contains("annulus_engage_extent"))
      cfg.decomp.annulus_engage_extent =
          j.at("annulus_engage_extent").get<double>();
    return cfg;
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string experiment_report_to_json(const ExperimentReport& rep,
                                      bool strip_timing) {
  json lambdas = json::array();
  for (const auto& run : rep.lambda_runs) {
    json conds = json::array();
    for (const auto& c : run.report.conditions)
      conds.push_back(json{{"id", c.id},
                           {"pass", c.pass},
                           {"measured", c.measured},
                           {"bound", c.bound}});
    lambdas.push_back(json{{"lambda", run.lambda},
                           {"admissible", run.admissible},
                           {"parts", run.parts},
                           {"pass", run.pass},
                           {"max_phi_over_lambda", run.max_phi_over_lambda},
                           {"max_alpha_over_lambda", run.max_alpha_over_lambda},
                           {"max_annulus_integral", run.max_annulus_integral},
                           {"max_overlap", run.max_overlap},
                           {"conditions", conds}});
  }
  json eps = json::array();
  for (const auto& run : rep.eps_runs)
    eps.push_back(json{{"eps", run.eps},
                       {"quasinorm", run.quasinorm},
                       {"l2_norm", run.l2_norm}});
  json j{{"measure", measure_spec_to_j(rep.measure_spec)},
         {"density", density_spec_to_j(rep.density_spec)},
         {"atom_count", rep.atom_count},
         {"total_mass", rep.total_mass},
         {"density_norm1", rep.density_norm1},
         {"doubling_ratio", rep.doubling_ratio},
         {"constants", constants_to_j(rep.constants)},
         {"lambda_runs", lambdas},
         {"eps_runs", eps},
         {"max_quasinorm", rep.max_quasinorm},
         {"quasinorm_spread", rep.quasinorm_spread},
         {"max_l2_norm", rep.max_l2_norm}};
  if (!strip_timing) j["seconds"] = rep.seconds;
  return j.dump(2);
}

void save_experiment_report(const ExperimentReport& rep,
                            const std::filesystem::path& path) {
  write_file(path, experiment_report_to_json(rep));
}

void save_sweep_csv(const WeakSweep& sweep, double norm1,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << "eps,lambda,exceedance_mass,quasinorm\n";
  out.precision(17);
  for (std::size_t e = 0; e < sweep.epsilons.size(); ++e)
    for (std::size_t l = 0; l < sweep.lambdas.size(); ++l) {
      const double mass = sweep.exceedance[e][l];
      const double q = norm1 > 0.0 ? sweep.lambdas[l] * mass / norm1 : 0.0;
      out << sweep.epsilons[e] << ',' << sweep.lambdas[l] << ',' << mass << ','
          << q << '\n';
    }
}

}  // namespace czlab::io
