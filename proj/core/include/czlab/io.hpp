#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "czlab/harness.hpp"

namespace czlab::io {

/// Malformed files, schema violations, dimension mismatches.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Measure file: { "dim": d, "growth": {"n","C0","r_min"},
//                 "atoms": [ {"x":[...], "w": w}, ... ] }
AtomicMeasure load_measure(const std::filesystem::path& path);
void save_measure(const AtomicMeasure& mu, const std::filesystem::path& path);

// Density file: { "values": [ v, ... ] } with v a number or [re, im],
// aligned by index with the measure's atom list.
DensityVector load_density(const std::filesystem::path& path);
void save_density(const DensityVector& f, const std::filesystem::path& path);

// Cube: { "center": [...], "side": s }
std::string cube_to_json(const Cube& q);

// Decomposition file: { "lambda", "parts": [ {"Q","R","alpha","A","b"} ],
//                       "g": [...], "constants": {...} }.  "b" values are
// listed for the atoms inside R in ascending atom index.
void save_decomposition(const CZDecomposition& dec,
                        const std::filesystem::path& path);
CZDecomposition load_decomposition(const std::filesystem::path& path,
                                   const AtomicMeasure& mu);

std::string growth_report_to_json(const GrowthReport& rep);
std::string invariant_report_to_json(const InvariantReport& rep);
std::string selection_info_to_json(const SelectionInfo& info);
std::string values_to_json(std::span<const std::complex<double>> values);
std::vector<std::complex<double>> values_from_json_file(
    const std::filesystem::path& path);
void save_values(std::span<const std::complex<double>> values,
                 const std::filesystem::path& path);

std::string kernel_report_to_json(const KernelConditionReport& rep);

// Experiment config / report. Timing fields are emitted but carry no
// semantic weight; strip_timing controls whether they are written at all.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
std::string experiment_report_to_json(const ExperimentReport& rep,
                                      bool strip_timing = false);
void save_experiment_report(const ExperimentReport& rep,
                            const std::filesystem::path& path);

// Plot-ready sweep CSV with columns eps,lambda,exceedance_mass,quasinorm.
void save_sweep_csv(const WeakSweep& sweep, double norm1,
                    const std::filesystem::path& path);

}  // namespace czlab::io
