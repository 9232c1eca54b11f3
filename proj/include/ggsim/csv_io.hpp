#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ggsim/experiments.hpp"

namespace ggsim {

/// Formats a double with 17 significant digits (decimal round-trip safe).
std::string format_full(double x);

/// Writes one CSV per snapshot (`x,u,v[,w]`, one row per cell), the per-step
/// speed series (`t,s`), a plain-text report with the derived metrics, and
/// for exact-comparison runs an `exact_vs_numeric.csv`. Files are byte-stable
/// across runs of the same spec. Returns the paths written.
std::vector<std::filesystem::path> write_snapshots(const ExperimentResult& result,
                                                   const std::filesystem::path& dir);

std::filesystem::path write_sweep_csv(const std::vector<SweepPoint>& points,
                                      const std::string& parameter_name,
                                      const std::filesystem::path& dir);

std::filesystem::path write_epsilon_csv(const std::vector<EpsilonPoint>& points,
                                        const std::filesystem::path& dir);

std::filesystem::path write_refinement_csv(const std::vector<RefinementPoint>& points,
                                           const std::filesystem::path& dir);

/// Companion gnuplot script plotting the emitted CSVs.
std::filesystem::path write_gnuplot_script(const ExperimentResult& result,
                                           const std::vector<std::filesystem::path>& files,
                                           const std::filesystem::path& dir);

} // namespace ggsim
