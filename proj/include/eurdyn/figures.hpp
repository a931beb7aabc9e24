#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eurdyn/runconfig.hpp"

namespace eurdyn::figures {

// Smallest adjacent-point metric jump that counts as a detected transition; scans of
// gapless parameter ranges stay far below it, genuine transitions far above.
inline constexpr double kTransitionFloor = 1e-4;

struct FigureOutput {
    std::filesystem::path csv_path; // empty when CSV output was not requested
    std::filesystem::path svg_path; // empty when SVG output was not requested
    std::optional<double> critical_point; // set when a transition was detected
    std::optional<double> critical_jump;  // largest adjacent-point metric change (scans)
    std::string summary;                  // one-line human-readable outcome
};

// Identifiers accepted by write_figure, in canonical order:
// fig1 (phase-by-phase uncertainty traces), fig2a/fig2b (witness scans, symmetric and
// asymmetric coupling), fig3a/fig3b (rate scans for the same two families),
// fig4a/fig4b (anti-symmetric model: rate scan and witness scan over the coupling).
const std::vector<std::string>& figure_ids();

// Renders one of the built-in presets into out_dir (created if needed), writing
// <id>.csv and <id>.svg. antipt_phi_half_pi switches the anti-symmetric presets
// (fig4a/fig4b) from phi = 0 to phi = pi/2, where the gap never closes and no
// transition should be detected. Throws std::invalid_argument for unknown ids.
FigureOutput write_figure(const std::string& id, const std::filesystem::path& out_dir,
                          bool antipt_phi_half_pi = false);

// Executes a parsed configuration (trace or scan mode), writing trace.csv/trace.svg
// or scan.csv/scan.svg. fallback_out is used when the config has no output_dir.
FigureOutput run_config(const RunConfig& cfg, const std::filesystem::path& fallback_out);

} // namespace eurdyn::figures
