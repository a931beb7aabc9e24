#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "eurdyn/criticality.hpp"

namespace eurdyn {

enum class ModelKind { General, PT, AntiPT };

const char* model_name(ModelKind m);

// Parameter sweep request: which parameter varies (r for general/pt, s for antipt),
// the inclusive grid, and the long-time metric evaluated at every grid point.
struct ScanSpec {
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    MetricKind metric = MetricKind::Witness;
};

// Config parse/validation failure. line is the 1-based input line the problem was
// detected on (0 when it concerns the file as a whole). what() includes the line.
struct ConfigError : std::runtime_error {
    int line;
    explicit ConfigError(const std::string& msg, int line_number = 0)
        : std::runtime_error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + msg
                                             : msg),
          line(line_number) {}
};

// A fully validated run description, either a single time trace (t_max/n_steps) or a
// parameter scan — never both. Defaults are chosen per model: initial state |+> for
// general/pt, |0> for antipt.
struct RunConfig {
    ModelKind model = ModelKind::General;
    double r = 1.0;
    double s = 1.0;
    double sigma = 1.0;
    double phi = 0.0;
    double lambda = 1.0;
    InitialStateSpec initial = InitialStateSpec::plus();
    ProjectiveObservable obs_r = ProjectiveObservable::x();
    ProjectiveObservable obs_q = ProjectiveObservable::z();

    double t_max = 50.0;
    int n_steps = 2000;
    std::optional<ScanSpec> scan; // engaged => scan mode, trace keys rejected

    std::optional<std::filesystem::path> output_dir; // unset => caller's default
    bool csv_output = true;
    bool svg_output = true;

    MetricConfig metrics; // witness/beta settings used in scan mode

    SystemParams system() const; // the model at the fixed parameter values
    std::string describe() const; // single-line key=value summary (used in CSV comments)
};

// Accepted keys (flat key=value lines, '#' starts a comment, blank lines ignored):
//   model            general | pt | antipt
//   r, s, sigma, phi numbers (sigma/r general+pt only; pt requires sigma == s)
//   lambda           number (antipt only)
//   initial          zero | one | plus | angle:<number>
//   obs_r, obs_q     x | y | z | <n1>,<n2>,<n3>
//   t_max, n_steps   trace mode only
//   scan_param       r | s (must match the model's swept parameter)
//   scan_start, scan_stop, scan_step   numbers
//   scan_metric      witness | beta
//   output_dir       path
//   output_formats   comma list drawn from csv, svg
//   witness_horizon, witness_points, beta_window_start, beta_window_end,
//   beta_points, beta_estimator (rms | max)   scan mode only
// Unknown keys, duplicate keys, malformed values, and keys that do not apply to the
// chosen model or mode are all reported as ConfigError with the offending line.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::filesystem::path& path);

} // namespace eurdyn
