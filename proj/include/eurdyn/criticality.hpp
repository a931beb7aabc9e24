#pragma once

#include <vector>

#include "eurdyn/entropy.hpp"

namespace eurdyn {

// A sampled uncertainty-sum time series. bound is the observable-pair bound
// (state-independent part); every value satisfies value >= bound - 1e-9.
struct EURTrace {
    std::vector<double> times;
    std::vector<double> values;
    double bound = 0.0;
    SystemParams params;
    ProjectiveObservable obs_r = ProjectiveObservable::x();
    ProjectiveObservable obs_q = ProjectiveObservable::z();
    InitialStateSpec initial;
};

// Long-time average diagnostic. tail_delta compares the full-horizon average with the
// half-horizon one; converged mirrors tail_delta < tolerance and is the honesty
// signal for the finite-horizon approximation of the infinite-time average.
struct WitnessResult {
    double w = 0.0;
    double horizon = 0.0;
    int n_points = 0;
    bool converged = false;
    double tail_delta = 0.0;
};

enum class BetaEstimator { RMS, MaxAbs };

// Late-time rate magnitude. The infinite-time derivative does not exist in
// oscillatory regimes; the windowed magnitude realizes the zero/nonzero dichotomy.
struct BetaResult {
    double beta = 0.0;
    double window_start = 0.0;
    double window_end = 0.0;
    BetaEstimator estimator = BetaEstimator::RMS;
};

enum class MetricKind { Witness, Beta };

const char* metric_name(MetricKind k);

// Sweep result. critical_point is the midpoint of the grid interval with the largest
// absolute first difference of the metric; critical_jump is that difference.
struct ScanResult {
    std::vector<double> grid;
    std::vector<double> metric;
    double critical_point = 0.0;
    double critical_jump = 0.0;
    MetricKind metric_kind = MetricKind::Beta;
};

// Metric settings used by scans and the bundled figures. The scan windows are wider
// than the single-point defaults on purpose: near the degeneracy the trace period
// approaches the short default window, which would make the rate phase-sensitive.
struct MetricConfig {
    double witness_horizon = 100.0;
    int witness_samples = 20001;
    double beta_start = 50.0;
    double beta_end = 150.0;
    int beta_samples = 10001;
    BetaEstimator estimator = BetaEstimator::RMS;
    double convergence_tol = 1e-3;
};

// Single-point defaults for the bare rate estimator.
inline constexpr double kBetaDefaultStart = 50.0;
inline constexpr double kBetaDefaultEnd = 60.0;
inline constexpr int kBetaDefaultSamples = 1001;

// The uncertainty sum at one instant, via the closed-form propagator plus the
// Born-rule pipeline (single source of truth for every metric below).
double eur_at(const SystemParams& system, const InitialStateSpec& initial,
              const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q, double t);

// Uniform trace on [0, t_max] with n_steps intervals (n_steps + 1 samples).
// The parallel version distributes samples across threads with per-slot writes; the
// serial twin is the reference implementation the tests compare against bit-for-bit.
EURTrace eur_trace(const SystemParams& system, const InitialStateSpec& initial,
                   const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                   double t_max, int n_steps);
EURTrace eur_trace_serial(const SystemParams& system, const InitialStateSpec& initial,
                          const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                          double t_max, int n_steps);

// Composite-trapezoid time average of the trace over [0, horizon] on n_points uniform
// samples (>= 100; pass 0 to pick a density of ~20 samples per oscillation period
// when one exists, else 2000 panels). The quadrature reduction is a serial ordered
// sum: results are identical for every thread count.
WitnessResult witness(const SystemParams& system, const InitialStateSpec& initial,
                      const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                      double horizon, int n_points, double convergence_tol = 1e-3);

// Central-difference derivative magnitude over the window [window_start, window_end]
// sampled at n_points >= 100 uniform times; RMS (default) or max-abs estimator.
BetaResult beta(const SystemParams& system, const InitialStateSpec& initial,
                const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                double window_start = kBetaDefaultStart, double window_end = kBetaDefaultEnd,
                int n_points = kBetaDefaultSamples,
                BetaEstimator estimator = BetaEstimator::RMS);

// Estimator core shared with the tests (h = uniform sample spacing).
double beta_from_samples(const std::vector<double>& values, double h, BetaEstimator estimator);

// Evaluates the chosen metric across the grid, sweeping r for the general model and
// s for the anti-symmetric one (grid strictly increasing, length >= 10). Grid points
// are independent and evaluated concurrently; the result is assembled in grid order.
ScanResult scan(const SystemParams& fixed, const std::vector<double>& grid, MetricKind kind,
                const InitialStateSpec& initial, const ProjectiveObservable& obs_r,
                const ProjectiveObservable& obs_q, const MetricConfig& cfg = {});
ScanResult scan_serial(const SystemParams& fixed, const std::vector<double>& grid,
                       MetricKind kind, const InitialStateSpec& initial,
                       const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                       const MetricConfig& cfg = {});

// Uniform grid start, start+step, ..., through stop (inclusive within fp dust).
std::vector<double> make_grid(double start, double stop, double step);

} // namespace eurdyn
