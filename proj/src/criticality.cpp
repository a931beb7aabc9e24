#include "eurdyn/criticality.hpp"

#include <cmath>
#include <stdexcept>

namespace eurdyn {

namespace {

C2Matrix propagator_of(const SystemParams& system, double t) {
    if (const auto* g = std::get_if<GeneralNHParams>(&system)) return propagator_general(*g, t);
    return propagator_antipt(std::get<AntiPTParams>(system), t);
}

SpectralData spectrum_of(const SystemParams& system) {
    if (const auto* g = std::get_if<GeneralNHParams>(&system)) return spectrum_general(*g);
    return spectrum_antipt(std::get<AntiPTParams>(system));
}

// Samples the uncertainty sum at the given times into a fresh vector; per-slot writes
// keep the result independent of scheduling.
std::vector<double> sample_eur(const SystemParams& system, const InitialStateSpec& initial,
                               const ProjectiveObservable& obs_r,
                               const ProjectiveObservable& obs_q,
                               const std::vector<double>& times, bool parallel) {
    std::vector<double> values(times.size());
    const long long n = static_cast<long long>(times.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < n; ++i)
            values[static_cast<size_t>(i)] =
                eur_at(system, initial, obs_r, obs_q, times[static_cast<size_t>(i)]);
    } else {
        for (long long i = 0; i < n; ++i)
            values[static_cast<size_t>(i)] =
                eur_at(system, initial, obs_r, obs_q, times[static_cast<size_t>(i)]);
    }
    return values;
}

std::vector<double> uniform_times(double t0, double t1, int n_samples) {
    std::vector<double> t(static_cast<size_t>(n_samples));
    const double span = t1 - t0;
    for (int i = 0; i < n_samples; ++i)
        t[static_cast<size_t>(i)] = t0 + span * static_cast<double>(i) /
                                             static_cast<double>(n_samples - 1);
    return t;
}

EURTrace trace_impl(const SystemParams& system, const InitialStateSpec& initial,
                    const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                    double t_max, int n_steps, bool parallel) {
    if (!(t_max > 0.0)) throw std::invalid_argument("eur_trace: t_max must be > 0");
    if (n_steps < 2) throw std::invalid_argument("eur_trace: n_steps must be >= 2");
    EURTrace out;
    out.params = system;
    out.obs_r = obs_r;
    out.obs_q = obs_q;
    out.initial = initial;
    out.bound = mu_bound(obs_r, obs_q);
    out.times = uniform_times(0.0, t_max, n_steps + 1);
    out.values = sample_eur(system, initial, obs_r, obs_q, out.times, parallel);
    return out;
}

// Uniform-grid composite trapezoid over samples [0, last].
double trapezoid_prefix(const std::vector<double>& v, double h, size_t last) {
    double acc = 0.5 * v[0];
    for (size_t i = 1; i < last; ++i) acc += v[i]; // serial ordered: deterministic
    acc += 0.5 * v[last];
    return acc * h / (h * static_cast<double>(last));
}

WitnessResult witness_impl(const SystemParams& system, const InitialStateSpec& initial,
                           const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                           double horizon, int n_points, double convergence_tol, bool parallel) {
    if (!(horizon > 0.0)) throw std::invalid_argument("witness: horizon must be > 0");
    if (n_points == 0) {
        // Density heuristic: ~20 samples per oscillation period when one exists.
        const SpectralData sp = spectrum_of(system);
        n_points = sp.period ? static_cast<int>(std::ceil(20.0 * horizon / *sp.period)) + 1
                             : 2001;
        n_points = std::max(n_points, 101);
    }
    if (n_points < 100) throw std::invalid_argument("witness: n_points must be >= 100");

    const std::vector<double> times = uniform_times(0.0, horizon, n_points);
    const std::vector<double> v = sample_eur(system, initial, obs_r, obs_q, times, parallel);
    const double h = horizon / static_cast<double>(n_points - 1);
    const size_t last = static_cast<size_t>(n_points - 1);
    const size_t half = last / 2;

    WitnessResult out;
    out.horizon = horizon;
    out.n_points = n_points;
    out.w = trapezoid_prefix(v, h, last);
    out.tail_delta = std::abs(out.w - trapezoid_prefix(v, h, half));
    out.converged = out.tail_delta < convergence_tol;
    return out;
}

BetaResult beta_impl(const SystemParams& system, const InitialStateSpec& initial,
                     const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                     double window_start, double window_end, int n_points,
                     BetaEstimator estimator, bool parallel) {
    if (!(0.0 < window_start && window_start < window_end))
        throw std::invalid_argument("beta: require 0 < window_start < window_end");
    if (n_points < 100) throw std::invalid_argument("beta: n_points must be >= 100");

    const std::vector<double> t = uniform_times(window_start, window_end, n_points);
    const std::vector<double> v = sample_eur(system, initial, obs_r, obs_q, t, parallel);
    const double h = (window_end - window_start) / static_cast<double>(n_points - 1);

    BetaResult out;
    out.window_start = window_start;
    out.window_end = window_end;
    out.estimator = estimator;
    out.beta = beta_from_samples(v, h, estimator);
    return out;
}

ScanResult scan_impl(const SystemParams& fixed, const std::vector<double>& grid,
                     MetricKind kind, const InitialStateSpec& initial,
                     const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                     const MetricConfig& cfg, bool parallel) {
    if (grid.size() < 10) throw std::invalid_argument("scan: grid must have at least 10 points");
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("scan: grid must be strictly increasing");

    auto system_at = [&](double g) -> SystemParams {
        if (const auto* gp = std::get_if<GeneralNHParams>(&fixed)) {
            GeneralNHParams q = *gp;
            q.r = g; // the general family sweeps the gain parameter
            return q;
        }
        AntiPTParams q = std::get<AntiPTParams>(fixed);
        q.s = g; // the anti-symmetric family sweeps the coupling
        return q;
    };
    auto metric_at = [&](double g) -> double {
        const SystemParams sys = system_at(g);
        // Inner sampling stays serial inside a parallel scan (nested parallelism is
        // off by default); in the serial reference everything is serial.
        if (kind == MetricKind::Witness)
            return witness_impl(sys, initial, obs_r, obs_q, cfg.witness_horizon,
                                cfg.witness_samples, cfg.convergence_tol, parallel)
                .w;
        return beta_impl(sys, initial, obs_r, obs_q, cfg.beta_start, cfg.beta_end,
                         cfg.beta_samples, cfg.estimator, parallel)
            .beta;
    };

    ScanResult out;
    out.grid = grid;
    out.metric.assign(grid.size(), 0.0);
    out.metric_kind = kind;
    const long long n = static_cast<long long>(grid.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < n; ++i)
            out.metric[static_cast<size_t>(i)] = metric_at(grid[static_cast<size_t>(i)]);
    } else {
        for (long long i = 0; i < n; ++i)
            out.metric[static_cast<size_t>(i)] = metric_at(grid[static_cast<size_t>(i)]);
    }

    size_t k = 0;
    double best = -1.0;
    for (size_t i = 0; i + 1 < out.metric.size(); ++i) {
        const double jump = std::abs(out.metric[i + 1] - out.metric[i]);
        if (jump > best) { // strict: the first maximum wins on ties (deterministic)
            best = jump;
            k = i;
        }
    }
    out.critical_point = 0.5 * (grid[k] + grid[k + 1]);
    out.critical_jump = best;
    return out;
}

} // namespace

const char* metric_name(MetricKind k) {
    return k == MetricKind::Witness ? "witness" : "beta";
}

double eur_at(const SystemParams& system, const InitialStateSpec& initial,
              const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q, double t) {
    const EvolveResult ev = evolve_normalized(propagator_of(system, t), initial.amplitudes());
    return eur(ev.rho, obs_r, obs_q, t).eur;
}

EURTrace eur_trace(const SystemParams& system, const InitialStateSpec& initial,
                   const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                   double t_max, int n_steps) {
    return trace_impl(system, initial, obs_r, obs_q, t_max, n_steps, true);
}

EURTrace eur_trace_serial(const SystemParams& system, const InitialStateSpec& initial,
                          const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                          double t_max, int n_steps) {
    return trace_impl(system, initial, obs_r, obs_q, t_max, n_steps, false);
}

WitnessResult witness(const SystemParams& system, const InitialStateSpec& initial,
                      const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                      double horizon, int n_points, double convergence_tol) {
    return witness_impl(system, initial, obs_r, obs_q, horizon, n_points, convergence_tol, true);
}

double beta_from_samples(const std::vector<double>& values, double h, BetaEstimator estimator) {
    if (values.size() < 3 || !(h > 0.0))
        throw std::invalid_argument("beta_from_samples: need >= 3 samples and h > 0");
    double acc = 0.0;
    for (size_t i = 1; i + 1 < values.size(); ++i) {
        const double d = (values[i + 1] - values[i - 1]) / (2.0 * h);
        acc = estimator == BetaEstimator::RMS ? acc + d * d : std::max(acc, std::abs(d));
    }
    if (estimator == BetaEstimator::RMS)
        return std::sqrt(acc / static_cast<double>(values.size() - 2));
    return acc;
}

BetaResult beta(const SystemParams& system, const InitialStateSpec& initial,
                const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                double window_start, double window_end, int n_points, BetaEstimator estimator) {
    return beta_impl(system, initial, obs_r, obs_q, window_start, window_end, n_points,
                     estimator, true);
}

ScanResult scan(const SystemParams& fixed, const std::vector<double>& grid, MetricKind kind,
                const InitialStateSpec& initial, const ProjectiveObservable& obs_r,
                const ProjectiveObservable& obs_q, const MetricConfig& cfg) {
    return scan_impl(fixed, grid, kind, initial, obs_r, obs_q, cfg, true);
}

ScanResult scan_serial(const SystemParams& fixed, const std::vector<double>& grid,
                       MetricKind kind, const InitialStateSpec& initial,
                       const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                       const MetricConfig& cfg) {
    return scan_impl(fixed, grid, kind, initial, obs_r, obs_q, cfg, false);
}

std::vector<double> make_grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("make_grid: step must be > 0");
    if (!(stop > start)) throw std::invalid_argument("make_grid: stop must exceed start");
    const int n = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = start + step * i;
    return g;
}

} // namespace eurdyn
