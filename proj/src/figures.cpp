#include "eurdyn/figures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>

#include "eurdyn/report.hpp"
#include "eurdyn/version.hpp"

namespace eurdyn::figures {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

namespace fs = std::filesystem;

SystemParams system_with_swept(const RunConfig& cfg, double g) {
    SystemParams sys = cfg.system();
    if (auto* gp = std::get_if<GeneralNHParams>(&sys)) gp->r = g;
    else std::get<AntiPTParams>(sys).s = g;
    return sys;
}

std::string phase_of(const SystemParams& sys) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GeneralNHParams>)
                return phase_name(spectrum_general(p).phase);
            else
                return phase_name(spectrum_antipt(p).phase);
        },
        sys);
}

C2Matrix propagator_of(const SystemParams& sys, double t) {
    return std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GeneralNHParams>) return propagator_general(p, t);
            else return propagator_antipt(p, t);
        },
        sys);
}

std::string jump_text(double jump) { return report::format_double(jump); }

FigureOutput emit_scan(const RunConfig& cfg, const fs::path& dir, const std::string& base) {
    fs::create_directories(dir);
    const ScanSpec& sp = *cfg.scan;
    const std::vector<double> grid = make_grid(sp.start, sp.stop, sp.step);
    const ScanResult res =
        scan(cfg.system(), grid, sp.metric, cfg.initial, cfg.obs_r, cfg.obs_q, cfg.metrics);

    std::vector<std::vector<std::string>> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        rows.push_back({report::format_double(grid[i]), report::format_double(res.metric[i]),
                        phase_of(system_with_swept(cfg, grid[i]))});

    FigureOutput out;
    out.critical_jump = res.critical_jump;
    const bool detected = res.critical_jump >= kTransitionFloor;
    if (detected) {
        out.critical_point = res.critical_point;
        out.summary = std::string("transition detected near ") + sp.param + " = " +
                      report::format_double(res.critical_point) + " (max adjacent jump " +
                      jump_text(res.critical_jump) + ")";
    } else {
        out.summary = "no transition detected (max adjacent jump " + jump_text(res.critical_jump) +
                      ", below " + report::format_double(kTransitionFloor) + ")";
    }

    const std::string comment = cfg.describe() + " version=" + kVersion;
    if (cfg.csv_output) {
        out.csv_path = dir / (base + ".csv");
        report::write_csv(out.csv_path, comment, {"param", "metric", "phase"}, rows);
    }
    if (cfg.svg_output) {
        report::PlotSpec plot;
        plot.title = std::string(metric_name(sp.metric)) + " across the " + sp.param + " sweep";
        plot.x_label = sp.param;
        plot.y_label = metric_name(sp.metric);
        plot.series.push_back({metric_name(sp.metric), grid, res.metric});
        if (detected) plot.vline = res.critical_point;
        out.svg_path = dir / (base + ".svg");
        report::write_svg(out.svg_path, plot);
    }
    return out;
}

FigureOutput emit_trace(const RunConfig& cfg, const fs::path& dir, const std::string& base) {
    fs::create_directories(dir);
    const SystemParams sys = cfg.system();
    const C2Vector psi0 = cfg.initial.amplitudes();

    const int n = cfg.n_steps;
    std::vector<double> times(static_cast<std::size_t>(n) + 1);
    std::vector<EURSample> samples(times.size());
    for (int i = 0; i <= n; ++i) {
        const double t = cfg.t_max * static_cast<double>(i) / static_cast<double>(n);
        times[static_cast<std::size_t>(i)] = t;
        const EvolveResult ev = evolve_normalized(propagator_of(sys, t), psi0);
        samples[static_cast<std::size_t>(i)] = eur(ev.rho, cfg.obs_r, cfg.obs_q, t);
    }

    std::vector<std::vector<std::string>> rows;
    rows.reserve(samples.size());
    std::vector<double> values(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const EURSample& s = samples[i];
        values[i] = s.eur;
        rows.push_back({report::format_double(s.t), report::format_double(s.eur),
                        report::format_double(s.h_r), report::format_double(s.h_q),
                        report::format_double(s.bound)});
    }

    FigureOutput out;
    out.summary = "trace over [0, " + report::format_double(cfg.t_max) + "] with " +
                  std::to_string(samples.size()) + " samples (" + phase_of(sys) +
                  " phase); final value " + report::format_double(values.back());

    const std::string comment = cfg.describe() + " version=" + kVersion;
    if (cfg.csv_output) {
        out.csv_path = dir / (base + ".csv");
        report::write_csv(out.csv_path, comment, {"t", "eur", "h_r", "h_q", "bound"}, rows);
    }
    if (cfg.svg_output) {
        report::PlotSpec plot;
        plot.title = "uncertainty trace (" + phase_of(sys) + " phase)";
        plot.x_label = "t";
        plot.y_label = "uncertainty (bits)";
        plot.series.push_back({"uncertainty", times, values});
        plot.series.push_back(
            {"bound", {times.front(), times.back()}, {samples[0].bound, samples[0].bound}});
        out.svg_path = dir / (base + ".svg");
        report::write_svg(out.svg_path, plot);
    }
    return out;
}

FigureOutput emit_fig1(const fs::path& dir) {
    fs::create_directories(dir);
    constexpr double kTMax = 50.0;
    constexpr int kSteps = 2000;

    struct Curve {
        const char* name;
        GeneralNHParams p;
        InitialStateSpec init;
    };
    const Curve curves[] = {
        {"hermitian", {1.0, 1.0, 1.0, 0.0}, InitialStateSpec::zero()},
        {"unbroken", {1.0, 2.0, 2.0, kHalfPi}, InitialStateSpec::plus()},
        {"broken", {2.0, 1.0, 1.0, kHalfPi}, InitialStateSpec::plus()},
        {"ep", {1.0, 1.0, 1.0, kHalfPi}, InitialStateSpec::plus()},
    };

    std::vector<double> times;
    std::vector<std::vector<double>> values;
    for (const Curve& c : curves) {
        EURTrace tr = eur_trace(SystemParams{c.p}, c.init, ProjectiveObservable::x(),
                                ProjectiveObservable::z(), kTMax, kSteps);
        if (times.empty()) times = tr.times;
        values.push_back(std::move(tr.values));
    }

    std::vector<std::vector<std::string>> rows;
    rows.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        rows.push_back({report::format_double(times[i]), report::format_double(values[0][i]),
                        report::format_double(values[1][i]), report::format_double(values[2][i]),
                        report::format_double(values[3][i])});

    std::string comment = "figure=fig1 t_max=50 n_steps=2000 obs_r=x obs_q=z";
    comment += " hermitian=(r=1 s=1 sigma=1 phi=0 initial=zero)";
    comment += " unbroken=(r=1 s=2 sigma=2 phi=" + report::format_double(kHalfPi) +
               " initial=plus)";
    comment += " broken=(r=2 s=1 sigma=1 phi=" + report::format_double(kHalfPi) +
               " initial=plus)";
    comment += " ep=(r=1 s=1 sigma=1 phi=" + report::format_double(kHalfPi) + " initial=plus)";
    comment += std::string(" version=") + kVersion;

    FigureOutput out;
    out.csv_path = dir / "fig1.csv";
    report::write_csv(out.csv_path, comment, {"t", "hermitian", "unbroken", "broken", "ep"}, rows);

    report::PlotSpec plot;
    plot.title = "uncertainty dynamics across spectral phases";
    plot.x_label = "t";
    plot.y_label = "uncertainty (bits)";
    for (std::size_t k = 0; k < 4; ++k) plot.series.push_back({curves[k].name, times, values[k]});
    out.svg_path = dir / "fig1.svg";
    report::write_svg(out.svg_path, plot);

    out.summary = "wrote 4 uncertainty traces on [0, 50] (hermitian, unbroken, broken, ep)";
    return out;
}

RunConfig scan_preset(ModelKind model, MetricKind metric, bool antipt_phi_half_pi) {
    RunConfig cfg;
    cfg.model = model;
    ScanSpec sp;
    sp.metric = metric;
    switch (model) {
    case ModelKind::PT:
        cfg.s = cfg.sigma = 2.0;
        cfg.phi = kHalfPi;
        cfg.initial = InitialStateSpec::plus();
        sp.param = "r";
        sp.start = 0.5;
        sp.stop = 3.5;
        sp.step = 0.01;
        break;
    case ModelKind::General:
        cfg.s = std::numbers::sqrt2 / 2.0;
        cfg.sigma = std::numbers::sqrt2;
        cfg.phi = kHalfPi;
        cfg.initial = InitialStateSpec::plus();
        sp.param = "r";
        sp.start = 0.2;
        sp.stop = 2.0;
        sp.step = 0.01;
        break;
    case ModelKind::AntiPT:
        cfg.lambda = 1.0;
        cfg.phi = antipt_phi_half_pi ? kHalfPi : 0.0;
        cfg.initial = InitialStateSpec::zero();
        sp.param = "s";
        sp.start = 0.2;
        sp.stop = 2.0;
        sp.step = 0.01;
        break;
    }
    cfg.scan = sp;
    return cfg;
}

} // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"fig1",  "fig2a", "fig2b", "fig3a",
                                                 "fig3b", "fig4a", "fig4b"};
    return ids;
}

FigureOutput write_figure(const std::string& id, const std::filesystem::path& out_dir,
                          bool antipt_phi_half_pi) {
    if (id == "fig1") return emit_fig1(out_dir);
    if (id == "fig2a")
        return emit_scan(scan_preset(ModelKind::PT, MetricKind::Witness, false), out_dir, id);
    if (id == "fig2b")
        return emit_scan(scan_preset(ModelKind::General, MetricKind::Witness, false), out_dir, id);
    if (id == "fig3a")
        return emit_scan(scan_preset(ModelKind::PT, MetricKind::Beta, false), out_dir, id);
    if (id == "fig3b")
        return emit_scan(scan_preset(ModelKind::General, MetricKind::Beta, false), out_dir, id);
    if (id == "fig4a")
        return emit_scan(scan_preset(ModelKind::AntiPT, MetricKind::Beta, antipt_phi_half_pi),
                         out_dir, id);
    if (id == "fig4b")
        return emit_scan(scan_preset(ModelKind::AntiPT, MetricKind::Witness, antipt_phi_half_pi),
                         out_dir, id);
    throw std::invalid_argument("unknown figure id '" + id + "' (expected one of: fig1, fig2a, "
                                "fig2b, fig3a, fig3b, fig4a, fig4b)");
}

FigureOutput run_config(const RunConfig& cfg, const std::filesystem::path& fallback_out) {
    const fs::path dir = cfg.output_dir ? *cfg.output_dir : fallback_out;
    if (cfg.scan) return emit_scan(cfg, dir, "scan");
    return emit_trace(cfg, dir, "trace");
}

} // namespace eurdyn::figures
