#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "eurdyn/figures.hpp"
#include "eurdyn/report.hpp"
#include "eurdyn/runconfig.hpp"
#include "eurdyn/validate.hpp"
#include "eurdyn/version.hpp"

namespace {

// Exit codes: 0 success, 1 configuration/usage error, 2 output I/O error,
// 3 validation failure.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;

void print_output(const eurdyn::figures::FigureOutput& out) {
    if (!out.csv_path.empty()) std::printf("wrote %s\n", out.csv_path.string().c_str());
    if (!out.svg_path.empty()) std::printf("wrote %s\n", out.svg_path.string().c_str());
    std::printf("%s\n", out.summary.c_str());
}

int run_validate(bool full) {
    const eurdyn::ValidationReport report = eurdyn::run_validation(full);
    std::printf("%-42s %12s %10s  %s\n", "check", "worst", "tol", "status");
    for (const eurdyn::CheckResult& c : report.checks)
        std::printf("%-42s %12.3e %10.1e  %s\n", c.name.c_str(), c.worst, c.tol,
                    c.pass ? "PASS" : "FAIL");
    if (report.all_pass) {
        std::printf("all %zu checks passed\n", report.checks.size());
        return kExitOk;
    }
    std::size_t failed = 0;
    for (const eurdyn::CheckResult& c : report.checks)
        if (!c.pass) ++failed;
    std::printf("%zu of %zu checks FAILED\n", failed, report.checks.size());
    return kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("uncertainty-relation dynamics toolkit for two-level "
                             "non-Hermitian systems (version ") +
                 eurdyn::kVersion + ")"};
    app.require_subcommand(1);

    std::string out_dir = "out";
    int threads = 0;
    app.add_option("--out", out_dir, "output directory (default: ./out)");
    app.add_option("--threads", threads,
                   "worker threads for sampling and scans (0 = all available)");

    std::string figure_id;
    bool phi_half_pi = false;
    CLI::App* fig = app.add_subcommand("figure", "render a built-in figure preset");
    fig->add_option("id", figure_id, "one of: fig1, fig2a, fig2b, fig3a, fig3b, fig4a, fig4b")
        ->required();
    fig->add_flag("--phi-half-pi", phi_half_pi,
                  "anti-symmetric presets (fig4a/fig4b): use phi = pi/2 instead of 0");

    std::string config_path;
    CLI::App* run = app.add_subcommand("run", "execute a key=value config file");
    run->add_option("config", config_path, "path to the config file")->required();

    bool full = false;
    CLI::App* validate = app.add_subcommand("validate", "run the built-in self-checks");
    validate->add_flag("--full", full, "acceptance-grade settings (slower)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif

    try {
        if (fig->parsed()) {
            print_output(eurdyn::figures::write_figure(figure_id, out_dir, phi_half_pi));
            return kExitOk;
        }
        if (run->parsed()) {
            const eurdyn::RunConfig cfg = eurdyn::parse_config_file(config_path);
            print_output(eurdyn::figures::run_config(cfg, out_dir));
            return kExitOk;
        }
        return run_validate(full);
    } catch (const eurdyn::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const eurdyn::report::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
}
