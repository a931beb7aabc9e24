#include "eurdyn/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>
#include <vector>

#include "eurdyn/criticality.hpp"
#include "eurdyn/oracle.hpp"

namespace eurdyn {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

C2Matrix build_of(const SystemParams& sys) {
    return std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GeneralNHParams>) return build_general(p);
            else return build_antipt(p);
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

C2Matrix rho_of_state(const C2Vector& psi) {
    const double n2 = std::norm(psi.a0) + std::norm(psi.a1);
    C2Matrix rho;
    rho.m00 = psi.a0 * std::conj(psi.a0) / n2;
    rho.m01 = psi.a0 * std::conj(psi.a1) / n2;
    rho.m10 = psi.a1 * std::conj(psi.a0) / n2;
    rho.m11 = psi.a1 * std::conj(psi.a1) / n2;
    return rho;
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

struct TestSystem {
    SystemParams sys;
    InitialStateSpec init;
};

std::vector<TestSystem> standard_systems() {
    return {
        {GeneralNHParams{1.0, 1.0, 1.0, 0.0}, InitialStateSpec::zero()},
        {GeneralNHParams{1.0, 2.0, 2.0, kHalfPi}, InitialStateSpec::plus()},
        {GeneralNHParams{2.0, 1.0, 1.0, kHalfPi}, InitialStateSpec::plus()},
        {GeneralNHParams{1.0, 1.0, 1.0, kHalfPi}, InitialStateSpec::plus()},
        {GeneralNHParams{0.7, std::numbers::sqrt2 / 2.0, std::numbers::sqrt2, kHalfPi},
         InitialStateSpec::plus()},
        {AntiPTParams{1.0, 2.0, 0.0}, InitialStateSpec::zero()},
        {AntiPTParams{1.0, 0.5, 0.0}, InitialStateSpec::zero()},
        {AntiPTParams{1.0, 1.0, 0.0}, InitialStateSpec::zero()},
    };
}

CheckResult check_integrator_agreement(bool full) {
    CheckResult res{"integrator-agreement", false, 0.0, 1e-6};
    const auto obs_r = ProjectiveObservable::x();
    const auto obs_q = ProjectiveObservable::z();
    const std::vector<TestSystem> systems = {
        {GeneralNHParams{1.0, 2.0, 2.0, kHalfPi}, InitialStateSpec::plus()},
        {GeneralNHParams{2.0, 1.0, 1.0, kHalfPi}, InitialStateSpec::plus()},
        {GeneralNHParams{1.0, 1.0, 1.0, kHalfPi}, InitialStateSpec::plus()},
        {AntiPTParams{1.0, 2.0, 0.0}, InitialStateSpec::zero()},
    };
    oracle::IntegratorConfig cfg;
    cfg.dt = full ? 1e-4 : 1e-3;
    cfg.t_max = full ? 10.0 : 5.0;
    const int samples = full ? 101 : 51;

    for (const TestSystem& ts : systems) {
        const auto states = oracle::integrate_schrodinger(build_of(ts.sys), ts.init.amplitudes(),
                                                          cfg);
        const long long n = static_cast<long long>(states.size()) - 1;
        const double h = cfg.t_max / static_cast<double>(n);
        const long long stride = n / (samples - 1);
        for (int i = 0; i < samples; ++i) {
            const long long k = i * stride;
            const double t = h * static_cast<double>(k);
            const double via_ode =
                eur(rho_of_state(states[static_cast<std::size_t>(k)]), obs_r, obs_q, t).eur;
            const double via_closed = eur_at(ts.sys, ts.init, obs_r, obs_q, t);
            res.worst = std::max(res.worst, rel_diff(via_ode, via_closed));
        }
    }
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult check_similarity_unitary(bool full) {
    CheckResult res{"similarity-unitary-match", false, 0.0, 1e-9};
    const GeneralNHParams p{1.0, 2.0, 2.0, kHalfPi};
    const HermitianEquivalent he = hermitian_map(p);
    const C2Matrix eta_inv = inverse2(he.eta);
    const int n = full ? 101 : 21;
    for (int i = 0; i < n; ++i) {
        const double t = 10.0 * static_cast<double>(i) / static_cast<double>(n - 1);
        const C2Matrix mapped = he.eta * propagator_general(p, t) * eta_inv;
        const C2Matrix diff = mapped - unitary_equivalent(p, t);
        res.worst = std::max(res.worst, diff.max_abs());
    }
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult check_plus_density(bool full) {
    CheckResult res{"plus-state-density-closed-form", false, 0.0, 1e-10};
    const std::vector<GeneralNHParams> sets = {
        {1.0, 2.0, 2.0, kHalfPi},
        {2.0, 1.0, 1.0, kHalfPi},
        {1.0, 1.0, 1.0, kHalfPi},
        {0.7, std::numbers::sqrt2 / 2.0, std::numbers::sqrt2, kHalfPi},
        {1.1, 1.3, 0.6, 0.8},
    };
    const int n = full ? 20 : 10;
    const double t_max = full ? 10.0 : 5.0;
    const C2Vector plus = InitialStateSpec::plus().amplitudes();
    for (const auto& p : sets) {
        for (int i = 0; i < n; ++i) {
            const double t = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
            const C2Matrix direct = rho_plus_closed(p, t);
            const C2Matrix via_prop = evolve_normalized(propagator_general(p, t), plus).rho;
            res.worst = std::max(res.worst, (direct - via_prop).max_abs());
        }
    }
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult check_eigenbasis_probability(bool full) {
    CheckResult res{"eigenbasis-probability-closed-form", false, 0.0, 1e-9};
    const std::vector<GeneralNHParams> sets = {
        {1.0, 2.0, 2.0, kHalfPi}, {2.0, 1.0, 1.0, kHalfPi},
        {0.7, std::numbers::sqrt2 / 2.0, std::numbers::sqrt2, kHalfPi},
        {1.1, 1.3, 0.6, 0.8},     {0.5, 1.0, 1.0, 1.2},
        {1.5, 0.8, 0.9, 2.0},     {3.0, 1.0, 1.0, kHalfPi},
        {1.0, 3.0, 0.5, 0.3},
    };
    const std::vector<double> thetas = {0.0, 1.0, kHalfPi, 2.5, std::numbers::pi};
    const std::vector<ProjectiveObservable> axes = {
        ProjectiveObservable::x(), ProjectiveObservable::y(), ProjectiveObservable::z(),
        ProjectiveObservable(0.36, 0.48, 0.8)};
    const int nt = full ? 5 : 3;
    const std::size_t n_sets = full ? sets.size() : 3;
    const std::size_t n_thetas = full ? thetas.size() : 3;
    const std::size_t n_axes = full ? axes.size() : 2;
    for (std::size_t si = 0; si < n_sets; ++si) {
        for (std::size_t ti = 0; ti < n_thetas; ++ti) {
            const InitialStateSpec init = InitialStateSpec::angle(thetas[ti]);
            for (std::size_t ai = 0; ai < n_axes; ++ai) {
                for (int k = 0; k < nt; ++k) {
                    const double t = 8.0 * static_cast<double>(k) / static_cast<double>(nt - 1);
                    const double closed = prob_closed_general(sets[si], init, axes[ai], t);
                    const EvolveResult ev = evolve_normalized(propagator_general(sets[si], t),
                                                              init.amplitudes());
                    const double direct = measure(ev.rho, axes[ai]).p_plus;
                    res.worst = std::max(res.worst, std::abs(closed - direct));
                }
            }
        }
    }
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult check_degeneracy_probability(bool full) {
    CheckResult res{"degeneracy-probability-closed-form", false, 0.0, 1e-9};
    // Symmetric-coupling degeneracy family: s = sigma = r sin(phi).
    std::vector<GeneralNHParams> sets;
    for (const auto& [r, phi] : std::vector<std::pair<double, double>>{
             {1.0, kHalfPi}, {2.0, std::numbers::pi / 6.0}, {1.5, 1.0}}) {
        const double c = r * std::sin(phi);
        sets.push_back(GeneralNHParams{r, c, c, phi});
    }
    const std::vector<double> thetas = {0.0, 0.7, kHalfPi, 2.2};
    const std::vector<ProjectiveObservable> axes = {
        ProjectiveObservable::x(), ProjectiveObservable::y(), ProjectiveObservable::z()};
    const int nt = full ? 10 : 5;
    const std::size_t n_thetas = full ? thetas.size() : 2;
    for (const auto& p : sets) {
        for (std::size_t ti = 0; ti < n_thetas; ++ti) {
            const double theta = thetas[ti];
            // This closed form parameterizes the state as (cos(theta/2), sin(theta/2)).
            const C2Vector psi0{std::cos(theta / 2.0), std::sin(theta / 2.0)};
            for (const auto& obs : axes) {
                for (int k = 0; k < nt; ++k) {
                    const double t = 6.0 * static_cast<double>(k) / static_cast<double>(nt - 1);
                    const double closed = prob_closed_ep(p, theta, obs, t);
                    const EvolveResult ev = evolve_normalized(propagator_general(p, t), psi0);
                    const double direct = measure(ev.rho, obs).p_plus;
                    res.worst = std::max(res.worst, std::abs(closed - direct));
                }
            }
        }
    }
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult check_antipt_probability(bool full) {
    CheckResult res{"anti-symmetric-probability-closed-form", false, 0.0, 1e-9};
    const std::vector<AntiPTParams> sets = {
        {1.0, 2.0, 0.0}, {1.0, 0.5, 0.0}, {1.0, 1.0, 0.0}, {1.0, 2.0, kHalfPi}, {0.8, 1.3, 0.4}};
    const int nt = full ? 25 : 10;
    const double t_max = full ? 10.0 : 5.0;
    const C2Vector zero = InitialStateSpec::zero().amplitudes();
    for (const auto& p : sets) {
        for (int k = 0; k < nt; ++k) {
            const double t = t_max * static_cast<double>(k) / static_cast<double>(nt - 1);
            const auto [px, pz] = prob_closed_antipt(p, t);
            const EvolveResult ev = evolve_normalized(propagator_antipt(p, t), zero);
            const double dx = std::abs(px.p_plus - measure(ev.rho, ProjectiveObservable::x()).p_plus);
            const double dz = std::abs(pz.p_plus - measure(ev.rho, ProjectiveObservable::z()).p_plus);
            res.worst = std::max({res.worst, dx, dz});
        }
    }
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult check_uncertainty_floor(bool full) {
    CheckResult res{"uncertainty-floor", false, -1.0, 1e-9};
    const auto obs_r = ProjectiveObservable::x();
    const auto obs_q = ProjectiveObservable::z();
    const int n_steps = full ? 2000 : 500;
    double worst_violation = -std::numeric_limits<double>::infinity();
    for (const TestSystem& ts : standard_systems()) {
        const EURTrace tr = eur_trace(ts.sys, ts.init, obs_r, obs_q, 50.0, n_steps);
        for (const double v : tr.values)
            worst_violation = std::max(worst_violation, tr.bound - v);
    }
    res.worst = worst_violation; // positive values mean the floor was crossed
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult check_determinant(bool full) {
    CheckResult res{"propagator-determinant", false, 0.0, 1e-10};
    const int n = full ? 31 : 11;
    for (const TestSystem& ts : standard_systems()) {
        const cplx tr = build_of(ts.sys).trace();
        for (int i = 0; i < n; ++i) {
            // Window chosen so the determinant's cancellation of exponentially large
            // entries stays well above the absolute tolerance's noise floor.
            const double t = 3.0 * static_cast<double>(i) / static_cast<double>(n - 1);
            const cplx det = propagator_of(ts.sys, t).det();
            const cplx expected = std::exp(cplx(0.0, -1.0) * tr * t);
            res.worst = std::max(res.worst, std::abs(det - expected));
        }
    }
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult check_trace_purity(bool full) {
    CheckResult res{"density-trace-purity", false, 0.0, 1e-12};
    const int n = full ? 21 : 11;
    for (const TestSystem& ts : standard_systems()) {
        for (int i = 0; i < n; ++i) {
            const double t = 10.0 * static_cast<double>(i) / static_cast<double>(n - 1);
            const C2Matrix rho =
                evolve_normalized(propagator_of(ts.sys, t), ts.init.amplitudes()).rho;
            const double trace_err = std::abs(rho.trace() - cplx(1.0));
            const double purity_err = std::abs((rho * rho).trace() - cplx(1.0));
            res.worst = std::max({res.worst, trace_err, purity_err});
        }
    }
    res.pass = res.worst <= res.tol;
    return res;
}

} // namespace

ValidationReport run_validation(bool full) {
    ValidationReport report;
    report.checks.push_back(check_integrator_agreement(full));
    report.checks.push_back(check_similarity_unitary(full));
    report.checks.push_back(check_plus_density(full));
    report.checks.push_back(check_eigenbasis_probability(full));
    report.checks.push_back(check_degeneracy_probability(full));
    report.checks.push_back(check_antipt_probability(full));
    report.checks.push_back(check_uncertainty_floor(full));
    report.checks.push_back(check_determinant(full));
    report.checks.push_back(check_trace_purity(full));
    report.all_pass = true;
    for (const CheckResult& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

} // namespace eurdyn
