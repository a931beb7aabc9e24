#include "eurdyn/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eurdyn {

namespace {

constexpr double kDensityTol = 1e-8; // rejection threshold for non-density inputs
constexpr double kClampTol = 1e-10;  // tolerated floating dust outside [0,1]

double clamp_probability(double p, const char* who) {
    if (p < 0.0) {
        if (p < -kClampTol)
            throw std::domain_error(std::string(who) + ": probability below 0 beyond tolerance");
        return 0.0;
    }
    if (p > 1.0) {
        if (p > 1.0 + kClampTol)
            throw std::domain_error(std::string(who) + ": probability above 1 beyond tolerance");
        return 1.0;
    }
    return p;
}

void validate_density(const C2Matrix& rho, const char* who) {
    if (!rho.finite()) throw std::invalid_argument(std::string(who) + ": non-finite input");
    if (std::abs(rho.trace() - cplx(1.0, 0.0)) > kDensityTol)
        throw std::invalid_argument(std::string(who) + ": trace deviates from 1 beyond 1e-8");
    const double herm = std::max({std::abs(rho.m01 - std::conj(rho.m10)),
                                  std::abs(rho.m00.imag()), std::abs(rho.m11.imag())});
    if (herm > kDensityTol)
        throw std::invalid_argument(std::string(who) + ": Hermiticity violated beyond 1e-8");
}

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

double binary_entropy(double p) { return entropy_term(p) + entropy_term(1.0 - p); }

} // namespace

ProjectiveObservable::ProjectiveObservable(double x, double y, double z) {
    const double nrm = std::sqrt(x * x + y * y + z * z);
    if (!(nrm > 1e-12))
        throw std::invalid_argument("ProjectiveObservable: direction vector is ~zero");
    n1 = x / nrm;
    n2 = y / nrm;
    n3 = z / nrm;
}

C2Matrix projector(const ProjectiveObservable& obs) {
    return {cplx(0.5 * (1.0 + obs.n3), 0.0), 0.5 * cplx(obs.n1, -obs.n2),
            0.5 * cplx(obs.n1, obs.n2), cplx(0.5 * (1.0 - obs.n3), 0.0)};
}

ProbabilityPair measure(const C2Matrix& rho, const ProjectiveObservable& obs) {
    validate_density(rho, "measure");
    const double p = clamp_probability((projector(obs) * rho).trace().real(), "measure");
    return {p, 1.0 - p};
}

double shannon_entropy(const ProbabilityPair& p) {
    return entropy_term(p.p_plus) + entropy_term(p.p_minus);
}

double von_neumann_entropy(const C2Matrix& rho) {
    validate_density(rho, "von_neumann_entropy");
    // Eigenvalues of a unit-trace 2x2 density: (1 +- sqrt(1 - 4 det))/2.
    const double d = std::max(0.0, 1.0 - 4.0 * rho.det().real());
    const double lam = clamp_probability(0.5 * (1.0 + std::sqrt(d)), "von_neumann_entropy");
    return binary_entropy(lam);
}

double mu_bound(const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q) {
    const double dot =
        std::abs(obs_r.n1 * obs_q.n1 + obs_r.n2 * obs_q.n2 + obs_r.n3 * obs_q.n3);
    // c^2 = (1 + |n.m|)/2 is the max squared eigenvector overlap of the two pairs.
    return -std::log2(0.5 * (1.0 + std::min(1.0, dot)));
}

double mu_bound(const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                const C2Matrix& rho) {
    return mu_bound(obs_r, obs_q) + von_neumann_entropy(rho);
}

EURSample eur(const C2Matrix& rho, const ProjectiveObservable& obs_r,
              const ProjectiveObservable& obs_q, double t) {
    EURSample out;
    out.t = t;
    out.h_r = shannon_entropy(measure(rho, obs_r));
    out.h_q = shannon_entropy(measure(rho, obs_q));
    out.eur = out.h_r + out.h_q;
    out.bound = mu_bound(obs_r, obs_q, rho);
    return out;
}

double prob_closed_general(const GeneralNHParams& p, const InitialStateSpec& state,
                           const ProjectiveObservable& obs, double t) {
    const SpectralData sp = spectrum_general(p);
    if (sp.phase == PhaseClass::ExceptionalPoint)
        throw std::invalid_argument(
            "prob_closed_general: sec of the mixing angle diverges on the degeneracy set");
    if (!(p.s > 0.0 && p.sigma > 0.0))
        throw std::invalid_argument("prob_closed_general: requires s > 0 and sigma > 0");

    const double root = std::sqrt(p.s * p.sigma);
    const cplx sin_th(p.r * std::sin(p.phi) / root, 0.0);
    const cplx cos_th = sp.omega / root; // branch-consistent with the principal omega
    const cplx i(0.0, 1.0);
    const cplx eiT = cos_th + i * sin_th, emT = cos_th - i * sin_th;
    const cplx sec = 1.0 / cos_th;
    const double k2 = std::sqrt(p.s / p.sigma);
    const double th = state.eigen_angle();
    const double cc = std::cos(0.5 * th), ss = std::sin(0.5 * th);

    // Eigenbasis coefficients and their formal adjoints (the adjoint flips the sign of
    // the mixing angle and the sign of the energies in the exponents — in the broken
    // phase this is not the complex conjugate).
    const cplx al = 0.5 * sec * (cc / k2 + eiT * ss);
    const cplx be = 0.5 * sec * (eiT * cc / k2 - ss);
    const cplx als = 0.5 * sec * (cc / k2 + emT * ss);
    const cplx bes = 0.5 * sec * (emT * cc / k2 - ss);
    const cplx ep_f = std::exp(-i * sp.e_plus * t), em_f = std::exp(-i * sp.e_minus * t);
    const cplx ep_b = std::exp(i * sp.e_plus * t), em_b = std::exp(i * sp.e_minus * t);

    const cplx a = al * ep_f - emT * be * em_f;
    const cplx b = k2 * (emT * al * ep_f + be * em_f);
    const cplx as = als * ep_b - eiT * bes * em_b;
    const cplx bs = k2 * (eiT * als * ep_b + bes * em_b);

    const cplx S = as * a + bs * b;
    const cplx num =
        S + obs.n1 * (as * b + a * bs) - i * obs.n2 * (as * b - a * bs) + obs.n3 * (as * a - bs * b);
    const cplx prob = num / (2.0 * S);
    if (std::abs(prob.imag()) > 1e-10)
        throw std::domain_error("prob_closed_general: non-real probability (check inputs)");
    return clamp_probability(prob.real(), "prob_closed_general");
}

double prob_closed_ep(const GeneralNHParams& p, double theta, const ProjectiveObservable& obs,
                      double t) {
    if (spectrum_general(p).phase != PhaseClass::ExceptionalPoint)
        throw std::invalid_argument("prob_closed_ep: parameters are not on the degeneracy set");
    if (std::abs(p.s - p.sigma) > 1e-12 * std::max({1.0, p.s, p.sigma}))
        throw std::invalid_argument(
            "prob_closed_ep: valid only on the symmetric-coupling family (s = sigma)");
    const double rs = p.r * std::sin(p.phi);
    const double rt = p.r * t;
    const double den =
        1.0 + rt * rt + rt * (2.0 * std::cos(theta) * std::sin(p.phi) - rt * std::cos(2.0 * p.phi));
    const double num =
        obs.n2 + obs.n3 * std::cos(theta) + obs.n1 * std::sin(theta) + 2.0 * obs.n3 * rs * t;
    return clamp_probability(0.25 * (2.0 - 2.0 * obs.n2 + 2.0 * num / den), "prob_closed_ep");
}

std::pair<ProbabilityPair, ProbabilityPair> prob_closed_antipt(const AntiPTParams& p, double t) {
    p.validate();
    const double lcos = p.lambda * std::cos(p.phi);
    const double disc = p.s * p.s - lcos * lcos;
    const cplx wt = (disc >= 0.0 ? cplx(std::sqrt(disc), 0.0) : cplx(0.0, std::sqrt(-disc))) * t;
    // sinh(w t)/w = t * sinc_c(i w t) and cosh(w t) are real in both phases.
    const double gs = (t * sinc_c(cplx(0.0, 1.0) * wt)).real();
    const double ch = std::cosh(wt).real();
    const double den = 2.0 * p.s * p.s * gs * gs + 1.0;
    if (std::abs(den) < 1e-300)
        throw std::domain_error("prob_closed_antipt: degenerate normalization");
    const double px = clamp_probability(0.5 * (1.0 + 2.0 * p.s * gs * ch / den),
                                        "prob_closed_antipt");
    const double pz = clamp_probability(0.5 * (1.0 - 1.0 / den), "prob_closed_antipt");
    return {ProbabilityPair{px, 1.0 - px}, ProbabilityPair{pz, 1.0 - pz}};
}

EURSample eur_antipt_closed(const AntiPTParams& p, double t) {
    const auto [px, pz] = prob_closed_antipt(p, t);
    EURSample out;
    out.t = t;
    out.h_r = shannon_entropy(px);
    out.h_q = shannon_entropy(pz);
    out.eur = out.h_r + out.h_q;
    out.bound = 1.0; // complementary x/z pair on a pure trajectory
    return out;
}

} // namespace eurdyn
