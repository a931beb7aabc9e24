#include "eurdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eurdyn {

namespace {

// Square root of a real discriminant with the fixed convention
// sqrt(negative) = +i sqrt(|.|).
cplx omega_from_disc(double disc) {
    return disc >= 0.0 ? cplx(std::sqrt(disc), 0.0) : cplx(0.0, std::sqrt(-disc));
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

} // namespace

const char* phase_name(PhaseClass p) {
    switch (p) {
        case PhaseClass::Unbroken: return "unbroken";
        case PhaseClass::Broken: return "broken";
        case PhaseClass::ExceptionalPoint: return "ep";
    }
    return "?";
}

void GeneralNHParams::validate() const {
    require_finite(r, "r");
    require_finite(s, "s");
    require_finite(sigma, "sigma");
    require_finite(phi, "phi");
    if (s < 0.0) throw std::invalid_argument("coupling s must be non-negative");
    if (sigma < 0.0) throw std::invalid_argument("coupling sigma must be non-negative");
}

void AntiPTParams::validate() const {
    require_finite(lambda, "lambda");
    require_finite(s, "s");
    require_finite(phi, "phi");
}

PhaseClass classify_phase(double discriminant, double scale, double tol) {
    if (scale < 0.0) throw std::invalid_argument("classify_phase: scale must be >= 0");
    if (tol <= 0.0) throw std::invalid_argument("classify_phase: tol must be > 0");
    if (std::abs(discriminant) <= tol * (1.0 + scale)) return PhaseClass::ExceptionalPoint;
    return discriminant > 0.0 ? PhaseClass::Unbroken : PhaseClass::Broken;
}

C2Matrix build_general(const GeneralNHParams& p) {
    p.validate();
    const cplx re_iphi = std::polar(p.r, p.phi);
    return {re_iphi, cplx(p.sigma, 0.0), cplx(p.s, 0.0), std::conj(re_iphi)};
}

C2Matrix build_antipt(const AntiPTParams& p) {
    p.validate();
    const cplx le_iphi = std::polar(p.lambda, p.phi);
    const cplx is(0.0, p.s);
    return {le_iphi, is, is, -std::conj(le_iphi)};
}

SpectralData spectrum_general(const GeneralNHParams& p, double tol) {
    p.validate();
    const double rsin = p.r * std::sin(p.phi);
    const double ss = p.s * p.sigma;
    const double disc = ss - rsin * rsin;
    const double scale = std::max({std::abs(ss), rsin * rsin, 1.0});

    SpectralData out;
    out.class_tol = tol;
    out.phase = classify_phase(disc, scale, tol);
    out.omega = omega_from_disc(disc);
    const double rcos = p.r * std::cos(p.phi);
    out.e_plus = rcos + out.omega;
    out.e_minus = rcos - out.omega;
    out.delta_e = out.e_plus - out.e_minus;
    if (ss > 0.0) {
        const double root = std::sqrt(ss);
        cplx th = std::asin(cplx(rsin / root, +0.0));
        // Pick the branch consistent with the principal omega: cos(theta) must equal
        // omega/root (= +i sinh(y) in the broken phase, where asin's principal branch
        // would give -i sinh(y)).
        const cplx want = out.omega / root;
        if (std::abs(std::cos(th) - want) > std::abs(std::cos(std::conj(th)) - want))
            th = std::conj(th);
        out.theta = th;
    }
    if (out.phase == PhaseClass::Unbroken && out.omega.real() > 0.0)
        out.period = M_PI / out.omega.real();
    return out;
}

SpectralData spectrum_antipt(const AntiPTParams& p, double tol) {
    p.validate();
    const double lcos = p.lambda * std::cos(p.phi);
    const double disc = p.s * p.s - lcos * lcos;
    const double scale = std::max({p.s * p.s, lcos * lcos, 1.0});

    SpectralData out;
    out.class_tol = tol;
    out.phase = classify_phase(disc, scale, tol);
    out.omega = omega_from_disc(disc);
    const cplx gap_root = omega_from_disc(-disc); // sqrt(lambda^2 cos^2 phi - s^2)
    const cplx il_sin(0.0, p.lambda * std::sin(p.phi));
    out.e_plus = il_sin + gap_root;
    out.e_minus = il_sin - gap_root;
    out.delta_e = out.e_plus - out.e_minus;
    return out;
}

C2Matrix propagator_general(const GeneralNHParams& p, double t) {
    p.validate();
    if (t < 0.0) throw std::invalid_argument("propagator_general: t must be >= 0");
    const double rsin = p.r * std::sin(p.phi);
    const double disc = p.s * p.sigma - rsin * rsin;
    const cplx omega = omega_from_disc(disc);
    const cplx wt = omega * t;
    const cplx c = std::cos(wt);
    const cplx g = t * sinc_c(wt); // sin(omega t)/omega, exact limit at omega = 0
    const cplx phase = std::exp(cplx(0.0, -1.0) * (p.r * std::cos(p.phi)) * t);
    const cplx mi(0.0, -1.0);
    return C2Matrix{c + rsin * g, mi * p.sigma * g, mi * p.s * g, c - rsin * g} * phase;
}

C2Matrix propagator_ep_limit(const GeneralNHParams& p, double t) {
    if (t < 0.0) throw std::invalid_argument("propagator_ep_limit: t must be >= 0");
    if (spectrum_general(p).phase != PhaseClass::ExceptionalPoint)
        throw std::invalid_argument(
            "propagator_ep_limit: parameters are not on the degeneracy set");
    const double rsin = p.r * std::sin(p.phi);
    const cplx phase = std::exp(cplx(0.0, -1.0) * (p.r * std::cos(p.phi)) * t);
    const cplx mi(0.0, -1.0);
    return C2Matrix{1.0 + rsin * t, mi * p.sigma * t, mi * p.s * t, 1.0 - rsin * t} * phase;
}

C2Matrix propagator_antipt(const AntiPTParams& p, double t) {
    if (t < 0.0) throw std::invalid_argument("propagator_antipt: t must be >= 0");
    return mat2_exp_times(build_antipt(p), t);
}

HermitianEquivalent hermitian_map(const GeneralNHParams& p) {
    const SpectralData sp = spectrum_general(p);
    if (sp.phase != PhaseClass::Unbroken)
        throw std::invalid_argument(
            "hermitian_map: defined only in the unbroken (real-spectrum) phase");
    const double root = std::sqrt(p.s * p.sigma); // > 0 in the unbroken phase
    const double sin_th = p.r * std::sin(p.phi) / root;
    const double cos_th = sp.omega.real() / root;
    const double ch = std::sqrt(0.5 * (1.0 + cos_th)); // cos(theta/2) > 0
    const double sh = sin_th / (2.0 * ch);             // sin(theta/2), sign-correct
    const double kappa = std::pow(p.s / p.sigma, 0.25);
    const double pref = 1.0 / std::sqrt(cos_th);
    const cplx i(0.0, 1.0);

    HermitianEquivalent out;
    out.eta = C2Matrix{pref * kappa * ch, -i * pref * sh / kappa,
                       i * pref * kappa * sh, pref * ch / kappa};
    out.h = out.eta * build_general(p) * inverse2(out.eta);
    return out;
}

C2Matrix unitary_equivalent(const GeneralNHParams& p, double t) {
    const SpectralData sp = spectrum_general(p);
    if (sp.phase != PhaseClass::Unbroken)
        throw std::invalid_argument("unitary_equivalent: requires the unbroken phase");
    const double w = sp.omega.real();
    const cplx phase = std::exp(cplx(0.0, -1.0) * (p.r * std::cos(p.phi)) * t);
    const cplx c(std::cos(w * t), 0.0);
    const cplx ms(0.0, -std::sin(w * t));
    return C2Matrix{c, ms, ms, c} * phase;
}

EvolveResult evolve_normalized(const C2Matrix& U, const C2Vector& psi0) {
    if (std::abs(psi0.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("evolve_normalized: psi0 must be normalized");
    const C2Vector y = U * psi0;
    const double m = std::max(std::abs(y.a0), std::abs(y.a1));
    if (m < 1e-300)
        throw std::domain_error("evolve_normalized: state norm vanished; cannot normalize");
    const cplx u0 = y.a0 / m, u1 = y.a1 / m;
    const double p0 = std::norm(u0), p1 = std::norm(u1);
    const double unit = std::sqrt(p0 + p1);

    EvolveResult out;
    out.state = {u0 / unit, u1 / unit};
    const double tr = p0 + p1;
    const cplx off = u0 * std::conj(u1) / tr;
    out.rho = {cplx(p0 / tr, 0.0), off, std::conj(off), cplx(p1 / tr, 0.0)};
    out.norm_growth = (m * unit) * (m * unit);
    return out;
}

C2Matrix rho_plus_closed(const GeneralNHParams& p, double t) {
    p.validate();
    const double a = p.r * std::sin(p.phi);
    const double disc = p.s * p.sigma - a * a;
    const cplx wt = omega_from_disc(disc) * t;
    // For real parameters cos(omega t) and t*sinc(omega t) are real in every phase
    // (trigonometric or hyperbolic); keep the real parts.
    const double c = std::cos(wt).real();
    const double g = (t * sinc_c(wt)).real();
    // Scale by the max magnitude before squaring: the hyperbolic regime reaches
    // magnitudes whose raw squares overflow while every ratio below stays finite.
    const double m = std::max({std::abs(c), std::abs(g), 1e-300});
    const double cs = c / m, gs = g / m;
    const double A = cs + a * gs, B = cs - a * gs;
    const double two_norm =
        2.0 * cs * cs + (p.s * p.s + p.sigma * p.sigma + 2.0 * a * a) * gs * gs;
    const double r00 = (p.sigma * p.sigma * gs * gs + A * A) / two_norm;
    const double r11 = (p.s * p.s * gs * gs + B * B) / two_norm;
    const cplx r01 = cplx(A, -p.sigma * gs) * cplx(B, p.s * gs) / two_norm;
    return {cplx(r00, 0.0), r01, std::conj(r01), cplx(r11, 0.0)};
}

double InitialStateSpec::eigen_angle() const {
    switch (kind) {
        case Kind::Zero: return M_PI;
        case Kind::One: return 0.0;
        case Kind::Plus: return M_PI / 2.0;
        case Kind::Angle: return theta;
    }
    return theta;
}

C2Vector InitialStateSpec::amplitudes() const {
    switch (kind) {
        case Kind::Zero: return {1.0, 0.0};
        case Kind::One: return {0.0, 1.0};
        case Kind::Plus: return {cplx(M_SQRT1_2, 0.0), cplx(M_SQRT1_2, 0.0)};
        case Kind::Angle: break;
    }
    return {cplx(std::sin(0.5 * theta), 0.0), cplx(std::cos(0.5 * theta), 0.0)};
}

std::pair<cplx, cplx> InitialStateSpec::eigen_coeffs(const GeneralNHParams& p) const {
    const SpectralData sp = spectrum_general(p);
    if (sp.phase == PhaseClass::ExceptionalPoint)
        throw std::invalid_argument(
            "eigen_coeffs: undefined at the degeneracy (sec of the mixing angle diverges)");
    if (!(p.s > 0.0 && p.sigma > 0.0))
        throw std::invalid_argument("eigen_coeffs: requires s > 0 and sigma > 0");
    const double root = std::sqrt(p.s * p.sigma);
    const cplx sin_th(p.r * std::sin(p.phi) / root, 0.0);
    const cplx cos_th = sp.omega / root; // branch-consistent by construction
    const cplx eiT = cos_th + cplx(0.0, 1.0) * sin_th;
    const cplx sec = 1.0 / cos_th;
    const double k2 = std::sqrt(p.s / p.sigma);
    const double th = eigen_angle();
    const double cc = std::cos(0.5 * th), ss = std::sin(0.5 * th);
    const cplx alpha = 0.5 * sec * (cc / k2 + eiT * ss);
    const cplx beta = 0.5 * sec * (eiT * cc / k2 - ss);
    return {alpha, beta};
}

} // namespace eurdyn
