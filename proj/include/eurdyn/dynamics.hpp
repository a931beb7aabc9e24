#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "eurdyn/complex2.hpp"

namespace eurdyn {

// Default relative tolerance for bucketing a parameter point onto the degeneracy set.
inline constexpr double kDefaultClassTol = 1e-9;

enum class PhaseClass { Unbroken, Broken, ExceptionalPoint };

const char* phase_name(PhaseClass p);

// Two-level model H = [[r e^{i phi}, sigma], [s, r e^{-i phi}]].
// The couplings s, sigma are non-negative; the symmetric case s == sigma is the
// parity-time-symmetric family.
struct GeneralNHParams {
    double r = 0.0;
    double s = 0.0;
    double sigma = 0.0;
    double phi = 0.0;
    void validate() const; // throws std::invalid_argument
};

// Anti-symmetric counterpart H = [[lambda e^{i phi}, i s], [i s, -lambda e^{-i phi}]],
// satisfying (PT) H (PT) = -H with P the bit flip and T complex conjugation.
struct AntiPTParams {
    double lambda = 0.0;
    double s = 0.0;
    double phi = 0.0;
    void validate() const;
};

using SystemParams = std::variant<GeneralNHParams, AntiPTParams>;

// Spectrum summary. omega is the principal square root of the phase discriminant:
// real in the unbroken phase, +i|omega| in the broken phase, 0 at the degeneracy.
// theta (the eigenvector mixing angle, sin(theta) = r sin(phi)/sqrt(s sigma)) is
// present only when s*sigma > 0 and is branch-corrected so that
// cos(theta) = omega/sqrt(s sigma) always holds; it is a diagnostic — production
// formulas use the (sin, cos) pair directly. delta_e stores e_plus - e_minus as is
// (equal to 2*omega for the general model; the anti-symmetric model's gap differs
// from its stored omega by a factor i). period = pi/omega is populated only for the
// oscillatory (general, unbroken) regime.
struct SpectralData {
    cplx e_plus{}, e_minus{};
    cplx omega{};
    cplx delta_e{};
    std::optional<cplx> theta;
    std::optional<double> period;
    PhaseClass phase = PhaseClass::Unbroken;
    double class_tol = kDefaultClassTol; // tolerance used by the classification
};

// Initial-state description. The eigenbasis angle parameterizes amplitudes
// (sin(theta/2), cos(theta/2)); the map to computational states is exact:
// |0> <-> theta = pi, |1> <-> theta = 0, |+> <-> theta = pi/2.
struct InitialStateSpec {
    enum class Kind { Zero, One, Plus, Angle };
    Kind kind = Kind::Plus;
    double theta = 0.0; // used when kind == Angle

    static InitialStateSpec zero() { return {Kind::Zero, 0.0}; }
    static InitialStateSpec one() { return {Kind::One, 0.0}; }
    static InitialStateSpec plus() { return {Kind::Plus, 0.0}; }
    static InitialStateSpec angle(double th) { return {Kind::Angle, th}; }

    double eigen_angle() const;  // the angle theta realizing this state
    C2Vector amplitudes() const; // (sin(theta/2), cos(theta/2)) in exact form

    // Expansion coefficients of the state over the right eigenvectors of the given
    // system: alpha = (sec(Theta)/2)(cos(theta/2)/kappa^2 + e^{i Theta} sin(theta/2)),
    // beta = (sec(Theta)/2)(e^{i Theta} cos(theta/2)/kappa^2 - sin(theta/2)) with
    // kappa^2 = sqrt(s/sigma) (kappa = 1 in the symmetric family). Requires a
    // non-degenerate spectrum with s*sigma > 0.
    std::pair<cplx, cplx> eigen_coeffs(const GeneralNHParams& p) const;
};

PhaseClass classify_phase(double discriminant, double scale, double tol);

C2Matrix build_general(const GeneralNHParams& p);
C2Matrix build_antipt(const AntiPTParams& p);

SpectralData spectrum_general(const GeneralNHParams& p, double tol = kDefaultClassTol);
SpectralData spectrum_antipt(const AntiPTParams& p, double tol = kDefaultClassTol);

// Closed-form evolution operator, one code path for all phases:
//   U(t) = e^{-i t r cos(phi)} [[c + a g, -i sigma g], [-i s g, c - a g]],
// c = cos(omega t), g = t sinc_c(omega t), a = r sin(phi), with complex omega.
C2Matrix propagator_general(const GeneralNHParams& p, double t);

// The omega -> 0 limit of the propagator, as an independent cross-check:
//   U(t) = e^{-i t r cos(phi)} [[1 + a t, -i sigma t], [-i s t, 1 - a t]].
// Valid (and only accepted) exactly on the degeneracy set.
C2Matrix propagator_ep_limit(const GeneralNHParams& p, double t);

// exp(-i H t) for the anti-symmetric model via the generic trace/traceless split.
C2Matrix propagator_antipt(const AntiPTParams& p, double t);

// Similarity transform eta with eta H eta^{-1} Hermitian (only the real-spectrum /
// unbroken phase admits one). The balanced form eta_Theta * diag(kappa, 1/kappa),
// kappa = (s/sigma)^{1/4}, yields h = r cos(phi) I + omega sigma_x exactly.
struct HermitianEquivalent {
    C2Matrix eta;
    C2Matrix h;
};
HermitianEquivalent hermitian_map(const GeneralNHParams& p);

// exp(-i h t) for the Hermitian image above, in closed form:
//   e^{-i t r cos(phi)} [[cos(omega t), -i sin(omega t)], [-i sin(omega t), cos(omega t)]].
// Requires the unbroken phase.
C2Matrix unitary_equivalent(const GeneralNHParams& p, double t);

// Normalized readout of a non-unitary evolution step.
// norm_growth = |U psi0|^2 may overflow to +inf at extreme broken-phase times while
// state and rho remain finite (the normalization is computed in scaled form).
struct EvolveResult {
    C2Vector state;     // U psi0 / |U psi0|
    C2Matrix rho;       // |state><state| with the trace renormalized exactly
    double norm_growth; // |U psi0|^2
};
EvolveResult evolve_normalized(const C2Matrix& U, const C2Vector& psi0);

// Closed-form normalized density matrix for the initial state (|0> + |1>)/sqrt(2)
// under the general model, overflow-stabilized and valid in every phase.
C2Matrix rho_plus_closed(const GeneralNHParams& p, double t);

} // namespace eurdyn
