#pragma once

#include <utility>

#include "eurdyn/dynamics.hpp"

namespace eurdyn {

// Rank-1 projective observable P = (I + n . pauli)/2 for a unit Bloch vector n.
// The constructor normalizes its input and rejects near-zero vectors.
struct ProjectiveObservable {
    double n1 = 0.0, n2 = 0.0, n3 = 1.0;

    ProjectiveObservable(double x, double y, double z);
    static ProjectiveObservable x() { return {1.0, 0.0, 0.0}; }
    static ProjectiveObservable y() { return {0.0, 1.0, 0.0}; }
    static ProjectiveObservable z() { return {0.0, 0.0, 1.0}; }
};

struct ProbabilityPair {
    double p_plus = 0.0;
    double p_minus = 0.0;
};

// One point of an uncertainty trace: the two measurement entropies (bits), their sum,
// and the applicable lower bound.
struct EURSample {
    double t = 0.0;
    double h_r = 0.0;
    double h_q = 0.0;
    double eur = 0.0;
    double bound = 0.0;
};

C2Matrix projector(const ProjectiveObservable& obs);

// Born-rule outcome distribution tr(P rho). Rejects inputs whose trace or Hermiticity
// violation exceeds 1e-8. Floating dust within 1e-10 outside [0,1] is clamped; larger
// violations are errors.
ProbabilityPair measure(const C2Matrix& rho, const ProjectiveObservable& obs);

double shannon_entropy(const ProbabilityPair& p); // bits, 0 log 0 := 0
double von_neumann_entropy(const C2Matrix& rho);  // bits

// Complementarity bound -2 log2 c, c = max eigenvector overlap of the two projector
// pairs; for Bloch vectors, c = sqrt((1 + |n.m|)/2). The rho overload adds the state
// entropy (mixed-state form).
double mu_bound(const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q);
double mu_bound(const ProjectiveObservable& obs_r, const ProjectiveObservable& obs_q,
                const C2Matrix& rho);

// Shannon entropies of both measurements on rho plus the bound for this pair & state.
EURSample eur(const C2Matrix& rho, const ProjectiveObservable& obs_r,
              const ProjectiveObservable& obs_q, double t = 0.0);

// Closed-form measurement probability for the general model, evaluated through the
// eigenbasis expansion (valid in the unbroken and broken phases; the degeneracy is
// rejected because the coefficient sec(Theta) diverges there). Cross-check against
// the Born pipeline; requires s, sigma > 0.
double prob_closed_general(const GeneralNHParams& p, const InitialStateSpec& state,
                           const ProjectiveObservable& obs, double t);

// Closed-form probability on the symmetric-coupling degeneracy family
// (s = sigma = r |sin phi|). Here theta parameterizes the initial state as
// (cos(theta/2), sin(theta/2)) — note the opposite convention from the eigenbasis
// angle used elsewhere. Rejects parameters off the degeneracy set or with s != sigma.
double prob_closed_ep(const GeneralNHParams& p, double theta, const ProjectiveObservable& obs,
                      double t);

// Closed-form outcome distributions for the anti-symmetric model with initial |0>:
// first pair for the x-axis observable, second for the z-axis one. EP-safe factored
// hyperbolic form, valid in every phase.
std::pair<ProbabilityPair, ProbabilityPair> prob_closed_antipt(const AntiPTParams& p, double t);

// The uncertainty sum assembled from prob_closed_antipt (initial |0>, x/z pair).
EURSample eur_antipt_closed(const AntiPTParams& p, double t);

} // namespace eurdyn
