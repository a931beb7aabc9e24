#pragma once

#include <vector>

#include "eurdyn/complex2.hpp"

namespace eurdyn::oracle {

// Fixed-step classical 4th-order Runge-Kutta. Deliberately shares nothing with the
// closed-form layer beyond the Hamiltonian matrix itself: this is the independent
// brute-force reference the invariant checks compare against.
struct IntegratorConfig {
    double dt = 1e-4;
    double t_max = 10.0;
};

// Integrates d psi/dt = -i H psi from psi0. Returns the states at the n+1 uniform
// sample times k*h, k = 0..n, where n = round(t_max/dt) and h = t_max/n (the step is
// adjusted to divide t_max evenly; cfg.dt is the target). The norm is never touched
// during integration; normalization, if wanted, happens at readout.
// Throws std::invalid_argument unless dt > 0, dt <= t_max, and max|H| * h < 0.1
// (stability guard).
std::vector<C2Vector> integrate_schrodinger(const C2Matrix& H, const C2Vector& psi0,
                                            const IntegratorConfig& cfg);

// Trapezoidal time average of a sampled series over its grid (exact for affine
// series). Independent quadrature path used to cross-check the witness integral.
double reference_average(const std::vector<double>& f, const std::vector<double>& t_grid);

} // namespace eurdyn::oracle
