#pragma once

#include <complex>

namespace eurdyn {

using cplx = std::complex<double>;

// Fixed-size complex 2-vector: the amplitude pair of a two-level state.
struct C2Vector {
    cplx a0{};
    cplx a1{};

    C2Vector operator+(const C2Vector& o) const { return {a0 + o.a0, a1 + o.a1}; }
    C2Vector operator-(const C2Vector& o) const { return {a0 - o.a0, a1 - o.a1}; }
    C2Vector operator*(cplx s) const { return {a0 * s, a1 * s}; }

    // Overflow-safe Euclidean norm (scales by the max component magnitude first).
    double norm() const;
    bool finite() const;
};

// Fixed-size complex 2x2 matrix.
struct C2Matrix {
    cplx m00{}, m01{}, m10{}, m11{};

    C2Matrix operator+(const C2Matrix& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    C2Matrix operator-(const C2Matrix& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }
    C2Matrix operator*(const C2Matrix& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    C2Vector operator*(const C2Vector& v) const {
        return {m00 * v.a0 + m01 * v.a1, m10 * v.a0 + m11 * v.a1};
    }
    C2Matrix operator*(cplx s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }

    cplx trace() const { return m00 + m11; }
    cplx det() const { return m00 * m11 - m01 * m10; }
    C2Matrix adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
    // Max entry magnitude; the norm used throughout (adequate at fixed size 2).
    double max_abs() const;
    bool finite() const;

    static C2Matrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

C2Matrix inverse2(const C2Matrix& m); // throws std::domain_error on |det| ~ 0

// Principal square root with the branch cut pinned: a negative real input maps to
// +i*sqrt(|x|). Guards against a -0.0 imaginary part selecting the lower sheet.
cplx principal_sqrt(cplx z);

struct Eig2 {
    cplx lambda1{}, lambda2{};
    C2Vector v1{}, v2{};
    bool defective = false; // eigenvectors coalesce (discriminant below tolerance)
};

// Eigen-decomposition of a 2x2 complex matrix via the characteristic polynomial.
// Defective/degenerate inputs are flagged, not errors.
Eig2 mat2_eig(const C2Matrix& M);

// Stable sin(z)/z: truncated series below the switch radius, direct ratio above.
inline constexpr double kSincSwitch = 1e-4;
cplx sinc_c(cplx z);

// exp(-i*A*t) through the trace/traceless split:
//   exp(-iAt) = e^{-i(trA/2)t} [cos(mu t) I - i t sinc_c(mu t) M],  M = A - (trA/2) I,
// where mu is the principal square root of -det(M). Since only mu^2 enters (cos and
// sinc_c are even), the branch choice cannot affect the result; defective matrices
// (mu = 0) are covered by the sinc_c limit with no branching.
C2Matrix mat2_exp_times(const C2Matrix& A, double t);

} // namespace eurdyn
