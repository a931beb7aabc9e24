#include "eurdyn/complex2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eurdyn {

cplx principal_sqrt(cplx z) {
    if (z.imag() == 0.0) z = cplx(z.real(), +0.0);
    return std::sqrt(z);
}

double C2Vector::norm() const {
    const double m = std::max(std::abs(a0), std::abs(a1));
    if (m == 0.0) return 0.0;
    const cplx u0 = a0 / m, u1 = a1 / m;
    return m * std::sqrt(std::norm(u0) + std::norm(u1));
}

bool C2Vector::finite() const {
    return std::isfinite(a0.real()) && std::isfinite(a0.imag()) &&
           std::isfinite(a1.real()) && std::isfinite(a1.imag());
}

double C2Matrix::max_abs() const {
    return std::max(std::max(std::abs(m00), std::abs(m01)),
                    std::max(std::abs(m10), std::abs(m11)));
}

bool C2Matrix::finite() const {
    auto ok = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    return ok(m00) && ok(m01) && ok(m10) && ok(m11);
}

C2Matrix inverse2(const C2Matrix& m) {
    const cplx d = m.det();
    const double scale = std::max(1.0, m.max_abs());
    if (std::abs(d) < 1e-300 * scale * scale)
        throw std::domain_error("inverse2: matrix is singular");
    return {m.m11 / d, -m.m01 / d, -m.m10 / d, m.m00 / d};
}

Eig2 mat2_eig(const C2Matrix& M) {
    const cplx mean = 0.5 * M.trace();
    // disc = ((m00-m11)/2)^2 + m01*m10; eigenvalues are mean +- sqrt(disc).
    const cplx half_diff = 0.5 * (M.m00 - M.m11);
    const cplx disc = half_diff * half_diff + M.m01 * M.m10;

    Eig2 out;
    const double nrm = M.max_abs();
    out.defective = std::abs(disc) <= 1e-12 * (1.0 + nrm * nrm);

    const cplx root = principal_sqrt(disc);
    out.lambda1 = mean + root;
    out.lambda2 = mean - root;

    auto eigvec = [&](cplx lam) -> C2Vector {
        // Rows of (M - lam I) are (m00-lam, m01) and (m10, m11-lam); a null vector is
        // (m01, lam-m00) or (lam-m11, m10). Pick the larger for conditioning.
        const C2Vector c1{M.m01, lam - M.m00};
        const C2Vector c2{lam - M.m11, M.m10};
        C2Vector v = (c1.norm() >= c2.norm()) ? c1 : c2;
        const double n = v.norm();
        if (n == 0.0) return {1.0, 0.0}; // scalar matrix: any direction
        return v * (1.0 / n);
    };
    out.v1 = eigvec(out.lambda1);
    out.v2 = out.defective ? out.v1 : eigvec(out.lambda2);
    return out;
}

cplx sinc_c(cplx z) {
    if (std::abs(z) < kSincSwitch) {
        const cplx z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

C2Matrix mat2_exp_times(const C2Matrix& A, double t) {
    const cplx half_tr = 0.5 * A.trace();
    const C2Matrix M{A.m00 - half_tr, A.m01, A.m10, A.m11 - half_tr};
    const cplx mu = principal_sqrt(-M.det()); // traceless: M^2 = -det(M) I
    const cplx c = std::cos(mu * t);
    const cplx g = t * sinc_c(mu * t); // sin(mu t)/mu, stable as mu -> 0
    const cplx phase = std::exp(cplx(0.0, -1.0) * half_tr * t);
    const cplx ig = cplx(0.0, -1.0) * g;
    return C2Matrix{c + ig * M.m00, ig * M.m01, ig * M.m10, c + ig * M.m11} * phase;
}

} // namespace eurdyn
