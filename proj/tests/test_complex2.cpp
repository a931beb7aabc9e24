#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "eurdyn/complex2.hpp"

using namespace eurdyn;

namespace {

// Plain 30-term Taylor series for exp(-i A t), used as an independent reference for
// the closed-form two-by-two exponential.
C2Matrix exp_series(const C2Matrix& a, double t) {
    const C2Matrix m = a * cplx(0.0, -t);
    C2Matrix sum = C2Matrix::identity();
    C2Matrix term = C2Matrix::identity();
    for (int k = 1; k <= 30; ++k) {
        term = term * m * cplx(1.0 / static_cast<double>(k), 0.0);
        sum = sum + term;
    }
    return sum;
}

} // namespace

TEST_SUITE("complex2") {

TEST_CASE("matrix and vector arithmetic agree with composition") {
    const C2Matrix a{{1.0, 2.0}, {0.5, -1.0}, {2.0, 0.0}, {-0.25, 0.75}};
    const C2Matrix b{{0.0, 1.0}, {1.5, 0.5}, {-2.0, 1.0}, {3.0, -1.0}};
    const C2Vector v{{0.3, -0.7}, {1.1, 0.9}};

    const C2Vector lhs = (a * b) * v;
    const C2Vector rhs = a * (b * v);
    CHECK(std::abs(lhs.a0 - rhs.a0) < 1e-14);
    CHECK(std::abs(lhs.a1 - rhs.a1) < 1e-14);

    const cplx tr = a.trace();
    CHECK(std::abs(tr - (a.m00 + a.m11)) == 0.0);
    const cplx det = a.det();
    CHECK(std::abs(det - (a.m00 * a.m11 - a.m01 * a.m10)) == 0.0);
}

TEST_CASE("inverse2 inverts away from singularity and rejects it") {
    const C2Matrix a{{2.0, 1.0}, {0.0, -1.0}, {1.0, 0.5}, {1.0, 0.0}};
    const C2Matrix prod = a * inverse2(a);
    CHECK((prod - C2Matrix::identity()).max_abs() < 1e-14);

    const C2Matrix singular{{1.0, 0.0}, {2.0, 0.0}, {2.0, 0.0}, {4.0, 0.0}};
    CHECK_THROWS_AS((void)inverse2(singular), std::domain_error);
}

TEST_CASE("principal_sqrt picks the nonnegative-real branch") {
    CHECK(principal_sqrt(cplx(4.0, 0.0)) == cplx(2.0, 0.0));
    const cplx r = principal_sqrt(cplx(-9.0, 0.0));
    CHECK(r.real() == 0.0);
    CHECK(r.imag() == doctest::Approx(3.0).epsilon(1e-15));
    // A negative real with a tiny negative imaginary dust must not flip branch.
    const cplx rd = principal_sqrt(cplx(-9.0, -0.0));
    CHECK(rd.imag() > 0.0);
}

TEST_CASE("vector norm is overflow-safe") {
    const C2Vector big{{1e200, 0.0}, {1e200, 0.0}};
    const double n = big.norm();
    CHECK(std::isfinite(n));
    CHECK(n == doctest::Approx(1e200 * std::sqrt(2.0)).epsilon(1e-14));

    const C2Vector v{{3.0, 0.0}, {0.0, 4.0}};
    CHECK(v.norm() == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("eigensolver: frozen spectrum of an anti-symmetric example") {
    // [[i, 2], [2, -i]] has eigenvalues +sqrt(3), -sqrt(3).
    const C2Matrix m{{0.0, 1.0}, {2.0, 0.0}, {2.0, 0.0}, {0.0, -1.0}};
    const Eig2 e = mat2_eig(m);
    const double s3 = std::sqrt(3.0);
    CHECK_FALSE(e.defective);
    CHECK(std::abs(e.lambda1 - cplx(s3, 0.0)) < 1e-12);
    CHECK(std::abs(e.lambda2 - cplx(-s3, 0.0)) < 1e-12);

    const C2Vector r1 = m * e.v1 - e.v1 * e.lambda1;
    const C2Vector r2 = m * e.v2 - e.v2 * e.lambda2;
    CHECK(r1.norm() < 1e-12);
    CHECK(r2.norm() < 1e-12);
    CHECK(e.v1.norm() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("eigensolver flags the defective (Jordan) case") {
    const C2Matrix jordan{{1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
    const Eig2 e = mat2_eig(jordan);
    CHECK(e.defective);
    CHECK(std::abs(e.lambda1 - e.lambda2) < 1e-10);
    CHECK(std::abs(e.v1.a0 - e.v2.a0) == 0.0);
    CHECK(std::abs(e.v1.a1 - e.v2.a1) == 0.0);
}

TEST_CASE("sinc_c: value, limit, and branch agreement at the series switch") {
    CHECK(sinc_c(cplx(0.0, 0.0)) == cplx(1.0, 0.0));
    // At points bracketing the switchover the series and the ratio must agree to
    // near machine precision, evaluated at the same argument.
    for (const double mag : {kSincSwitch * (1.0 - 1e-3), kSincSwitch * (1.0 + 1e-3)}) {
        for (const cplx z : {cplx(mag, 0.0), cplx(0.0, mag), cplx(mag * 0.6, mag * 0.8)}) {
            const cplx series = cplx(1.0) - z * z / 6.0 + (z * z) * (z * z) / 120.0;
            const cplx ratio = std::sin(z) / z;
            CHECK(std::abs(series - ratio) < 1e-13);
            const cplx ours = sinc_c(z);
            CHECK(std::abs(ours - ratio) < 1e-13);
        }
    }
    // Far from zero it is exactly the ratio.
    const cplx z{1.3, -0.4};
    CHECK(std::abs(sinc_c(z) - std::sin(z) / z) == 0.0);
}

TEST_CASE("mat2_exp_times matches a truncated Taylor series") {
    const C2Matrix cases[] = {
        {{0.0, 0.0}, {2.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}},           // symmetric coupling
        {{0.0, 1.0}, {2.0, 0.0}, {2.0, 0.0}, {0.0, -1.0}},          // gain/loss
        {{1.0, 0.5}, {0.3, -0.2}, {-0.7, 0.1}, {0.4, 0.9}},         // generic
        {{0.5, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.5, 0.0}},           // defective
    };
    for (const C2Matrix& a : cases) {
        for (const double t : {0.0, 0.3, 1.0, 2.0}) {
            const C2Matrix closed = mat2_exp_times(a, t);
            const C2Matrix series = exp_series(a, t);
            CHECK((closed - series).max_abs() < 1e-12);
        }
    }
}

TEST_CASE("mat2_exp_times semigroup property at large arguments") {
    const C2Matrix a{{0.0, 2.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, -2.0}};
    // exp(-iA t1) exp(-iA t2) = exp(-iA (t1+t2)); entries reach ~cosh(sqrt(3)*20),
    // so the comparison must be relative to the magnitude actually reached.
    const double t1 = 12.0, t2 = 8.0;
    const C2Matrix lhs = mat2_exp_times(a, t1) * mat2_exp_times(a, t2);
    const C2Matrix rhs = mat2_exp_times(a, t1 + t2);
    const double scale = std::max(1.0, rhs.max_abs());
    CHECK((lhs - rhs).max_abs() < 1e-10 * scale);
}

TEST_CASE("mat2_exp_times at t=0 is the identity") {
    const C2Matrix a{{1.0, 0.5}, {0.3, -0.2}, {-0.7, 0.1}, {0.4, 0.9}};
    CHECK((mat2_exp_times(a, 0.0) - C2Matrix::identity()).max_abs() == 0.0);
}

TEST_CASE("adjoint conjugate-transposes") {
    const C2Matrix a{{1.0, 2.0}, {0.5, -1.0}, {2.0, 3.0}, {-0.25, 0.75}};
    const C2Matrix ad = a.adjoint();
    CHECK(ad.m00 == std::conj(a.m00));
    CHECK(ad.m01 == std::conj(a.m10));
    CHECK(ad.m10 == std::conj(a.m01));
    CHECK(ad.m11 == std::conj(a.m11));
}

} // TEST_SUITE
