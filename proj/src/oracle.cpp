#include "eurdyn/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace eurdyn::oracle {

std::vector<C2Vector> integrate_schrodinger(const C2Matrix& H, const C2Vector& psi0,
                                            const IntegratorConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("integrate_schrodinger: dt must be > 0");
    if (cfg.dt > cfg.t_max)
        throw std::invalid_argument("integrate_schrodinger: dt must be <= t_max");
    const long long n = std::max(1LL, std::llround(cfg.t_max / cfg.dt));
    const double h = cfg.t_max / static_cast<double>(n);
    if (H.max_abs() * h >= 0.1)
        throw std::invalid_argument(
            "integrate_schrodinger: stability guard violated (max|H| * dt must be < 0.1)");

    const cplx mi(0.0, -1.0);
    auto f = [&](const C2Vector& psi) -> C2Vector { return (H * psi) * mi; };

    std::vector<C2Vector> out;
    out.reserve(static_cast<size_t>(n) + 1);
    C2Vector psi = psi0;
    out.push_back(psi);
    for (long long k = 0; k < n; ++k) {
        const C2Vector k1 = f(psi);
        const C2Vector k2 = f(psi + k1 * cplx(0.5 * h, 0.0));
        const C2Vector k3 = f(psi + k2 * cplx(0.5 * h, 0.0));
        const C2Vector k4 = f(psi + k3 * cplx(h, 0.0));
        psi = psi + (k1 + k2 * cplx(2.0, 0.0) + k3 * cplx(2.0, 0.0) + k4) * cplx(h / 6.0, 0.0);
        out.push_back(psi);
    }
    return out;
}

double reference_average(const std::vector<double>& f, const std::vector<double>& t_grid) {
    if (f.size() != t_grid.size() || f.size() < 2)
        throw std::invalid_argument("reference_average: aligned grids of length >= 2 required");
    for (size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("reference_average: times must be strictly increasing");
    double acc = 0.0;
    for (size_t i = 0; i + 1 < f.size(); ++i)
        acc += 0.5 * (f[i] + f[i + 1]) * (t_grid[i + 1] - t_grid[i]);
    return acc / (t_grid.back() - t_grid.front());
}

} // namespace eurdyn::oracle
