#include "annulus/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

void require_positive_radius(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        std::ostringstream msg;
        msg << "radius " << r << " must be positive and finite";
        throw GuardError("radius", msg.str());
    }
}

}  // namespace

double solve_mode(ModeKind kind, int n, double r) {
    if (n < 0) throw GuardError("n", "mode index must be >= 0");
    require_positive_radius(r);
    require_overflow_guard(n, r);
    if (n == 0) {
        return kind == ModeKind::dirichlet ? 1.0 : std::log(r);
    }
    const double up = std::pow(r, n);
    const double down = std::pow(r, -n);
    return kind == ModeKind::dirichlet ? 0.5 * (up + down) : (up - down) / (2.0 * n);
}

double amplification(ModeKind kind, int n, double r) {
    if (!(r > 0.0 && r < 1.0)) {
        std::ostringstream msg;
        msg << "radius " << r << " must satisfy 0 < r < 1";
        throw GuardError("radius", msg.str());
    }
    return std::abs(solve_mode(kind, n, r));
}

double solve_cauchy_oracle_at(const CauchyData& data, const PolarPoint& point) {
    const double r = point.radius;
    const double phi = point.angle;
    require_overflow_guard(std::max(data.g.degree(), data.h.degree()), r);

    double u = data.g.mean();
    for (int n = 1; n <= data.g.degree(); ++n) {
        u += solve_mode(ModeKind::dirichlet, n, r) *
             (data.g.cos_coeff(n) * std::cos(n * phi) + data.g.sin_coeff(n) * std::sin(n * phi));
    }
    u += data.h.mean() * std::log(r);
    for (int n = 1; n <= data.h.degree(); ++n) {
        u += solve_mode(ModeKind::neumann, n, r) *
             (data.h.cos_coeff(n) * std::cos(n * phi) + data.h.sin_coeff(n) * std::sin(n * phi));
    }
    return u;
}

Field solve_cauchy_oracle(const CauchyData& data, const Annulus& annulus, const PolarGrid& grid,
                          unsigned threads) {
    for (double r : grid.radii) {
        annulus.require_interior(r, "grid-r");
        require_overflow_guard(std::max(data.g.degree(), data.h.degree()), r);
    }
    return evaluate_on_grid(
        grid, "oracle", [&](const PolarPoint& p) { return solve_cauchy_oracle_at(data, p); },
        threads);
}

}  // namespace annulus
