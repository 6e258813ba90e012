#pragma once

#include <numbers>
#include <optional>
#include <vector>

namespace annulus {

/// Discretization parameters for the semi-infinite and periodic integrals.
///
/// - laguerre_order   Q: Gauss-Laguerre nodes for int_0^inf e^{-eps} (...) d eps
/// - angular_nodes    M: periodic trapezoid points for the t and psi integrals
/// - lambda_cutoff    Lambda: truncation of the lambda integral; unset means
///                    the cutoff rule (N + 40) / r_min is applied per point
/// - lambda_nodes     L: composite-rule points on [0, Lambda] (and on [0, N] for
///                    partial reconstructions); unset means max(16, 25 Lambda)
struct QuadratureSpec {
    int laguerre_order = 16;
    int angular_nodes = 256;
    std::optional<double> lambda_cutoff;
    std::optional<int> lambda_nodes;

    /// Q >= 1, M >= 8 and even, Lambda > 0, L >= 16. Throws GuardError.
    void validate() const;
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Laguerre rule for weight e^{-x} on [0, inf); exact for polynomials of
/// degree <= 2Q - 1. 1 <= Q <= 64.
///
/// Nodes come from the symmetric tridiagonal Jacobi matrix of the Laguerre
/// recurrence (diagonal 2k - 1, off-diagonal k), then one Newton polish on
/// L_Q; weights use x_i / ((Q+1)^2 L_{Q+1}(x_i)^2), which keeps relative
/// accuracy for the very small weights at the far nodes.
QuadratureRule gauss_laguerre(int order);

/// Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int order);

/// Composite 8-point Gauss-Legendre on [a, b] with ceil(total_nodes / 8) panels.
QuadratureRule composite_gauss_legendre(double a, double b, int total_nodes);

/// Throws GuardError unless m >= 8 and even.
void require_periodic_nodes(int m);

/// (2 pi / M) sum_{j=0}^{M-1} f(2 pi j / M). Exact for trigonometric
/// polynomials of degree < M.
template <class F>
auto trapezoid_period(int m, F&& integrand) {
    require_periodic_nodes(m);
    const double step = 2.0 * std::numbers::pi / m;
    auto sum = integrand(0.0);
    for (int j = 1; j < m; ++j) {
        sum += integrand(step * j);
    }
    return sum * step;
}

}  // namespace annulus
