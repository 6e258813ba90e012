#include "annulus/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

struct LaguerrePair {
    double value;      // L_n(x)
    double previous;   // L_{n-1}(x)
};

LaguerrePair laguerre(int n, double x) {
    double prev = 1.0;       // L_0
    double curr = 1.0 - x;   // L_1
    if (n == 0) return {prev, 0.0};
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * curr - k * prev) / (k + 1.0);
        prev = curr;
        curr = next;
    }
    return {curr, prev};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (laguerre_order < 1 || laguerre_order > 64) {
        throw GuardError("laguerre", "order must lie in [1, 64], got " + std::to_string(laguerre_order));
    }
    require_periodic_nodes(angular_nodes);
    if (lambda_cutoff && !(*lambda_cutoff > 0.0 && std::isfinite(*lambda_cutoff))) {
        throw GuardError("lambda-cutoff", "must be positive and finite");
    }
    if (lambda_nodes && *lambda_nodes < 16) {
        throw GuardError("lambda-nodes", "need at least 16 nodes, got " + std::to_string(*lambda_nodes));
    }
}

void require_periodic_nodes(int m) {
    if (m < 8 || m % 2 != 0) {
        throw GuardError("angular", "periodic node count must be even and >= 8, got " + std::to_string(m));
    }
}

QuadratureRule gauss_laguerre(int order) {
    if (order < 1 || order > 64) {
        throw GuardError("laguerre", "order must lie in [1, 64], got " + std::to_string(order));
    }
    const auto n = static_cast<Eigen::Index>(order);
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
    for (Eigen::Index k = 0; k < n; ++k) diag(k) = 2.0 * static_cast<double>(k) + 1.0;
    for (Eigen::Index k = 0; k + 1 < n; ++k) sub(k) = static_cast<double>(k) + 1.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
        double x = solver.eigenvalues()(i);
        for (int iter = 0; iter < 3; ++iter) {
            const auto [value, previous] = laguerre(order, x);
            const double slope = order * (value - previous) / x;
            const double step = value / slope;
            x -= step;
            if (std::abs(step) <= 1e-15 * x) break;
        }
        const double next = laguerre(order + 1, x).value;
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] =
            x / ((order + 1.0) * (order + 1.0) * next * next);
    }
    return rule;
}

QuadratureRule gauss_legendre(int order) {
    if (order < 1) throw GuardError("order", "Gauss-Legendre order must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            derivative = order * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / derivative;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(order - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(order - 1 - i)] = w;
    }
    return rule;
}

QuadratureRule composite_gauss_legendre(double a, double b, int total_nodes) {
    constexpr int kPanelOrder = 8;
    if (total_nodes < kPanelOrder) {
        throw GuardError("lambda-nodes", "composite rule needs at least 8 nodes");
    }
    if (!(b > a)) throw GuardError("interval", "composite rule needs b > a");
    static const QuadratureRule base = gauss_legendre(kPanelOrder);
    const int panels = (total_nodes + kPanelOrder - 1) / kPanelOrder;
    const double width = (b - a) / panels;

    QuadratureRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(panels * kPanelOrder));
    rule.weights.reserve(static_cast<std::size_t>(panels * kPanelOrder));
    for (int p = 0; p < panels; ++p) {
        const double centre = a + (p + 0.5) * width;
        for (int k = 0; k < kPanelOrder; ++k) {
            rule.nodes.push_back(centre + 0.5 * width * base.nodes[static_cast<std::size_t>(k)]);
            rule.weights.push_back(0.5 * width * base.weights[static_cast<std::size_t>(k)]);
        }
    }
    return rule;
}

}  // namespace annulus
