#include "annulus/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>

#include "annulus/errors.hpp"
#include "annulus/oracle.hpp"

namespace annulus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

void require_finite_samples(const std::vector<Complex>& samples, const char* field) {
    for (const auto& s : samples) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw SchemaError(field, "non-finite boundary sample");
        }
    }
}

void require_point_in_ring(Complex z, const Annulus& annulus) {
    const double r = std::abs(z);
    if (!annulus.contains_radius(r)) {
        std::ostringstream msg;
        msg << "|z| = " << r << " outside the open annulus (" << annulus.inner_radius() << ", 1)";
        throw GuardError("z", msg.str());
    }
}

void validate_boundary(const AnalyticBoundary& f, const Annulus& annulus) {
    const double rho = annulus.inner_radius();
    if (!(f.inner_radius >= rho * (1.0 - 1e-12) && f.inner_radius <= f.outer_radius &&
          f.outer_radius <= 1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "contour radii (" << f.inner_radius << ", " << f.outer_radius
            << ") must satisfy rho <= r2 <= r1 <= 1 with rho = " << rho;
        throw GuardError("contours", msg.str());
    }
    if (f.outer_samples.size() != f.inner_samples.size()) {
        throw SchemaError("samples", "outer and inner circles need equal sample counts");
    }
    require_periodic_nodes(static_cast<int>(f.outer_samples.size()));
    require_finite_samples(f.outer_samples, "outer_samples");
    require_finite_samples(f.inner_samples, "inner_samples");
}

/// Evaluates both contour terms for an arbitrary eps rule (weights already
/// include e^{-eps} for Gauss-Laguerre; for finite rules the caller folds it in).
ReconstructionTerms contour_terms(const AnalyticBoundary& f, Complex z, const std::vector<double>& eps,
                                  const std::vector<double>& eps_weights) {
    const auto m = f.outer_samples.size();
    std::vector<Complex> outer_ratio(m), inner_ratio(m), inner_values(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Complex e = unit(kTwoPi * static_cast<double>(j) / static_cast<double>(m));
        outer_ratio[j] = z / (f.outer_radius * e);
        const Complex zeta = f.inner_radius * e;
        inner_ratio[j] = zeta / z;
        // d zeta = i zeta dt; (1/2 pi i) oint -> (1/2 pi) int ... zeta dt.
        inner_values[j] = f.inner_samples[j] * zeta / z;
    }

    ReconstructionTerms terms{0.0, 0.0};
    for (std::size_t i = 0; i < eps.size(); ++i) {
        Complex outer = 0.0, inner = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            outer += std::exp(eps[i] * outer_ratio[j]) * f.outer_samples[j];
            inner += std::exp(eps[i] * inner_ratio[j]) * inner_values[j];
        }
        terms.outer += eps_weights[i] * outer;
        terms.inner += eps_weights[i] * inner;
    }
    terms.outer /= static_cast<double>(m);
    terms.inner /= static_cast<double>(m);
    return terms;
}

void require_quadrature_degree(int degree, const char* field) {
    if (degree > kMaxQuadratureDegree) {
        throw GuardError(field, "degree " + std::to_string(degree) +
                                    " exceeds the quadrature limit " +
                                    std::to_string(kMaxQuadratureDegree));
    }
}

void require_radius(double r) {
    if (!(r > 0.0 && r < 1.0)) {
        std::ostringstream msg;
        msg << "radius " << r << " must satisfy 0 < r < 1";
        throw GuardError("radius", msg.str());
    }
}

}  // namespace

AnalyticBoundary AnalyticBoundary::sample(const std::function<Complex(Complex)>& f, double outer_radius,
                                          double inner_radius, int samples_per_circle) {
    require_periodic_nodes(samples_per_circle);
    AnalyticBoundary out;
    out.outer_radius = outer_radius;
    out.inner_radius = inner_radius;
    out.outer_samples.resize(static_cast<std::size_t>(samples_per_circle));
    out.inner_samples.resize(static_cast<std::size_t>(samples_per_circle));
    for (int j = 0; j < samples_per_circle; ++j) {
        const Complex e = unit(kTwoPi * j / samples_per_circle);
        out.outer_samples[static_cast<std::size_t>(j)] = f(outer_radius * e);
        out.inner_samples[static_cast<std::size_t>(j)] = f(inner_radius * e);
    }
    return out;
}

LaurentPoly::LaurentPoly(int min_power, std::vector<Complex> coeffs)
    : min_power_(min_power), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    for (const auto& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw SchemaError("re", "Laurent coefficient is not finite");
        }
    }
}

LaurentPoly LaurentPoly::from_terms(const std::vector<int>& powers, const std::vector<Complex>& coeffs) {
    if (powers.size() != coeffs.size()) {
        throw SchemaError("powers", "powers and coefficient lists differ in length");
    }
    if (powers.empty()) return LaurentPoly(0, {});
    const auto [lo, hi] = std::minmax_element(powers.begin(), powers.end());
    std::vector<Complex> dense(static_cast<std::size_t>(*hi - *lo + 1), 0.0);
    for (std::size_t k = 0; k < powers.size(); ++k) {
        dense[static_cast<std::size_t>(powers[k] - *lo)] += coeffs[k];
    }
    return LaurentPoly(*lo, std::move(dense));
}

Complex LaurentPoly::operator()(Complex z) const {
    // Horner in z over the shifted polynomial, then scale by z^{min_power}.
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc * std::pow(z, min_power_);
}

double LaurentPoly::max_modulus(double inner_radius, double outer_radius, int samples) const {
    double best = 0.0;
    for (int j = 0; j < samples; ++j) {
        const Complex e = unit(kTwoPi * j / samples);
        best = std::max({best, std::abs((*this)(inner_radius * e)), std::abs((*this)(outer_radius * e))});
    }
    return best;
}

const QuadratureRule& cached_gauss_laguerre(int order) {
    if (order < 1 || order > 64) {
        throw GuardError("laguerre", "order must lie in [1, 64], got " + std::to_string(order));
    }
    static std::array<std::once_flag, 65> flags;
    static std::array<QuadratureRule, 65> rules;
    const auto k = static_cast<std::size_t>(order);
    std::call_once(flags[k], [&] { rules[k] = gauss_laguerre(order); });
    return rules[k];
}

ReconstructionTerms reconstruct_terms(const AnalyticBoundary& f, Complex z, const Annulus& annulus,
                                      const QuadratureSpec& spec) {
    spec.validate();
    require_point_in_ring(z, annulus);
    validate_boundary(f, annulus);
    const auto& rule = cached_gauss_laguerre(spec.laguerre_order);
    return contour_terms(f, z, rule.nodes, rule.weights);
}

Complex reconstruct_analytic(const AnalyticBoundary& f, Complex z, const Annulus& annulus,
                             const QuadratureSpec& spec) {
    return reconstruct_terms(f, z, annulus, spec).total();
}

ReconstructionTerms partial_reconstruct_terms(const AnalyticBoundary& f, Complex z, double truncation,
                                              const Annulus& annulus, const QuadratureSpec& spec) {
    spec.validate();
    require_point_in_ring(z, annulus);
    validate_boundary(f, annulus);
    if (!(truncation > 0.0) || !std::isfinite(truncation)) {
        throw GuardError("truncation", "N must be positive and finite");
    }
    const int nodes = spec.lambda_nodes.value_or(
        std::max(16, static_cast<int>(std::ceil(25.0 * truncation))));
    auto rule = composite_gauss_legendre(0.0, truncation, nodes);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) rule.weights[i] *= std::exp(-rule.nodes[i]);
    return contour_terms(f, z, rule.nodes, rule.weights);
}

Complex partial_reconstruct(const AnalyticBoundary& f, Complex z, double truncation,
                            const Annulus& annulus, const QuadratureSpec& spec) {
    return partial_reconstruct_terms(f, z, truncation, annulus, spec).total();
}

double truncation_bound(double max_modulus, double abs_z, double rho, double truncation) {
    if (!(rho > 0.0 && abs_z > rho && abs_z < 1.0)) {
        std::ostringstream msg;
        msg << "|z| = " << abs_z << " outside (" << rho << ", 1)";
        throw GuardError("z", msg.str());
    }
    if (!(max_modulus >= 0.0)) throw GuardError("max_modulus", "must be >= 0");
    if (!(truncation >= 0.0)) throw GuardError("truncation", "must be >= 0");
    const double outer = std::exp(-truncation * (1.0 - abs_z)) / (1.0 - abs_z);
    const double inner = std::exp(-truncation * (1.0 - rho / abs_z)) / (abs_z - rho);
    return max_modulus * (outer + inner);
}

double solve_theorem1(const TrigSeries& g, const PolarPoint& point, const QuadratureSpec& spec,
                      Theorem1Kernel kernel) {
    spec.validate();
    const double r = point.radius;
    require_radius(r);
    require_quadrature_degree(g.degree(), "g");
    require_overflow_guard(g.degree(), r);
    if (g.is_zero()) return 0.0;

    const Complex z = std::polar(r, point.angle);
    const auto& rule = cached_gauss_laguerre(spec.laguerre_order);
    const auto m = static_cast<std::size_t>(spec.angular_nodes);

    std::vector<Complex> outer_ratio(m), outer_values(m), inner_ratio(m), inner_values(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
        const Complex e = unit(t);
        outer_ratio[j] = z * std::conj(e);
        outer_values[j] = evaluate(g, t);
        const Complex w = r * e;
        inner_ratio[j] = w / z;
        const Complex jacobian = kernel == Theorem1Kernel::jacobian_corrected ? w : Complex(1.0);
        inner_values[j] = laurent_extension(g, w) * jacobian / z;
    }

    Complex total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        Complex sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            sum += std::exp(rule.nodes[i] * outer_ratio[j]) * outer_values[j];
            sum += std::exp(rule.nodes[i] * inner_ratio[j]) * inner_values[j];
        }
        total += rule.weights[i] * sum;
    }
    return total.real() / static_cast<double>(m);
}

double solve_theorem2_modal(const TrigSeries& h, const PolarPoint& point) {
    const double r = point.radius;
    require_radius(r);
    require_overflow_guard(h.degree(), r);
    double u = h.mean() * std::log(r);
    for (int n = 1; n <= h.degree(); ++n) {
        u += (h.cos_coeff(n) * std::cos(n * point.angle) + h.sin_coeff(n) * std::sin(n * point.angle)) *
             solve_mode(ModeKind::neumann, n, r);
    }
    return u;
}

double lambda_cutoff_rule(int degree, double r_min) { return (degree + 40.0) / r_min; }

double solve_theorem2_quadrature(const TrigSeries& h, const PolarPoint& point,
                                 const QuadratureSpec& spec) {
    spec.validate();
    const double r = point.radius;
    require_radius(r);
    require_quadrature_degree(h.degree(), "h");
    require_overflow_guard(h.degree(), r);
    if (h.is_zero()) return 0.0;

    const int degree = h.effective_degree();
    const double required = lambda_cutoff_rule(degree, r);
    const double cutoff = spec.lambda_cutoff.value_or(required);
    if (cutoff < required * (1.0 - 1e-12)) {
        std::ostringstream msg;
        msg << "Lambda = " << cutoff << " below the cutoff rule (N + 40) / r = " << required
            << " for N = " << degree << ", r = " << r;
        throw GuardError("lambda-cutoff", msg.str());
    }
    const int nodes = spec.lambda_nodes.value_or(std::max(16, static_cast<int>(std::ceil(25.0 * cutoff))));
    const auto lambda_rule = composite_gauss_legendre(0.0, cutoff, nodes);

    const auto m = static_cast<std::size_t>(spec.angular_nodes);
    std::vector<Complex> directions(m);
    for (std::size_t j = 0; j < m; ++j) {
        directions[j] = unit(kTwoPi * static_cast<double>(j) / static_cast<double>(m));
    }
    const Complex rotation = unit(point.angle);
    const double spread = 1.0 / r - r;
    const double saddle_scale = std::max(degree, 1);

    double integral = 0.0;
    for (std::size_t k = 0; k < lambda_rule.nodes.size(); ++k) {
        const double lambda = lambda_rule.nodes[k];
        const double radius = std::max(1.0, lambda / saddle_scale);
        Complex inner = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const Complex w = radius * directions[j];
            inner += std::exp(lambda * rotation / w) * laurent_extension(h, w);
        }
        // (e^{-lambda/r} - e^{-lambda r}) / lambda without cancellation near 0.
        const double kernel = std::exp(-lambda * r) * std::expm1(-lambda * spread) / lambda;
        integral += lambda_rule.weights[k] * kernel * inner.real();
    }
    integral /= static_cast<double>(m);
    return -h.mean() * std::log(r) + integral;
}

Field solve_cauchy_eq3(const CauchyData& data, const Annulus& annulus, const PolarGrid& grid,
                       const QuadratureSpec& spec, Theorem2Mode mode, unsigned threads) {
    spec.validate();
    for (double r : grid.radii) {
        annulus.require_interior(r, "grid-r");
        require_overflow_guard(std::max(data.g.degree(), data.h.degree()), r);
    }
    QuadratureSpec resolved = spec;
    if (mode == Theorem2Mode::quadrature && !resolved.lambda_cutoff && !grid.radii.empty()) {
        const double r_min = *std::min_element(grid.radii.begin(), grid.radii.end());
        resolved.lambda_cutoff = lambda_cutoff_rule(data.h.effective_degree(), r_min);
    }
    const char* tag = mode == Theorem2Mode::modal ? "eq3-modal" : "eq3-quadrature";
    return evaluate_on_grid(
        grid, tag,
        [&](const PolarPoint& p) {
            const double u_g = solve_theorem1(data.g, p, resolved);
            const double u_h = mode == Theorem2Mode::modal ? solve_theorem2_modal(data.h, p)
                                                           : solve_theorem2_quadrature(data.h, p, resolved);
            return u_g + u_h;
        },
        threads);
}

}  // namespace annulus
