#include "annulus/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(double v, const char* field) {
    if (!std::isfinite(v)) {
        throw SchemaError(field, "coefficient is not finite");
    }
}

std::vector<double> padded(std::span<const double> v, std::size_t n) {
    std::vector<double> out(v.begin(), v.end());
    out.resize(n, 0.0);
    return out;
}

}  // namespace

TrigSeries::TrigSeries(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : a0_(a0), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    if (cos_.size() != sin_.size()) {
        throw SchemaError("sin", "cos and sin coefficient lists differ in length (" +
                                     std::to_string(cos_.size()) + " vs " +
                                     std::to_string(sin_.size()) + ")");
    }
    require_finite(a0_, "a0");
    for (double c : cos_) require_finite(c, "cos");
    for (double s : sin_) require_finite(s, "sin");
}

TrigSeries TrigSeries::constant(double value) { return TrigSeries(value, {}, {}); }

TrigSeries TrigSeries::cosine(int n, double amplitude) {
    if (n < 0) throw GuardError("n", "mode index must be non-negative");
    if (n == 0) return constant(amplitude);
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    c.back() = amplitude;
    return TrigSeries(0.0, std::move(c), std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

TrigSeries TrigSeries::sine(int n, double amplitude) {
    if (n < 1) throw GuardError("n", "sine mode index must be >= 1");
    std::vector<double> s(static_cast<std::size_t>(n), 0.0);
    s.back() = amplitude;
    return TrigSeries(0.0, std::vector<double>(static_cast<std::size_t>(n), 0.0), std::move(s));
}

double TrigSeries::cos_coeff(int n) const noexcept {
    if (n < 1 || n > degree()) return 0.0;
    return cos_[static_cast<std::size_t>(n - 1)];
}

double TrigSeries::sin_coeff(int n) const noexcept {
    if (n < 1 || n > degree()) return 0.0;
    return sin_[static_cast<std::size_t>(n - 1)];
}

bool TrigSeries::is_zero() const noexcept {
    return a0_ == 0.0 && effective_degree() == 0;
}

int TrigSeries::effective_degree() const noexcept {
    for (int n = degree(); n >= 1; --n) {
        if (cos_coeff(n) != 0.0 || sin_coeff(n) != 0.0) return n;
    }
    return 0;
}

TrigSeries TrigSeries::rotated(double shift) const {
    std::vector<double> c(cos_.size()), s(sin_.size());
    for (int n = 1; n <= degree(); ++n) {
        const double cn = std::cos(n * shift);
        const double sn = std::sin(n * shift);
        const double a = cos_coeff(n);
        const double b = sin_coeff(n);
        c[static_cast<std::size_t>(n - 1)] = a * cn - b * sn;
        s[static_cast<std::size_t>(n - 1)] = a * sn + b * cn;
    }
    return TrigSeries(a0_, std::move(c), std::move(s));
}

TrigSeries TrigSeries::derivative() const {
    std::vector<double> c(cos_.size()), s(sin_.size());
    for (int n = 1; n <= degree(); ++n) {
        c[static_cast<std::size_t>(n - 1)] = n * sin_coeff(n);
        s[static_cast<std::size_t>(n - 1)] = -n * cos_coeff(n);
    }
    return TrigSeries(0.0, std::move(c), std::move(s));
}

TrigSeries TrigSeries::without_mean() const { return TrigSeries(0.0, cos_, sin_); }

TrigSeries operator+(const TrigSeries& lhs, const TrigSeries& rhs) {
    const auto n = static_cast<std::size_t>(std::max(lhs.degree(), rhs.degree()));
    auto c = padded(lhs.cos_, n);
    auto s = padded(lhs.sin_, n);
    for (std::size_t k = 0; k < rhs.cos_.size(); ++k) {
        c[k] += rhs.cos_[k];
        s[k] += rhs.sin_[k];
    }
    return TrigSeries(lhs.a0_ + rhs.a0_, std::move(c), std::move(s));
}

TrigSeries operator*(double scale, const TrigSeries& f) {
    auto c = f.cos_;
    auto s = f.sin_;
    for (auto& v : c) v *= scale;
    for (auto& v : s) v *= scale;
    return TrigSeries(scale * f.a0_, std::move(c), std::move(s));
}

CauchyData operator+(const CauchyData& lhs, const CauchyData& rhs) {
    return {lhs.g + rhs.g, lhs.h + rhs.h};
}

CauchyData operator*(double scale, const CauchyData& data) {
    return {scale * data.g, scale * data.h};
}

SobolevOrder::SobolevOrder(double s) : s_(s) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw GuardError("sobolev", "order must be finite and >= 0");
    }
}

double evaluate(const TrigSeries& f, double phi) {
    const double x = std::fmod(phi, kTwoPi);
    double sum = f.mean();
    for (int n = 1; n <= f.degree(); ++n) {
        sum += f.cos_coeff(n) * std::cos(n * x) + f.sin_coeff(n) * std::sin(n * x);
    }
    return sum;
}

std::complex<double> laurent_extension(const TrigSeries& f, std::complex<double> w) {
    // a cos + b sin = c w^n + conj(c) w^{-n} with c = (a - i b) / 2.
    const std::complex<double> inv = 1.0 / w;
    std::complex<double> pos = 1.0;
    std::complex<double> neg = 1.0;
    std::complex<double> sum = f.mean();
    for (int n = 1; n <= f.degree(); ++n) {
        pos *= w;
        neg *= inv;
        const std::complex<double> c(0.5 * f.cos_coeff(n), -0.5 * f.sin_coeff(n));
        sum += c * pos + std::conj(c) * neg;
    }
    return sum;
}

TrigSeries coeffs_from_samples(std::span<const double> samples, int target_degree) {
    if (target_degree < 0) throw GuardError("degree", "target degree must be >= 0");
    const auto m = static_cast<long>(samples.size());
    if (m < 2L * target_degree + 2) {
        throw GuardError("samples", "need at least 2N+2 = " + std::to_string(2 * target_degree + 2) +
                                        " samples for degree " + std::to_string(target_degree) +
                                        ", got " + std::to_string(m));
    }
    for (double v : samples) require_finite(v, "samples");

    double a0 = 0.0;
    for (double v : samples) a0 += v;
    a0 /= static_cast<double>(m);

    std::vector<double> c(static_cast<std::size_t>(target_degree), 0.0);
    std::vector<double> s(static_cast<std::size_t>(target_degree), 0.0);
    for (int n = 1; n <= target_degree; ++n) {
        double ac = 0.0, as = 0.0;
        for (long j = 0; j < m; ++j) {
            // Reduce n j mod M before scaling so the angle stays in [0, 2 pi).
            const double theta = kTwoPi * static_cast<double>((n * j) % m) / static_cast<double>(m);
            ac += samples[static_cast<std::size_t>(j)] * std::cos(theta);
            as += samples[static_cast<std::size_t>(j)] * std::sin(theta);
        }
        c[static_cast<std::size_t>(n - 1)] = 2.0 * ac / static_cast<double>(m);
        s[static_cast<std::size_t>(n - 1)] = 2.0 * as / static_cast<double>(m);
    }
    return TrigSeries(a0, std::move(c), std::move(s));
}

double norm_sobolev(const TrigSeries& f, SobolevOrder s) {
    double sum = 0.0;
    for (int n = 1; n <= f.degree(); ++n) {
        const double a = f.cos_coeff(n);
        const double b = f.sin_coeff(n);
        sum += std::pow(1.0 + static_cast<double>(n) * n, s.value()) * (a * a + b * b);
    }
    return std::sqrt(kTwoPi * f.mean() * f.mean() + std::numbers::pi * sum);
}

double norm_sup(const TrigSeries& f, int grid_size) {
    if (grid_size < 8 * (f.degree() + 1)) {
        throw GuardError("grid_size", "sup-norm grid needs >= 8 (degree + 1) = " +
                                          std::to_string(8 * (f.degree() + 1)) + " points");
    }
    double best = 0.0;
    for (int j = 0; j < grid_size; ++j) {
        best = std::max(best, std::abs(evaluate(f, kTwoPi * j / grid_size)));
    }
    return best;
}

TrigSeries auxiliary_dirichlet_data(const TrigSeries& h) {
    std::vector<double> c(static_cast<std::size_t>(h.degree()));
    std::vector<double> s(static_cast<std::size_t>(h.degree()));
    for (int n = 1; n <= h.degree(); ++n) {
        c[static_cast<std::size_t>(n - 1)] = -h.sin_coeff(n) / n;
        s[static_cast<std::size_t>(n - 1)] = h.cos_coeff(n) / n;
    }
    return TrigSeries(std::numbers::pi * h.mean(), std::move(c), std::move(s));
}

}  // namespace annulus
