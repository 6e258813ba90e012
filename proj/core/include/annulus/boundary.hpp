#pragma once

#include <complex>
#include <span>
#include <vector>

namespace annulus {

/// Finite real trigonometric polynomial on the unit circle,
///
///     f(phi) = a0 + sum_{n=1..N} (a_n cos(n phi) + b_n sin(n phi)).
///
/// Immutable once built; the constructor rejects mismatched coefficient
/// lengths and non-finite values with SchemaError.
class TrigSeries {
public:
    TrigSeries() = default;
    TrigSeries(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    static TrigSeries constant(double value);
    /// amplitude * cos(n phi); n = 0 gives the constant series.
    static TrigSeries cosine(int n, double amplitude = 1.0);
    /// amplitude * sin(n phi), n >= 1.
    static TrigSeries sine(int n, double amplitude = 1.0);

    double mean() const noexcept { return a0_; }
    std::span<const double> cos_coeffs() const noexcept { return cos_; }
    std::span<const double> sin_coeffs() const noexcept { return sin_; }
    int degree() const noexcept { return static_cast<int>(cos_.size()); }

    /// a_n for n >= 1 (0 beyond the degree); a_0 is mean().
    double cos_coeff(int n) const noexcept;
    double sin_coeff(int n) const noexcept;

    bool is_zero() const noexcept;

    /// Degree of the highest mode with a nonzero coefficient.
    int effective_degree() const noexcept;

    /// f(phi - shift).
    TrigSeries rotated(double shift) const;
    /// d f / d phi.
    TrigSeries derivative() const;
    /// Copy with the mean term set to zero.
    TrigSeries without_mean() const;

    friend TrigSeries operator+(const TrigSeries& lhs, const TrigSeries& rhs);
    friend TrigSeries operator*(double scale, const TrigSeries& f);

private:
    double a0_ = 0.0;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

/// Boundary value g and outward normal derivative h on r = 1.
struct CauchyData {
    TrigSeries g;
    TrigSeries h;
};

CauchyData operator+(const CauchyData& lhs, const CauchyData& rhs);
CauchyData operator*(double scale, const CauchyData& data);

/// Smoothness order of the Fourier-weighted Sobolev norm; s >= 0.
class SobolevOrder {
public:
    explicit SobolevOrder(double s);
    double value() const noexcept { return s_; }

private:
    double s_;
};

/// Sums a0 then n = 1..N in ascending order; phi is reduced mod 2 pi.
double evaluate(const TrigSeries& f, double phi);

/// Laurent extension of f: replaces e^{i phi} by w, so that
/// G(e^{i phi}) = f(phi) and G is analytic in C \ {0}.
std::complex<double> laurent_extension(const TrigSeries& f, std::complex<double> w);

/// Discrete Fourier coefficients of equispaced samples f_j = f(2 pi j / M).
/// Requires M >= 2N + 2.
TrigSeries coeffs_from_samples(std::span<const double> samples, int target_degree);

/// sqrt(2 pi a0^2 + pi sum_n (1 + n^2)^s (a_n^2 + b_n^2)).
double norm_sobolev(const TrigSeries& f, SobolevOrder s);

/// Grid approximation of the sup norm: max |f| over grid_size equispaced
/// angles. Requires grid_size >= 8 (degree + 1).
double norm_sup(const TrigSeries& f, int grid_size);

/// g(phi) = (1/2pi) int_0^{2pi} psi h(phi + psi) dpsi in closed form:
/// mean pi * hbar, and a cos + b sin of mode n maps to (a sin - b cos) / n.
/// g' = h - hbar.
TrigSeries auxiliary_dirichlet_data(const TrigSeries& h);

}  // namespace annulus
