#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "annulus/boundary.hpp"
#include "annulus/field.hpp"
#include "annulus/quadrature.hpp"

namespace annulus {

using Complex = std::complex<double>;

/// Samples of an analytic function on two circles |zeta| = outer_radius and
/// |zeta| = inner_radius, at the equispaced angles 2 pi j / M.
struct AnalyticBoundary {
    double outer_radius = 1.0;
    double inner_radius = 0.0;
    std::vector<Complex> outer_samples;
    std::vector<Complex> inner_samples;

    static AnalyticBoundary sample(const std::function<Complex(Complex)>& f, double outer_radius,
                                   double inner_radius, int samples_per_circle);
};

/// sum_{k = min_power}^{min_power + size - 1} c_k z^k.
class LaurentPoly {
public:
    LaurentPoly(int min_power, std::vector<Complex> coeffs);
    /// Builds from parallel lists of (possibly repeated, unordered) powers.
    static LaurentPoly from_terms(const std::vector<int>& powers, const std::vector<Complex>& coeffs);

    Complex operator()(Complex z) const;

    int min_power() const noexcept { return min_power_; }
    int max_power() const noexcept { return min_power_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

    /// max |f| over the closed ring, taken on its two boundary circles
    /// (maximum modulus principle) at `samples` angles each.
    double max_modulus(double inner_radius, double outer_radius, int samples = 4096) const;

private:
    int min_power_;
    std::vector<Complex> coeffs_;
};

/// The two contour terms of the ring reconstruction formula. For a Laurent
/// polynomial, `outer` reproduces the non-negative powers and `inner` the
/// negative ones.
struct ReconstructionTerms {
    Complex outer;
    Complex inner;
    Complex total() const { return outer + inner; }
};

/// f(z) = (1/2 pi i) int_0^inf e^{-eps} oint_{C_r1} e^{eps z / zeta} f(zeta) dzeta / zeta
///      + (1/2 pi i) int_0^inf e^{-eps} oint_{C_r2} (1/z) e^{eps zeta / z} f(zeta) dzeta
///
/// eps by Gauss-Laguerre (spec.laguerre_order), the contour integrals by the
/// periodic trapezoid rule on the given samples.
ReconstructionTerms reconstruct_terms(const AnalyticBoundary& f, Complex z, const Annulus& annulus,
                                      const QuadratureSpec& spec);
Complex reconstruct_analytic(const AnalyticBoundary& f, Complex z, const Annulus& annulus,
                             const QuadratureSpec& spec);

/// Same integrals with eps restricted to [0, truncation], by the composite
/// Gauss-Legendre rule with spec.lambda_nodes points (default max(16, 25 N)).
ReconstructionTerms partial_reconstruct_terms(const AnalyticBoundary& f, Complex z, double truncation,
                                              const Annulus& annulus, const QuadratureSpec& spec);
Complex partial_reconstruct(const AnalyticBoundary& f, Complex z, double truncation,
                            const Annulus& annulus, const QuadratureSpec& spec);

/// Mmax [e^{-N(1-|z|)} / (1-|z|) + e^{-N(1-rho/|z|)} / (|z|-rho)]: the bound on
/// |partial_reconstruct - f| for truncation N, where Mmax = max |f| on the ring.
double truncation_bound(double max_modulus, double abs_z, double rho, double truncation);

/// Shared read-only Gauss-Laguerre table.
const QuadratureRule& cached_gauss_laguerre(int order);

/// Highest data degree accepted by the quadrature evaluators.
inline constexpr int kMaxQuadratureDegree = 24;

enum class Theorem1Kernel {
    /// Second kernel carries e^{it} from d zeta = i e^{it} dt.
    jacobian_corrected,
    /// Second kernel as typeset, without the e^{it} factor; does not solve
    /// the boundary value problem. Kept for the regression comparison.
    as_printed,
};

/// u with u = g and du/dn = 0 on r = 1, as the real part of the ring
/// reconstruction with both kernels applied to g.
///
/// The first contour is the unit circle, where the Laurent extension G of g
/// equals g. The second contour is moved to |w| = r: on |w| = 1 the
/// integrand has size e^{eps / r}, and the trapezoid sum loses every digit
/// once eps / r reaches a few tens. G is analytic away from 0, so the move
/// leaves the integral unchanged.
double solve_theorem1(const TrigSeries& g, const PolarPoint& point, const QuadratureSpec& spec,
                      Theorem1Kernel kernel = Theorem1Kernel::jacobian_corrected);

/// u with u = 0 and du/dn = h on r = 1 in collapsed form:
/// hbar ln r + sum_n (a_n cos n phi + b_n sin n phi) (r^n - r^-n) / (2n).
double solve_theorem2_modal(const TrigSeries& h, const PolarPoint& point);

/// (N + 40) / r_min.
double lambda_cutoff_rule(int degree, double r_min);

/// u with u = 0 and du/dn = h on r = 1 from the lambda-kernel representation:
///
///   u = -hbar ln r + int_0^Lambda (e^{-lambda/r} - e^{-lambda r}) / lambda * I(lambda) d lambda,
///   I(lambda) = (1/2pi) int_0^{2pi} e^{lambda cos(phi-psi)} cos(lambda sin(phi-psi)) h(psi) d psi.
///
/// The lambda integral of the mean of h is Frullani's 2 hbar ln r, so the
/// total log coefficient is + hbar. I(lambda) is a trapezoid sum over the
/// circle |w| = max(1, lambda / N) in the Laurent variable of h, where the
/// integrand no longer grows like e^lambda.
double solve_theorem2_quadrature(const TrigSeries& h, const PolarPoint& point,
                                 const QuadratureSpec& spec);

enum class Theorem2Mode { modal, quadrature };

/// solve_theorem1(g) + the selected Neumann-data evaluator on h at every grid
/// node. Tagged "eq3-modal" or "eq3-quadrature". An unset lambda cutoff is
/// resolved once per field from the smallest grid radius.
Field solve_cauchy_eq3(const CauchyData& data, const Annulus& annulus, const PolarGrid& grid,
                       const QuadratureSpec& spec, Theorem2Mode mode, unsigned threads = 1);

}  // namespace annulus
