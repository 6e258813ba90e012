#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "annulus/errors.hpp"
#include "annulus/hadamard.hpp"
#include "annulus/kernels.hpp"
#include "annulus/oracle.hpp"
#include "support/oracles.hpp"

using namespace annulus;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

LaurentPoly random_laurent(std::mt19937_64& rng, int lo, int hi) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<Complex> c;
    for (int k = lo; k <= hi; ++k) c.emplace_back(dist(rng), dist(rng));
    return LaurentPoly(lo, std::move(c));
}

AnalyticBoundary sample_poly(const LaurentPoly& f, double rho, int m) {
    return AnalyticBoundary::sample([&](Complex z) { return f(z); }, 1.0, rho, m);
}

TrigSeries random_series(std::mt19937_64& rng, int degree) {
    return TrigSeries(testing::random_coeffs(rng, 1)[0], testing::random_coeffs(rng, degree),
                      testing::random_coeffs(rng, degree));
}

}  // namespace

TEST_CASE("LaurentPoly evaluation and max modulus") {
    const auto f = LaurentPoly::from_terms({2, -1, 2}, {Complex(1.0), Complex(3.0), Complex(0.5)});
    CHECK(f.min_power() == -1);
    CHECK(f.max_power() == 2);
    const Complex z(0.3, -0.7);
    const Complex expected = 1.5 * z * z + 3.0 / z;
    CHECK(std::abs(f(z) - expected) < 1e-14);
    const std::vector<Complex> c{Complex(0.2, 0.1), Complex(-1.0), Complex(0.0, 2.0), Complex(0.5)};
    CHECK(std::abs(LaurentPoly(-2, c)(z) - testing::laurent_direct(-2, c, z)) < 1e-13);
    CHECK(LaurentPoly::from_terms({0}, {Complex(2.0)}).max_modulus(0.3, 1.0) == Approx(2.0));
    CHECK_THROWS_AS(LaurentPoly::from_terms({0, 1}, {Complex(1.0)}), SchemaError);
}

TEST_CASE("reconstruct_analytic examples") {
    const Annulus ring(0.3);
    const QuadratureSpec spec{16, 128};
    const auto one = AnalyticBoundary::sample([](Complex) { return Complex(1.0); }, 1.0, 0.3, 128);
    CHECK(std::abs(reconstruct_analytic(one, 0.6, ring, spec) - 1.0) < 1e-10);
    const auto inv = AnalyticBoundary::sample([](Complex z) { return 1.0 / z; }, 1.0, 0.3, 128);
    CHECK(std::abs(reconstruct_analytic(inv, 0.5, ring, spec) - 2.0) < 1e-10);
    const auto mixed = AnalyticBoundary::sample([](Complex z) { return z * z + 3.0 / z; }, 1.0, 0.3, 128);
    CHECK(std::abs(reconstruct_analytic(mixed, 0.6, ring, spec) - 5.36) < 1e-10);
}

TEST_CASE("reconstruction is exact on random Laurent polynomials") {
    std::mt19937_64 rng(101);
    const Annulus ring(0.3);
    std::uniform_real_distribution<double> radius(0.32, 0.98), angle(0.0, 2.0 * kPi);
    for (auto [q, m] : {std::pair{8, 64}, std::pair{16, 128}, std::pair{24, 256}}) {
        const QuadratureSpec spec{q, m};
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = random_laurent(rng, -6, 6);
            const auto data = sample_poly(f, 0.3, m);
            for (int p = 0; p < 10; ++p) {
                const Complex z = std::polar(radius(rng), angle(rng));
                CHECK(std::abs(reconstruct_analytic(data, z, ring, spec) - f(z)) <= 1e-8);
            }
        }
    }
}

TEST_CASE("the two kernels split the Laurent series") {
    const Annulus ring(0.3);
    const QuadratureSpec spec{16, 128};
    const auto positive = sample_poly(LaurentPoly(0, {Complex(1.0), Complex(0.5, 1.0), Complex(-2.0)}), 0.3, 128);
    const auto negative = sample_poly(LaurentPoly(-3, {Complex(0.4), Complex(1.0, -1.0), Complex(2.0)}), 0.3, 128);
    for (Complex z : {Complex(0.5, 0.1), Complex(-0.2, 0.7), Complex(0.9)}) {
        CHECK(std::abs(reconstruct_terms(positive, z, ring, spec).inner) <= 1e-10);
        CHECK(std::abs(reconstruct_terms(negative, z, ring, spec).outer) <= 1e-10);
    }
}

TEST_CASE("partial reconstruction") {
    const Annulus ring(0.3);
    QuadratureSpec spec{16, 128};
    const auto one = AnalyticBoundary::sample([](Complex) { return Complex(1.0); }, 1.0, 0.3, 128);
    CHECK(std::abs(partial_reconstruct(one, 0.6, 200.0, ring, spec) - 1.0) <= 1e-8);
    const double err10 = std::abs(partial_reconstruct(one, 0.6, 10.0, ring, spec) - 1.0);
    CHECK(err10 <= truncation_bound(1.0, 0.6, 0.3, 10.0));
    CHECK(err10 > 1e-6);

    const auto f = LaurentPoly(-1, {Complex(3.0), Complex(0.0), Complex(0.0), Complex(1.0)});
    const auto data = sample_poly(f, 0.3, 128);
    double previous = INFINITY;
    for (double n : {2.0, 5.0, 10.0, 20.0, 40.0}) {
        const double e = std::abs(partial_reconstruct(data, Complex(0.0, 0.6), n, ring, spec) - f(Complex(0.0, 0.6)));
        CHECK(e < previous);
        previous = e;
    }
}

TEST_CASE("truncation_bound") {
    CHECK(truncation_bound(1.0, 0.5, 0.25, 10.0) == Approx(0.0404277).epsilon(1e-6));
    CHECK(truncation_bound(0.0, 0.5, 0.25, 10.0) == 0.0);
    CHECK(truncation_bound(1.0, 0.5, 0.25, 1000.0) < 1e-100);
    const double expected = std::exp(-5.0) / 0.5 + std::exp(-5.0) / 0.25;
    CHECK(truncation_bound(1.0, 0.5, 0.25, 10.0) == Approx(expected).epsilon(1e-14));
}

TEST_CASE("solve_theorem1 examples") {
    const QuadratureSpec spec;
    CHECK(solve_theorem1(TrigSeries::constant(1.0), {0.5, 0.3}, spec) == Approx(1.0).epsilon(1e-10));
    CHECK(solve_theorem1(TrigSeries::cosine(1), {0.5, 0.0}, spec) == Approx(1.25).epsilon(1e-10));
    CHECK(solve_theorem1(TrigSeries::cosine(2), {0.4, 0.0}, spec) ==
          Approx((std::pow(0.4, 2) + std::pow(0.4, -2)) / 2.0).epsilon(1e-10));
    CHECK(solve_theorem1(TrigSeries::cosine(2), {0.4, 0.0}, spec) == Approx(3.2050000).epsilon(1e-9));
}

TEST_CASE("the uncorrected kernel does not solve the problem") {
    const QuadratureSpec spec;
    const double printed = solve_theorem1(TrigSeries::cosine(1), {0.5, 0.0}, spec, Theorem1Kernel::as_printed);
    CHECK(std::abs(printed - 1.25) >= 0.1);
}

TEST_CASE("solve_theorem1 matches the oracle on random data") {
    std::mt19937_64 rng(5);
    const QuadratureSpec spec;
    for (int trial = 0; trial < 5; ++trial) {
        const auto g = random_series(rng, 10);
        for (double r : {0.3, 0.55, 0.95}) {
            for (double phi : {0.0, 2.1}) {
                const double expected = solve_cauchy_oracle_at({g, TrigSeries()}, {r, phi});
                CHECK(std::abs(solve_theorem1(g, {r, phi}, spec) - expected) <= 1e-8);
            }
        }
    }
}

TEST_CASE("solve_theorem2_modal examples") {
    CHECK(solve_theorem2_modal(TrigSeries::cosine(1), {0.5, 0.0}) == Approx(-0.75).epsilon(1e-14));
    CHECK(solve_theorem2_modal(TrigSeries::constant(1.0), {0.5, 1.0}) == Approx(std::log(0.5)).epsilon(1e-14));
    CHECK(solve_theorem2_modal(TrigSeries(), {0.5, 1.0}) == 0.0);
}

TEST_CASE("solve_theorem2_quadrature") {
    QuadratureSpec spec;
    spec.lambda_cutoff = 82.0;
    spec.lambda_nodes = 2000;
    CHECK(solve_theorem2_quadrature(TrigSeries::cosine(1), {0.5, 0.0}, spec) == Approx(-0.75).epsilon(1e-6));
    spec.lambda_cutoff = 84.0;
    CHECK(solve_theorem2_quadrature(TrigSeries::cosine(2), {0.5, 0.0}, spec) == Approx(-0.9375).epsilon(1e-6));
    CHECK(solve_theorem2_quadrature(TrigSeries::constant(1.0), {0.5, 0.0}, spec) ==
          Approx(std::log(0.5)).epsilon(1e-6));

    QuadratureSpec low;
    low.lambda_cutoff = 10.0;
    CHECK_THROWS_AS(solve_theorem2_quadrature(TrigSeries::cosine(1), {0.5, 0.0}, low), GuardError);
    CHECK(lambda_cutoff_rule(2, 0.5) == Approx(84.0));
}

TEST_CASE("quadrature paths refuse high-degree data") {
    const auto high = TrigSeries::cosine(kMaxQuadratureDegree + 1);
    CHECK_THROWS_AS(solve_theorem1(high, {0.5, 0.0}, {}), GuardError);
    CHECK_THROWS_AS(solve_theorem2_quadrature(high, {0.5, 0.0}, {}), GuardError);
    CHECK_NOTHROW(solve_theorem2_modal(high, {0.5, 0.0}));
}

TEST_CASE("solve_cauchy_eq3 examples") {
    const Annulus ring(0.25);
    const PolarGrid point{{0.5}, {0.0}};
    const QuadratureSpec spec;
    const CauchyData both{TrigSeries::cosine(1), TrigSeries::cosine(2)};
    const auto modal = solve_cauchy_eq3(both, ring, point, spec, Theorem2Mode::modal);
    CHECK(modal.at(0, 0) == Approx(0.3125).epsilon(1e-10));
    CHECK(modal.solver_tag() == "eq3-modal");

    const auto zero = solve_cauchy_eq3(CauchyData{}, ring, PolarGrid::interior(0.25, 3, 8), spec, Theorem2Mode::modal);
    for (double v : zero.values()) CHECK(std::abs(v) <= 1e-15);

    const auto h9 = solve_cauchy_eq3(hadamard_datum(9), ring, point, spec, Theorem2Mode::modal);
    CHECK(h9.at(0, 0) == Approx(-0.15735112).epsilon(1e-6));
}

TEST_CASE("solve_cauchy_eq3 agrees with the oracle on a 5 x 16 grid") {
    std::mt19937_64 rng(211);
    const Annulus ring(0.25);
    const auto grid = PolarGrid::interior(0.25, 5, 16);
    const QuadratureSpec spec;
    const CauchyData data{random_series(rng, 6), random_series(rng, 4)};
    const auto oracle = solve_cauchy_oracle(data, ring, grid);
    const auto modal = solve_cauchy_eq3(data, ring, grid, spec, Theorem2Mode::modal, 2);
    const auto quad = solve_cauchy_eq3(data, ring, grid, spec, Theorem2Mode::quadrature, 2);
    CHECK(quad.solver_tag() == "eq3-quadrature");
    for (std::size_t i = 0; i < oracle.values().size(); ++i) {
        const double scale = std::max(1.0, std::abs(oracle.values()[i]));
        CHECK(std::abs(modal.values()[i] - oracle.values()[i]) <= 1e-8 * scale);
        CHECK(std::abs(quad.values()[i] - oracle.values()[i]) <= 1e-5 * scale);
    }
}

TEST_CASE("solve_cauchy_eq3 is linear in the data") {
    std::mt19937_64 rng(307);
    const Annulus ring(0.25);
    const auto grid = PolarGrid::interior(0.25, 3, 8);
    const QuadratureSpec spec;
    const CauchyData d1{random_series(rng, 5), random_series(rng, 3)};
    const CauchyData d2{random_series(rng, 2), random_series(rng, 5)};
    const auto lhs = solve_cauchy_eq3(2.0 * d1 + (-0.5) * d2, ring, grid, spec, Theorem2Mode::modal);
    const auto f1 = solve_cauchy_eq3(d1, ring, grid, spec, Theorem2Mode::modal);
    const auto f2 = solve_cauchy_eq3(d2, ring, grid, spec, Theorem2Mode::modal);
    for (std::size_t i = 0; i < lhs.values().size(); ++i) {
        const double rhs = 2.0 * f1.values()[i] - 0.5 * f2.values()[i];
        CHECK(std::abs(lhs.values()[i] - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}
