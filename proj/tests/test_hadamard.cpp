#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "annulus/errors.hpp"
#include "annulus/hadamard.hpp"
#include "annulus/oracle.hpp"
#include "support/oracles.hpp"

using namespace annulus;
using doctest::Approx;

namespace {

std::vector<int> odd_modes(int from, int to) {
    std::vector<int> out;
    for (int n = from; n <= to; n += 2) out.push_back(n);
    return out;
}

double coefficient_mass(const CauchyData& d) {
    double s = std::abs(d.g.mean()) + std::abs(d.h.mean());
    for (const TrigSeries* f : {&d.g, &d.h}) {
        for (int n = 1; n <= f->degree(); ++n) s += std::abs(f->cos_coeff(n)) + std::abs(f->sin_coeff(n));
    }
    return s;
}

TrigSeries random_series(std::mt19937_64& rng, int degree, double scale) {
    return TrigSeries(testing::random_coeffs(rng, 1, scale)[0], testing::random_coeffs(rng, degree, scale),
                      testing::random_coeffs(rng, degree, scale));
}

}  // namespace

TEST_CASE("hadamard_datum") {
    const auto d9 = hadamard_datum(9);
    CHECK(d9.g.is_zero());
    CHECK(d9.h.degree() == 9);
    CHECK(d9.h.cos_coeff(9) == Approx(std::exp(-3.0) / 9.0).epsilon(1e-15));
    CHECK(d9.h.cos_coeff(9) == Approx(0.00553185).epsilon(1e-6));
    for (int n = 1; n < 9; ++n) CHECK(d9.h.cos_coeff(n) == 0.0);
    for (int n = 1; n <= 9; ++n) CHECK(d9.h.sin_coeff(n) == 0.0);
    CHECK(d9.h.mean() == 0.0);
    CHECK(hadamard_datum(1).h.cos_coeff(1) == Approx(0.3678794).epsilon(1e-7));
    CHECK_THROWS_AS(hadamard_datum(0), GuardError);
}

TEST_CASE("closed form at phi = 0") {
    CHECK(hadamard_closed_form(9, 0.5) == Approx(-0.15735112).epsilon(1e-7));
    CHECK(hadamard_closed_form(25, 0.5) == Approx(-std::exp(-5.0) * (std::pow(2.0, 25) - std::pow(2.0, -25)) / 1250.0));
    for (int n : {1, 9, 25, 45}) {
        const double oracle = solve_cauchy_oracle_at(hadamard_datum(n), {0.5, 0.0});
        CHECK(oracle == Approx(hadamard_closed_form(n, 0.5)).epsilon(1e-12));
    }
}

TEST_CASE("instability_table examples at s = 0") {
    const Annulus ring(0.25);
    const std::vector<int> modes{9, 25, 45};
    const auto rows = instability_table(modes, SobolevOrder(0), 0.5, HadamardSolver::oracle, ring);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n == 9);
    CHECK(rows[0].solution_sup == Approx(0.15735112).epsilon(1e-6));
    CHECK(rows[1].solution_sup == Approx(180.87).epsilon(1e-3));
    CHECK(rows[2].solution_sup == Approx(1.06e7).epsilon(5e-3));
    for (const auto& row : rows) {
        CHECK(row.amplification == Approx(row.solution_sup / row.data_norm));
        CHECK(row.closed_form_error <= 1e-9 * row.solution_sup);
    }
    // Sup norm of the datum itself at n = 45.
    CHECK(hadamard_datum(45).h.cos_coeff(45) == Approx(2.71e-5).epsilon(5e-3));
}

TEST_CASE("oracle and eq3-modal tables agree") {
    const Annulus ring(0.25);
    const auto modes = odd_modes(5, 21);
    const auto a = instability_table(modes, SobolevOrder(1), 0.5, HadamardSolver::oracle, ring);
    const auto b = instability_table(modes, SobolevOrder(1), 0.5, HadamardSolver::eq3_modal, ring);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(b[i].n == a[i].n);
        CHECK(b[i].solution_sup == Approx(a[i].solution_sup).epsilon(1e-9));
        CHECK(b[i].data_norm == a[i].data_norm);
    }
}

TEST_CASE("blow-up along the odd sequence at s = 2") {
    const Annulus ring(0.25);
    const auto modes = odd_modes(5, 45);
    const auto rows = instability_table(modes, SobolevOrder(2), 0.5, HadamardSolver::oracle, ring);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].data_norm < rows[i - 1].data_norm);
        CHECK(rows[i].solution_sup > rows[i - 1].solution_sup);
    }
    CHECK(rows.back().solution_sup / rows.front().solution_sup >= 1e6);
}

TEST_CASE("data norms tend to zero") {
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    for (double s : {0.0, 1.0, 2.0, 3.0}) {
        double previous = INFINITY;
        for (int n = 40; n <= 400; n += 40) {
            const double v = norm_sobolev(hadamard_datum(n).h, SobolevOrder(s));
            CHECK(v == Approx(std::exp(-std::sqrt(n)) * std::pow(1.0 + n * n, s / 2.0) * sqrt_pi / n).epsilon(1e-12));
            CHECK(v < previous);
            previous = v;
        }
    }
    // Where the sequence actually drops below 1e-3.
    CHECK(norm_sobolev(hadamard_datum(45).h, SobolevOrder(0)) < 1e-3);
    CHECK(norm_sobolev(hadamard_datum(45).h, SobolevOrder(2)) == Approx(0.0974).epsilon(1e-2));
    for (int n = 158; n <= 400; ++n) CHECK(norm_sobolev(hadamard_datum(n).h, SobolevOrder(2)) < 1e-3);
}

TEST_CASE("solve_cauchy_filtered examples") {
    const Annulus ring(0.25);
    const auto grid = PolarGrid::interior(0.25, 4, 16);

    const auto dropped = solve_cauchy_filtered(hadamard_datum(25), ring, grid, {0.5, 100.0});
    for (double v : dropped.field.values()) CHECK(v == 0.0);
    REQUIRE(dropped.dropped.size() == 1);
    CHECK(dropped.dropped[0].part == 'h');
    CHECK(dropped.dropped[0].n == 25);
    CHECK(dropped.dropped[0].gain == Approx((std::pow(2.0, 25) - std::pow(2.0, -25)) / 50.0).epsilon(1e-12));
    CHECK(dropped.field.solver_tag() == "oracle-filtered");

    const CauchyData cos1{TrigSeries::cosine(1), TrigSeries()};
    const auto kept = solve_cauchy_filtered(cos1, ring, grid, {0.5, 10.0});
    CHECK(kept.dropped.empty());
    CHECK(kept.field.values() == solve_cauchy_oracle(cos1, ring, grid).values());

    std::mt19937_64 rng(3);
    const CauchyData any{random_series(rng, 12, 1.0), random_series(rng, 12, 1.0)};
    const auto all = solve_cauchy_filtered(any, ring, grid, {0.5, std::numeric_limits<double>::infinity()});
    CHECK(all.dropped.empty());
    CHECK(all.field.values() == solve_cauchy_oracle(any, ring, grid).values());
}

TEST_CASE("filter spec validation") {
    const Annulus ring(0.25);
    CHECK_THROWS_AS(FilterSpec({0.5, 0.0}).validate(ring), GuardError);
    CHECK_THROWS_AS(FilterSpec({0.5, -1.0}).validate(ring), GuardError);
    CHECK_THROWS_AS(FilterSpec({0.2, 10.0}).validate(ring), GuardError);
    CHECK_THROWS_AS(FilterSpec({1.0, 10.0}).validate(ring), GuardError);
    CHECK_NOTHROW(FilterSpec({0.5, 10.0}).validate(ring));
}

TEST_CASE("filtered field obeys the Lipschitz bound at r_probe") {
    std::mt19937_64 rng(8);
    const Annulus ring(0.25);
    for (double cap : {1.5, 10.0, 1e3}) {
        for (int trial = 0; trial < 10; ++trial) {
            const CauchyData data{random_series(rng, 30, 2.0), random_series(rng, 30, 2.0)};
            const PolarGrid probe{{0.5}, PolarGrid::periodic_angles(256)};
            const auto filtered = solve_cauchy_filtered(data, ring, probe, {0.5, cap});
            double sup = 0.0;
            for (double v : filtered.field.values()) sup = std::max(sup, std::abs(v));
            CHECK(sup <= cap * coefficient_mass(data) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("filtering leaves kept modes untouched") {
    std::mt19937_64 rng(12);
    const Annulus ring(0.25);
    const CauchyData data{random_series(rng, 20, 1.0), random_series(rng, 20, 1.0)};
    const FilterSpec filter{0.5, 50.0};
    // Rebuild the data restricted to the kept modes and solve it unfiltered.
    TrigSeries g = data.g, h = data.h;
    std::vector<double> ga(g.cos_coeffs().begin(), g.cos_coeffs().end()), gb(g.sin_coeffs().begin(), g.sin_coeffs().end());
    std::vector<double> ha(h.cos_coeffs().begin(), h.cos_coeffs().end()), hb(h.sin_coeffs().begin(), h.sin_coeffs().end());
    double g0 = g.mean(), h0 = h.mean();
    const auto grid = PolarGrid::interior(0.25, 5, 24);
    const auto filtered = solve_cauchy_filtered(data, ring, grid, filter);
    CHECK_FALSE(filtered.dropped.empty());
    for (const auto& d : filtered.dropped) {
        auto& a = d.part == 'g' ? ga : ha;
        auto& b = d.part == 'g' ? gb : hb;
        if (d.n == 0) {
            (d.part == 'g' ? g0 : h0) = 0.0;
        } else {
            a[static_cast<std::size_t>(d.n - 1)] = 0.0;
            b[static_cast<std::size_t>(d.n - 1)] = 0.0;
        }
        CHECK(d.gain > filter.gain_cap);
    }
    const CauchyData kept{TrigSeries(g0, ga, gb), TrigSeries(h0, ha, hb)};
    const auto expected = solve_cauchy_oracle(kept, ring, grid);
    for (std::size_t i = 0; i < expected.values().size(); ++i) {
        CHECK(std::abs(filtered.field.values()[i] - expected.values()[i]) <= 1e-12 * std::max(1.0, std::abs(expected.values()[i])));
    }
}
