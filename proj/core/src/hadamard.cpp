#include "annulus/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "annulus/errors.hpp"
#include "annulus/kernels.hpp"
#include "annulus/oracle.hpp"

namespace annulus {

CauchyData hadamard_datum(int n) {
    if (n < 1) throw GuardError("n", "Hadamard mode index must be >= 1");
    return {TrigSeries::constant(0.0),
            TrigSeries::cosine(n, std::exp(-std::sqrt(static_cast<double>(n))) / n)};
}

double hadamard_closed_form(int n, double r) {
    require_overflow_guard(n, r);
    const double nn = static_cast<double>(n);
    return std::exp(-std::sqrt(nn)) * (std::pow(r, n) - std::pow(r, -n)) / (2.0 * nn * nn);
}

std::vector<InstabilityRecord> instability_table(std::span<const int> modes, SobolevOrder order,
                                                 double r_probe, HadamardSolver solver,
                                                 const Annulus& annulus, const QuadratureSpec& spec) {
    annulus.require_interior(r_probe, "probe-r");
    for (int n : modes) {
        if (n < 1) throw GuardError("n-list", "mode indices must be >= 1");
        require_overflow_guard(n, r_probe);
    }

    std::vector<InstabilityRecord> rows;
    rows.reserve(modes.size());
    for (int n : modes) {
        const CauchyData data = hadamard_datum(n);
        const PolarGrid probe{{r_probe}, PolarGrid::periodic_angles(std::max(256, 8 * n))};
        const Field field = solver == HadamardSolver::oracle
                                ? solve_cauchy_oracle(data, annulus, probe)
                                : solve_cauchy_eq3(data, annulus, probe, spec, Theorem2Mode::modal);

        InstabilityRecord row;
        row.n = n;
        row.data_norm = norm_sobolev(data.h, order);
        for (double u : field.values()) row.solution_sup = std::max(row.solution_sup, std::abs(u - 0.0));
        row.amplification = row.solution_sup / row.data_norm;
        row.closed_form_error = std::abs(field.at(0, 0) - hadamard_closed_form(n, r_probe));
        rows.push_back(row);
    }
    return rows;
}

void FilterSpec::validate(const Annulus& annulus) const {
    annulus.require_interior(r_probe, "probe-r");
    if (!(gain_cap > 0.0)) {
        std::ostringstream msg;
        msg << "gain cap " << gain_cap << " must be > 0";
        throw GuardError("gain-cap", msg.str());
    }
}

FilteredSolution solve_cauchy_filtered(const CauchyData& data, const Annulus& annulus,
                                       const PolarGrid& grid, const FilterSpec& filter,
                                       unsigned threads) {
    filter.validate(annulus);
    std::vector<DroppedMode> dropped;

    auto filter_series = [&](const TrigSeries& f, char part, ModeKind kind) {
        double mean = f.mean();
        const double mean_gain = kind == ModeKind::dirichlet ? 1.0 : std::abs(std::log(filter.r_probe));
        if (mean != 0.0 && mean_gain > filter.gain_cap) {
            dropped.push_back({part, 0, mean_gain});
            mean = 0.0;
        }
        std::vector<double> c(f.cos_coeffs().begin(), f.cos_coeffs().end());
        std::vector<double> s(f.sin_coeffs().begin(), f.sin_coeffs().end());
        for (int n = 1; n <= f.degree(); ++n) {
            if (f.cos_coeff(n) == 0.0 && f.sin_coeff(n) == 0.0) continue;
            const bool representable =
                static_cast<double>(n) * std::abs(std::log(filter.r_probe)) <= kOverflowGuard;
            const double gain = representable ? amplification(kind, n, filter.r_probe)
                                              : std::numeric_limits<double>::infinity();
            if (gain > filter.gain_cap) {
                dropped.push_back({part, n, gain});
                c[static_cast<std::size_t>(n - 1)] = 0.0;
                s[static_cast<std::size_t>(n - 1)] = 0.0;
            }
        }
        std::size_t keep = c.size();
        while (keep > 0 && c[keep - 1] == 0.0 && s[keep - 1] == 0.0) --keep;
        c.resize(keep);
        s.resize(keep);
        return TrigSeries(mean, std::move(c), std::move(s));
    };

    const CauchyData kept{filter_series(data.g, 'g', ModeKind::dirichlet),
                          filter_series(data.h, 'h', ModeKind::neumann)};
    for (double r : grid.radii) {
        annulus.require_interior(r, "grid-r");
        require_overflow_guard(std::max(kept.g.degree(), kept.h.degree()), r);
    }
    Field field = evaluate_on_grid(
        grid, "oracle-filtered", [&](const PolarPoint& p) { return solve_cauchy_oracle_at(kept, p); },
        threads);
    return {std::move(field), std::move(dropped)};
}

}  // namespace annulus
