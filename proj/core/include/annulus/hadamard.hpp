#pragma once

#include <span>
#include <vector>

#include "annulus/boundary.hpp"
#include "annulus/field.hpp"
#include "annulus/quadrature.hpp"

namespace annulus {

/// g = 0, h = e^{-sqrt n} cos(n phi) / n.
CauchyData hadamard_datum(int n);

/// e^{-sqrt n} (r^n - r^-n) / (2 n^2): the value at phi = 0 of the solution
/// driven by hadamard_datum(n).
double hadamard_closed_form(int n, double r);

struct InstabilityRecord {
    int n = 0;
    /// Sobolev norm of h_n.
    double data_norm = 0.0;
    /// max |u(r_probe, phi)| over max(256, 8n) angles.
    double solution_sup = 0.0;
    /// solution_sup / data_norm.
    double amplification = 0.0;
    /// |u(r_probe, 0) - hadamard_closed_form(n, r_probe)|.
    double closed_form_error = 0.0;
};

enum class HadamardSolver { oracle, eq3_modal };

/// One row per entry of `modes`, in input order. The zero solution is the
/// comparison baseline, so the reported solution norm is the distance from it.
std::vector<InstabilityRecord> instability_table(std::span<const int> modes, SobolevOrder order,
                                                 double r_probe, HadamardSolver solver,
                                                 const Annulus& annulus, const QuadratureSpec& spec = {});

struct FilterSpec {
    double r_probe = 0.5;
    /// Largest admissible per-mode gain; +inf keeps every mode.
    double gain_cap = 0.0;

    void validate(const Annulus& annulus) const;
};

struct DroppedMode {
    char part = 'g';   // 'g' or 'h'
    int n = 0;         // 0 is the mean term
    double gain = 0.0;
};

struct FilteredSolution {
    Field field;
    std::vector<DroppedMode> dropped;
};

/// Spectral cutoff: each Fourier mode of the data enters the oracle solve
/// only if its gain at r_probe is <= gain_cap. Gains are the dirichlet
/// profile for g-modes (1 for the mean), the neumann profile for h-modes,
/// and |ln r_probe| for the mean of h.
FilteredSolution solve_cauchy_filtered(const CauchyData& data, const Annulus& annulus,
                                       const PolarGrid& grid, const FilterSpec& filter,
                                       unsigned threads = 1);

}  // namespace annulus
