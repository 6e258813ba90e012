#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace annulus {

/// The ring rho < |z| < 1.
class Annulus {
public:
    explicit Annulus(double inner_radius);

    double inner_radius() const noexcept { return rho_; }
    bool contains_radius(double r) const noexcept { return r > rho_ && r < 1.0; }
    /// Throws GuardError naming `field` unless rho < r < 1.
    void require_interior(double r, const char* field = "radius") const;

private:
    double rho_;
};

struct PolarPoint {
    double radius;
    double angle;
};

/// Tensor grid of radii x angles.
struct PolarGrid {
    std::vector<double> radii;
    std::vector<double> angles;

    /// `count` radii from `first` to `last` inclusive (count == 1 gives `first`).
    static std::vector<double> linspace(double first, double last, int count);
    /// 2 pi j / count, j = 0..count-1.
    static std::vector<double> periodic_angles(int count);
    /// `radial` radii strictly inside the ring, `angular` periodic angles.
    static PolarGrid interior(double inner_radius, int radial, int angular);
};

/// u(r_i, phi_j) on a polar grid, stored row-major with radii outer.
class Field {
public:
    Field(std::vector<double> radii, std::vector<double> angles, std::string solver_tag);

    const std::vector<double>& radii() const noexcept { return radii_; }
    const std::vector<double>& angles() const noexcept { return angles_; }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::string& solver_tag() const noexcept { return tag_; }

    double& at(std::size_t i, std::size_t j) { return values_[i * angles_.size() + j]; }
    double at(std::size_t i, std::size_t j) const { return values_[i * angles_.size() + j]; }

    /// Throws GuardError if any value is not finite.
    void require_finite() const;

private:
    std::vector<double> radii_;
    std::vector<double> angles_;
    std::vector<double> values_;
    std::string tag_;
};

/// Evaluates `point_value` at every grid node. Work is split by contiguous
/// blocks of nodes across `threads` workers; each node is computed
/// independently, so the result does not depend on the thread count.
Field evaluate_on_grid(const PolarGrid& grid, std::string solver_tag,
                       const std::function<double(const PolarPoint&)>& point_value,
                       unsigned threads = 1);

/// n |ln r| <= 690 keeps r^{+-n} inside double range.
inline constexpr double kOverflowGuard = 690.0;

/// Throws GuardError naming n and r when n |ln r| exceeds kOverflowGuard.
void require_overflow_guard(int n, double r);

}  // namespace annulus
