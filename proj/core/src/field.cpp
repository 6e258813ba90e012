#include "annulus/field.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

#include "annulus/errors.hpp"

namespace annulus {

Annulus::Annulus(double inner_radius) : rho_(inner_radius) {
    if (!(inner_radius > 0.0 && inner_radius < 1.0)) {
        std::ostringstream msg;
        msg << "inner radius " << inner_radius << " must satisfy 0 < rho < 1";
        throw GuardError("inner-radius", msg.str());
    }
}

void Annulus::require_interior(double r, const char* field) const {
    if (!contains_radius(r)) {
        std::ostringstream msg;
        msg << "radius " << r << " outside the open annulus (" << rho_ << ", 1)";
        throw GuardError(field, msg.str());
    }
}

std::vector<double> PolarGrid::linspace(double first, double last, int count) {
    if (count < 1) throw GuardError("grid-r", "radial count must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] =
            count == 1 ? first : first + (last - first) * i / (count - 1);
    }
    return out;
}

std::vector<double> PolarGrid::periodic_angles(int count) {
    if (count < 1) throw GuardError("grid-phi", "angular count must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        out[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / count;
    }
    return out;
}

PolarGrid PolarGrid::interior(double inner_radius, int radial, int angular) {
    std::vector<double> radii(static_cast<std::size_t>(radial));
    for (int i = 0; i < radial; ++i) {
        radii[static_cast<std::size_t>(i)] =
            inner_radius + (1.0 - inner_radius) * (i + 1) / (radial + 1);
    }
    return {std::move(radii), periodic_angles(angular)};
}

Field::Field(std::vector<double> radii, std::vector<double> angles, std::string solver_tag)
    : radii_(std::move(radii)),
      angles_(std::move(angles)),
      values_(radii_.size() * angles_.size(), 0.0),
      tag_(std::move(solver_tag)) {}

void Field::require_finite() const {
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k])) {
            std::ostringstream msg;
            msg << "non-finite value at r=" << radii_[k / angles_.size()]
                << ", phi=" << angles_[k % angles_.size()];
            throw GuardError("field", msg.str());
        }
    }
}

Field evaluate_on_grid(const PolarGrid& grid, std::string solver_tag,
                       const std::function<double(const PolarPoint&)>& point_value,
                       unsigned threads) {
    Field field(grid.radii, grid.angles, std::move(solver_tag));
    const std::size_t total = grid.radii.size() * grid.angles.size();
    const std::size_t columns = grid.angles.size();

    auto run_block = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const std::size_t i = k / columns;
            const std::size_t j = k % columns;
            field.at(i, j) = point_value({grid.radii[i], grid.angles[j]});
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1));
    if (workers == 1) {
        run_block(0, total);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w) {
                const std::size_t begin = total * w / workers;
                const std::size_t end = total * (w + 1) / workers;
                pool.emplace_back([&, w, begin, end] {
                    try {
                        run_block(begin, end);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    field.require_finite();
    return field;
}

void require_overflow_guard(int n, double r) {
    if (static_cast<double>(n) * std::abs(std::log(r)) > kOverflowGuard) {
        std::ostringstream msg;
        msg << "overflow guard violated: n=" << n << ", r=" << r << " gives n|ln r| = "
            << static_cast<double>(n) * std::abs(std::log(r)) << " > " << kOverflowGuard;
        throw GuardError("degree", msg.str());
    }
}

}  // namespace annulus
