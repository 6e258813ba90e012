#pragma once

#include "annulus/boundary.hpp"
#include "annulus/field.hpp"

namespace annulus {

enum class ModeKind { dirichlet, neumann };

/// Radial profile of the n-th separated solution with unit Cauchy data on r = 1
/// (caller multiplies by cos n phi or sin n phi):
///   dirichlet (u = 1, u_r = 0):  1             for n = 0,  (r^n + r^-n) / 2    otherwise
///   neumann   (u = 0, u_r = 1):  ln r          for n = 0,  (r^n - r^-n) / (2n) otherwise
double solve_mode(ModeKind kind, int n, double r);

/// |solve_mode(kind, n, r)| for 0 < r < 1: the data-to-solution gain of mode n.
double amplification(ModeKind kind, int n, double r);

/// Separation-of-variables value of the Cauchy problem at one point.
/// Summation order: g mean, g modes ascending, h mean, h modes ascending.
double solve_cauchy_oracle_at(const CauchyData& data, const PolarPoint& point);

/// Ground-truth field: superposition of solve_mode over the Fourier modes of
/// g (dirichlet profiles) and h (neumann profiles, mean via + hbar ln r).
Field solve_cauchy_oracle(const CauchyData& data, const Annulus& annulus, const PolarGrid& grid,
                          unsigned threads = 1);

}  // namespace annulus
