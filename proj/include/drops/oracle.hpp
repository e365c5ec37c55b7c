#pragma once

#include <Eigen/Dense>

#include "drops/params.hpp"

namespace drops::oracle {

/// Finite-difference solution on a uniform grid over [a, b]. Used by the
/// tests as an independent cross-check of the closed-form solver; shares
/// nothing with it beyond the parameter struct.
struct GridSolution {
    Eigen::VectorXd x; ///< n+1 points, x[0] = a, x[n] = b
    Eigen::VectorXd u; ///< heights, zero at both ends
    double lambda = 0.0;
    double slope_a = 0.0; ///< one-sided 3-point estimate at a
    double slope_b = 0.0; ///< one-sided 3-point estimate at b
    Eigen::Index support_begin = 0; ///< first index with u > 0

    double volume() const; ///< trapezoid rule
};

/// Second-order central-difference solve of the volume-constrained
/// two-point problem, positivity ignored. The multiplier comes from a
/// bordered pair of tridiagonal solves.
GridSolution fd_bvp(double a, double b, const PhysicalParams& p, int n);

/// Constrained (u >= 0) variant: projected SOR inner solve with a secant
/// iteration on the multiplier to hit the volume. `tol` is relative on
/// the volume defect.
GridSolution fd_obstacle(double a, double b, const PhysicalParams& p, int n, double tol = 1e-10);

} // namespace drops::oracle
