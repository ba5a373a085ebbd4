#pragma once

// Jacobi elliptic functions as solutions of x' = yz, y' = -xz, z' = -k^2 xy
// with (x, y, z)(0) = (0, 1, 1), plus an independent oracle that inverts the
// incomplete elliptic integral of the first kind.

#include "plucker_poisson/dynamics.hpp"

#include <span>
#include <vector>

namespace plucker_poisson {

struct JacobiTriple {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

/// The system above as (bracket {x,z} = y, {y,z} = -x; H = 1/2 (k^2 x^2 + z^2)),
/// monitoring F = x^2 + y^2 and G = k^2 x^2 + z^2.
HamiltonianSystem jacobi_elliptic_system(double k);

/// Tolerances used for the ODE route unless overridden.
IntegrationControls elliptic_controls();

/// ODE route. Negative t uses sn(-t) = -sn(t), cn and dn even.
/// Throws InvalidArgument unless 0 <= k < 1.
JacobiTriple jacobi_elliptic(double t, double k, const IntegrationControls& controls = elliptic_controls());

/// ODE route evaluated at each of `times` (any order, any sign) with one
/// chained integration per sign.
std::vector<JacobiTriple> jacobi_elliptic_grid(std::span<const double> times, double k,
                                               const IntegrationControls& controls = elliptic_controls());

/// F(phi, k) = int_0^phi dtheta / sqrt(1 - k^2 sin^2 theta).
double incomplete_elliptic_f(double phi, double k);

/// K(k) = F(pi/2, k).
double quarter_period(double k);

/// Quadrature route: solves F(phi, k) = t on [0, pi/2] by bisection and a
/// Newton polish, then sn = sin phi, cn = cos phi, dn = sqrt(1 - k^2 sn^2).
/// Valid for |t| <= K(k); throws InvalidArgument outside that branch.
JacobiTriple elliptic_oracle(double t, double k);

}  // namespace plucker_poisson
