#pragma once

// Concrete Hamiltonian systems and symplectic realizations.

#include "plucker_poisson/dynamics.hpp"
#include "plucker_poisson/poisson.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace plucker_poisson {

// ---------------------------------------------------------------------------
// Three-dimensional bi-Hamiltonian structure of x' = yz, y' = -xz, z' = -k^2 xy

/// {x,y} = 0, {x,z} = y, {y,z} = -x.
PluckerBracket jacobi_pi1();
/// {x,y} = z, {x,z} = 0, {y,z} = k^2 x.
PluckerBracket jacobi_pi2(double k);
/// {x,y} = z, {x,z} = k^2 y / 2, {y,z} = k^2 x / 2.
PluckerBracket jacobi_pi3(double k);

struct JacobiBiHamiltonian {
  HamiltonianSystem first;   // (pi1, 1/2 (k^2 x^2 + z^2))
  HamiltonianSystem second;  // (pi2, 1/2 (x^2 + y^2))
  HamiltonianSystem third;   // (pi3, 1/2 (x^2 + y^2))
};

JacobiBiHamiltonian jacobi_bihamiltonian(double k);

// ---------------------------------------------------------------------------
// Realizations: Poisson maps from canonical R^{2d} onto a Poisson space.

struct Realization {
  int degrees_of_freedom = 0;
  std::function<Vector(const Vector&)> map;
  std::function<Matrix(const Vector&)> jacobian;
  BracketPtr target;
};

/// (q1, q2, p1, p2) -> (p1, p2, p1 q2 - p2 q1) onto pi1.
Vector realization_r4_map(const Vector& xi);
Matrix realization_r4_jacobian(const Vector& xi);
Realization realization_r4();

/// H = 1/2 (1 + k^2) p1^2 + 1/2 p2^2 + 1/2 (p1 q2 - p2 q1)^2 on R^4.
ScalarField realization_r4_hamiltonian(double k);
/// The same function written on R^3: 1/2 (1 + k^2) x^2 + 1/2 y^2 + 1/2 z^2.
QuadraticForm realization_r4_reduced_hamiltonian(double k);

/// (q, p) in R^6 -> (x, y) with x = p and
/// y = (p3 q2 - p2 q3, p1 q3 - p3 q1, p2 q1 - p1 q2), onto e(3).
Vector clebsch_map(const Vector& xi);
Matrix clebsch_map_jacobian(const Vector& xi);
Realization clebsch_realization();

/// 1/2 |p|^2 + 1/2 sum over i<j of (p_i q_j - p_j q_i)^2 on R^6.
ScalarField clebsch_realization_hamiltonian();

/// max |D Phi J D Phi^T - P(Phi(xi))| / max(1, max |P(Phi(xi))|), with J the
/// canonical matrix. Zero iff Phi is a Poisson map at xi.
double poisson_map_residual(const Realization& r, const Vector& xi);

/// max |D Phi (J grad H)(xi) - P(Phi) grad h(Phi)| / max(1, |P grad h|):
/// the image of the upstairs Hamiltonian field against the downstairs one.
double pushforward_field_residual(const Realization& r, const ScalarField& upstairs, const ScalarField& downstairs,
                                  const Vector& xi);

// ---------------------------------------------------------------------------
// Clebsch case of the Kirchhoff equations on e(3)

struct ClebschParameters {
  Eigen::Vector3d lambda{1.0, 1.0, 1.0};
  Eigen::Vector3d kappa{1.0, 1.0, 1.0};

  /// (l2 - l3)/k1 + (l3 - l1)/k2 + (l1 - l2)/k3. Requires nonzero kappa.
  [[nodiscard]] double condition_residual() const;
  /// c_i = k_i (k_j - k_l) / (l_j - l_l) over cyclic (i, j, l). Throws
  /// DegenerateInput when two lambdas coincide.
  [[nodiscard]] std::array<double, 3> c_ratios() const;
  /// f3 = c |y|^2 + sum k_i x_i^2 with c the first ratio. Commutes with h
  /// exactly when the condition holds.
  [[nodiscard]] QuadraticForm extra_integral() const;
  /// h = 1/2 (sum l_i x_i^2 + sum k_i y_i^2).
  [[nodiscard]] QuadraticForm hamiltonian() const;

  /// Parameters satisfying the condition: l_i = mu k_j k_l + nu.
  static ClebschParameters integrable(const Eigen::Vector3d& kappa, double mu, double nu);
};

/// e(3) with h; monitors f1 = |x|^2, f2 = x.y, h and, when the lambdas are
/// distinct and the condition holds to 1e-12, f3.
HamiltonianSystem clebsch_system(const ClebschParameters& params);

/// The e(3) field of h in cross-product form:
/// x' = -x * dh/dy, y' = -(x * dh/dx + y * dh/dy), '*' the cross product.
Vector clebsch_cross_product_field(const ClebschParameters& params, const Vector& z);

// ---------------------------------------------------------------------------
// Quartic systems in R^4 and R^6

/// x_i' = c_i prod_{m != i} x_m as a Plücker-bracket Hamiltonian system.
/// Monitors f1 = c2 x1^2 - c1 x2^2, f2 = c4 x3^2 - c3 x4^2 and H.
HamiltonianSystem fairlie_system(const Eigen::Vector4d& c);

/// The four double-elliptic quadrics x1^2 - x2^2, x1^2 - x3^2,
/// -g^2 x1^2 + x4^2 - x5^2, -g^2 x1^2 + x4^2 + x6^2 / kt^2.
std::vector<QuadraticForm> double_elliptic_casimirs(double g, double kt);

/// Jacobian bracket of those quadrics, H = x5; monitors all four and H.
HamiltonianSystem double_elliptic_system(double g, double kt);

}  // namespace plucker_poisson
