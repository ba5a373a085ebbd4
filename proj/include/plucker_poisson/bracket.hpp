#pragma once

#include "plucker_poisson/linalg.hpp"
#include "plucker_poisson/plucker.hpp"

#include <memory>
#include <vector>

namespace plucker_poisson {

/// Provider of a skew-symmetric structure matrix P(x), {f,g}(x) = grad f^T P grad g.
class BracketSource {
 public:
  virtual ~BracketSource() = default;

  [[nodiscard]] virtual int dimension() const = 0;
  [[nodiscard]] virtual Matrix structure_matrix_at(const Vector& x) const = 0;

  /// dP/dx_l for l = 0..n-1. The default uses central differences with step
  /// cbrt(eps) * max(1, |x_l|); sources with polynomial entries override it.
  [[nodiscard]] virtual std::vector<Matrix> structure_derivatives_at(const Vector& x) const;
};

using BracketPtr = std::shared_ptr<const BracketSource>;

/// {x_i, x_j} = pi_ij * prod_{m != i,j} x_m.
class PluckerBracket final : public BracketSource {
 public:
  /// Throws DegenerateInput if pi fails the Plücker relations at `tol`
  /// (such a bracket violates the Jacobi identity).
  explicit PluckerBracket(PluckerVector pi, double tol = kDefaultDecomposabilityTolerance);

  /// Skips the decomposability check. Only for building deliberately
  /// non-Poisson brackets, e.g. to exercise a failing Jacobi identity.
  static PluckerBracket unchecked(PluckerVector pi);

  [[nodiscard]] int dimension() const override { return pi_.dimension(); }
  [[nodiscard]] const PluckerVector& pi() const { return pi_; }
  [[nodiscard]] Matrix structure_matrix_at(const Vector& x) const override;
  [[nodiscard]] std::vector<Matrix> structure_derivatives_at(const Vector& x) const override;

 private:
  struct Unchecked {};
  PluckerBracket(PluckerVector pi, Unchecked) : pi_(std::move(pi)) {}

  PluckerVector pi_;
};

/// P(x) = S for a fixed skew matrix S.
class ConstantBracket final : public BracketSource {
 public:
  explicit ConstantBracket(Matrix skew);
  [[nodiscard]] int dimension() const override { return static_cast<int>(s_.rows()); }
  [[nodiscard]] Matrix structure_matrix_at(const Vector& x) const override;
  [[nodiscard]] std::vector<Matrix> structure_derivatives_at(const Vector& x) const override;

 private:
  Matrix s_;
};

/// Canonical symplectic bracket on (q_1..q_d, p_1..p_d): {q_i, p_j} = delta_ij.
ConstantBracket canonical_bracket(int degrees_of_freedom);

/// Lie-Poisson bracket of e(3) on (x_1,x_2,x_3,y_1,y_2,y_3):
/// P = [[0, X], [X, Y]] with X_12 = x_3, X_13 = -x_2, X_23 = x_1 (Y likewise).
class E3Bracket final : public BracketSource {
 public:
  [[nodiscard]] int dimension() const override { return 6; }
  [[nodiscard]] Matrix structure_matrix_at(const Vector& z) const override;
  [[nodiscard]] std::vector<Matrix> structure_derivatives_at(const Vector& z) const override;
};

/// The skew matrix [[0, v3, -v2], [-v3, 0, v1], [v2, -v1, 0]].
Eigen::Matrix3d hat_matrix(const Eigen::Vector3d& v);

}  // namespace plucker_poisson
