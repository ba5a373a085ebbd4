#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace plucker_poisson {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Raised when an argument violates an operation's precondition
/// (dimension mismatch, bad index, out-of-range parameter).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the input is well formed but geometrically degenerate
/// (dependent vectors, zero bivector, non-decomposable where a plane is needed).
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numerical rank with threshold cols * eps * sigma_max.
int numerical_rank(const Matrix& m);

/// Orthonormal basis (as columns) of the numerical null space, same threshold
/// as numerical_rank.
Matrix null_space(const Matrix& m);

/// Distance of v from the column span of an orthonormal basis, relative to |v|.
double span_distance(const Matrix& orthonormal_basis, const Vector& v);

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace plucker_poisson
