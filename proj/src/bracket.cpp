#include "plucker_poisson/bracket.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace plucker_poisson {

std::vector<Matrix> BracketSource::structure_derivatives_at(const Vector& x) const {
  static const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(x.size()));
  Vector probe = x;
  for (Eigen::Index l = 0; l < x.size(); ++l) {
    const double h = base * std::max(1.0, std::abs(x(l)));
    probe(l) = x(l) + h;
    const Matrix up = structure_matrix_at(probe);
    probe(l) = x(l) - h;
    const Matrix down = structure_matrix_at(probe);
    probe(l) = x(l);
    out.push_back((up - down) / (2.0 * h));
  }
  return out;
}

PluckerBracket::PluckerBracket(PluckerVector pi, double tol) : pi_(std::move(pi)) {
  if (!is_decomposable(pi_, tol)) {
    throw DegenerateInput("PluckerBracket: coefficients violate the Plücker relations (relative residual " +
                          std::to_string(relative_plucker_residual(pi_)) +
                          "), so the Jacobi identity fails");
  }
}

PluckerBracket PluckerBracket::unchecked(PluckerVector pi) { return {std::move(pi), Unchecked{}}; }

Matrix PluckerBracket::structure_matrix_at(const Vector& x) const {
  const int n = dimension();
  require(x.size() == n, "PluckerBracket: point has wrong dimension");
  Matrix p = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double monomial = 1.0;
      for (int m = 0; m < n; ++m) {
        if (m != i && m != j) monomial *= x(m);
      }
      p(i, j) = pi_.get(i, j) * monomial;
      p(j, i) = -p(i, j);
    }
  }
  return p;
}

std::vector<Matrix> PluckerBracket::structure_derivatives_at(const Vector& x) const {
  const int n = dimension();
  require(x.size() == n, "PluckerBracket: point has wrong dimension");
  std::vector<Matrix> out(static_cast<std::size_t>(n), Matrix::Zero(n, n));
  for (int l = 0; l < n; ++l) {
    Matrix& d = out[static_cast<std::size_t>(l)];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (l == i || l == j) continue;
        double monomial = 1.0;
        for (int m = 0; m < n; ++m) {
          if (m != i && m != j && m != l) monomial *= x(m);
        }
        d(i, j) = pi_.get(i, j) * monomial;
        d(j, i) = -d(i, j);
      }
    }
  }
  return out;
}

ConstantBracket::ConstantBracket(Matrix skew) : s_(std::move(skew)) {
  require(s_.rows() == s_.cols(), "ConstantBracket: matrix must be square");
  require((s_ + s_.transpose()).isZero(0.0), "ConstantBracket: matrix must be skew-symmetric");
}

Matrix ConstantBracket::structure_matrix_at(const Vector& x) const {
  require(x.size() == s_.rows(), "ConstantBracket: point has wrong dimension");
  return s_;
}

std::vector<Matrix> ConstantBracket::structure_derivatives_at(const Vector& x) const {
  return std::vector<Matrix>(static_cast<std::size_t>(x.size()), Matrix::Zero(s_.rows(), s_.cols()));
}

ConstantBracket canonical_bracket(int degrees_of_freedom) {
  require(degrees_of_freedom >= 1, "canonical_bracket: need at least one degree of freedom");
  const int d = degrees_of_freedom;
  Matrix j = Matrix::Zero(2 * d, 2 * d);
  j.topRightCorner(d, d) = Matrix::Identity(d, d);
  j.bottomLeftCorner(d, d) = -Matrix::Identity(d, d);
  return ConstantBracket(j);
}

Eigen::Matrix3d hat_matrix(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, v(2), -v(1),
      -v(2), 0.0, v(0),
      v(1), -v(0), 0.0;
  return m;
}

Matrix E3Bracket::structure_matrix_at(const Vector& z) const {
  require(z.size() == 6, "E3Bracket: point must have 6 coordinates");
  Matrix p = Matrix::Zero(6, 6);
  const Eigen::Matrix3d x = hat_matrix(z.head<3>());
  p.topRightCorner<3, 3>() = x;
  p.bottomLeftCorner<3, 3>() = x;
  p.bottomRightCorner<3, 3>() = hat_matrix(z.tail<3>());
  return p;
}

std::vector<Matrix> E3Bracket::structure_derivatives_at(const Vector& z) const {
  require(z.size() == 6, "E3Bracket: point must have 6 coordinates");
  std::vector<Matrix> out(6, Matrix::Zero(6, 6));
  for (int l = 0; l < 3; ++l) {
    const Eigen::Matrix3d dx = hat_matrix(Eigen::Vector3d::Unit(l));
    out[static_cast<std::size_t>(l)].topRightCorner<3, 3>() = dx;
    out[static_cast<std::size_t>(l)].bottomLeftCorner<3, 3>() = dx;
    out[static_cast<std::size_t>(l + 3)].bottomRightCorner<3, 3>() = dx;
  }
  return out;
}

}  // namespace plucker_poisson
