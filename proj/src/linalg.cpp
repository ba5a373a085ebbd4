#include "plucker_poisson/linalg.hpp"

#include <algorithm>
#include <limits>

namespace plucker_poisson {
namespace {

double rank_threshold(const Matrix& m, const Eigen::VectorXd& singular) {
  const double largest = singular.size() > 0 ? singular(0) : 0.0;
  return static_cast<double>(m.cols()) * std::numeric_limits<double>::epsilon() * largest;
}

}  // namespace

int numerical_rank(const Matrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double tol = rank_threshold(m, s);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol) ++rank;
  }
  return rank;
}

Matrix null_space(const Matrix& m) {
  const Eigen::Index n = m.cols();
  if (n == 0) return Matrix(0, 0);
  // Pad to square so the full V is available even for wide inputs.
  Matrix padded = Matrix::Zero(std::max(m.rows(), n), n);
  padded.topRows(m.rows()) = m;
  Eigen::JacobiSVD<Matrix> svd(padded, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int rank = 0;
  if (s.size() > 0 && s(0) > 0.0) {
    const double tol = rank_threshold(m, s);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(i) > tol) ++rank;
    }
  }
  return svd.matrixV().rightCols(n - rank);
}

double span_distance(const Matrix& orthonormal_basis, const Vector& v) {
  const double norm = v.norm();
  if (norm == 0.0) return 0.0;
  const Vector residual = v - orthonormal_basis * (orthonormal_basis.transpose() * v);
  return residual.norm() / norm;
}

}  // namespace plucker_poisson
