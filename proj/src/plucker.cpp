#include "plucker_poisson/plucker.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace plucker_poisson {

PluckerVector::PluckerVector(int n) : n_(n) {
  require(n >= 3, "PluckerVector: dimension must be at least 3, got " + std::to_string(n));
  components_.assign(static_cast<std::size_t>(n * (n - 1) / 2), 0.0);
}

PluckerVector::PluckerVector(int n, std::vector<double> components) : PluckerVector(n) {
  require(components.size() == components_.size(),
          "PluckerVector: expected " + std::to_string(components_.size()) + " components, got " +
              std::to_string(components.size()));
  components_ = std::move(components);
}

std::size_t PluckerVector::pair_index(int n, int i, int j) {
  return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

double PluckerVector::get(int i, int j) const {
  require(i >= 0 && j >= 0 && i < n_ && j < n_, "PluckerVector::get: index out of range");
  if (i == j) return 0.0;
  if (i < j) return components_[pair_index(n_, i, j)];
  return -components_[pair_index(n_, j, i)];
}

void PluckerVector::set(int i, int j, double value) {
  require(i >= 0 && j >= 0 && i < n_ && j < n_ && i != j, "PluckerVector::set: invalid pair");
  if (i < j) {
    components_[pair_index(n_, i, j)] = value;
  } else {
    components_[pair_index(n_, j, i)] = -value;
  }
}

double PluckerVector::max_abs() const {
  double m = 0.0;
  for (double c : components_) m = std::max(m, std::abs(c));
  return m;
}

double PluckerVector::norm() const {
  double s = 0.0;
  for (double c : components_) s += c * c;
  return std::sqrt(s);
}

Matrix PluckerVector::skew_matrix() const {
  Matrix m = Matrix::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      m(i, j) = get(i, j);
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

PluckerVector& PluckerVector::operator+=(const PluckerVector& other) {
  require(other.n_ == n_, "PluckerVector: dimension mismatch in sum");
  for (std::size_t k = 0; k < components_.size(); ++k) components_[k] += other.components_[k];
  return *this;
}

PluckerVector& PluckerVector::operator*=(double s) {
  for (double& c : components_) c *= s;
  return *this;
}

PluckerVector wedge(const PlaneBasis& basis) {
  const auto n = basis.alpha.size();
  require(basis.beta.size() == n, "wedge: alpha and beta have different lengths");
  require(n >= 3, "wedge: dimension must be at least 3");
  PluckerVector p(static_cast<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      p.set(i, j, basis.alpha(i) * basis.beta(j) - basis.alpha(j) * basis.beta(i));
    }
  }
  const double scale = basis.alpha.cwiseAbs().maxCoeff() * basis.beta.cwiseAbs().maxCoeff();
  if (p.max_abs() <= 1e-14 * scale || p.is_zero()) {
    throw DegenerateInput("wedge: alpha and beta are linearly dependent");
  }
  return p;
}

std::vector<Quadruple> quadruples(int n) {
  std::vector<Quadruple> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) out.push_back({i, j, k, l});
  return out;
}

std::vector<std::array<int, 3>> triples(int n) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

double pfaffian4(const PluckerVector& p, int i, int j, int k, int l) {
  return p.get(i, j) * p.get(k, l) - p.get(i, k) * p.get(j, l) + p.get(i, l) * p.get(j, k);
}

std::vector<QuadrupleResidual> plucker_residuals(const PluckerVector& p) {
  std::vector<QuadrupleResidual> out;
  for (const auto& q : quadruples(p.dimension())) {
    const auto [i, j, k, l] = q;
    const double r = p.get(i, j) * p.get(k, l) - p.get(i, k) * p.get(j, l) + p.get(j, k) * p.get(i, l);
    out.push_back({q, r});
  }
  return out;
}

double relative_plucker_residual(const PluckerVector& p) {
  const double scale = p.max_abs();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& r : plucker_residuals(p)) worst = std::max(worst, std::abs(r.residual));
  return worst / (scale * scale);
}

bool is_decomposable(const PluckerVector& p, double tol) {
  require(tol > 0.0, "is_decomposable: tolerance must be positive");
  return relative_plucker_residual(p) <= tol;
}

Matrix representation_matrix(const PluckerVector& p) {
  const int n = p.dimension();
  const auto rows = triples(n);
  Matrix a = Matrix::Zero(static_cast<Eigen::Index>(rows.size()), n);
  // e_a ^ (p_bc e_b^e_c) = p_bc e_a^e_b^e_c, and similarly with the sign of the
  // permutation that sorts (m, i, j) into (a, b, c).
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto [x, y, z] = rows[r];
    const auto row = static_cast<Eigen::Index>(r);
    a(row, x) = p.get(y, z);
    a(row, y) = -p.get(x, z);
    a(row, z) = p.get(x, y);
  }
  return a;
}

PlaneBasis recover_plane(const PluckerVector& p, double tol) {
  if (p.is_zero()) throw DegenerateInput("recover_plane: zero bivector");
  if (!is_decomposable(p, tol)) {
    throw DegenerateInput("recover_plane: bivector is not decomposable (relative residual " +
                          std::to_string(relative_plucker_residual(p)) + ")");
  }
  const int n = p.dimension();
  int a = 0;
  int b = 1;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(p.get(i, j)) > best) {
        best = std::abs(p.get(i, j));
        a = i;
        b = j;
      }
    }
  }
  const double pivot = p.get(a, b);
  PlaneBasis basis{Vector(n), Vector(n)};
  for (int j = 0; j < n; ++j) {
    basis.alpha(j) = p.get(a, j) / pivot;
    basis.beta(j) = p.get(b, j);
  }
  return basis;
}

std::vector<QuadrupleResidual> intersection_residuals(const PluckerVector& p,
                                                      const PluckerVector& q) {
  require(p.dimension() == q.dimension(), "intersection_residuals: dimension mismatch");
  std::vector<QuadrupleResidual> out;
  for (const auto& t : quadruples(p.dimension())) {
    const auto [i, j, k, l] = t;
    const double r = p.get(i, j) * q.get(k, l) - p.get(i, k) * q.get(j, l) + p.get(i, l) * q.get(j, k) +
                     p.get(j, k) * q.get(i, l) - p.get(j, l) * q.get(i, k) + p.get(k, l) * q.get(i, j);
    out.push_back({t, r});
  }
  return out;
}

double relative_intersection_residual(const PluckerVector& p, const PluckerVector& q) {
  const double scale = p.max_abs() * q.max_abs();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& r : intersection_residuals(p, q)) worst = std::max(worst, std::abs(r.residual));
  return worst / scale;
}

}  // namespace plucker_poisson
