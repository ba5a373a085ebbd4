#include "plucker_poisson/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace plucker_poisson {

double bracket_of(const BracketSource& src, const ScalarField& f, const ScalarField& g, const Vector& x) {
  require(x.size() == src.dimension(), "bracket_of: point has wrong dimension");
  return f.gradient(x).dot(src.structure_matrix_at(x) * g.gradient(x));
}

namespace {

double jacobiator_from(const Matrix& p, const std::vector<Matrix>& dp, int i, int j, int k) {
  double sum = 0.0;
  for (std::size_t l = 0; l < dp.size(); ++l) {
    const auto li = static_cast<Eigen::Index>(l);
    sum += dp[l](j, k) * p(i, li) + dp[l](k, i) * p(j, li) + dp[l](i, j) * p(k, li);
  }
  return sum;
}

}  // namespace

double jacobiator(const BracketSource& src, int i, int j, int k, const Vector& x) {
  const int n = src.dimension();
  require(x.size() == n, "jacobiator: point has wrong dimension");
  require(i >= 0 && j >= 0 && k >= 0 && i < n && j < n && k < n, "jacobiator: index out of range");
  require(i != j && j != k && i != k, "jacobiator: indices must be distinct");
  return jacobiator_from(src.structure_matrix_at(x), src.structure_derivatives_at(x), i, j, k);
}

std::vector<double> jacobiators(const BracketSource& src, const Vector& x) {
  require(x.size() == src.dimension(), "jacobiators: point has wrong dimension");
  const Matrix p = src.structure_matrix_at(x);
  const auto dp = src.structure_derivatives_at(x);
  std::vector<double> out;
  for (const auto& [i, j, k] : triples(src.dimension())) out.push_back(jacobiator_from(p, dp, i, j, k));
  return out;
}

double jacobiator_scale(const PluckerVector& pi, const Vector& x) {
  const double pn = pi.norm();
  return pn * pn * std::pow(x.norm(), 2 * pi.dimension() - 4);
}

double relative_jacobiator(const PluckerBracket& b, const Vector& x) {
  const int n = b.dimension();
  const double pmax = b.pi().max_abs();
  if (pmax == 0.0) return 0.0;
  const auto values = jacobiators(b, x);
  const auto all = triples(n);
  double worst = 0.0;
  for (std::size_t t = 0; t < all.size(); ++t) {
    const auto [i, j, k] = all[t];
    // Each l outside {i,j,k} contributes Pf(i,j,k,l) times this monomial.
    double magnitude = 0.0;
    for (int l = 0; l < n; ++l) {
      if (l == i || l == j || l == k) continue;
      double mono = 1.0;
      for (int m = 0; m < n; ++m) {
        if (m != i && m != l) mono *= x(m);
        if (m != j && m != k && m != l) mono *= x(m);
      }
      magnitude += std::abs(mono);
    }
    if (magnitude > 0.0) worst = std::max(worst, std::abs(values[t]) / (pmax * pmax * magnitude));
  }
  return worst;
}

int rank_at(const BracketSource& src, const Vector& x) { return numerical_rank(src.structure_matrix_at(x)); }

Matrix TensorDecomposition::evaluate(const Vector& x) const {
  const auto n = x.size();
  require(alpha.size() == n && beta.size() == n, "TensorDecomposition: point has wrong dimension");
  const double psi = x.prod();
  Matrix p(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      p(i, j) = psi * (alpha(i) * beta(j) - alpha(j) * beta(i)) / (x(i) * x(j));
  return p;
}

TensorDecomposition decompose_tensor(const PluckerBracket& b) {
  auto plane = recover_plane(b.pi());
  return {std::move(plane.alpha), std::move(plane.beta)};
}

QuadraticForm casimir_fijk(const PluckerBracket& b, int i, int j, int k) {
  const int n = b.dimension();
  require(i >= 0 && i < j && j < k && k < n, "casimir_fijk: need 0 <= i < j < k < n");
  const auto& pi = b.pi();
  Vector c = Vector::Zero(n);
  c(i) = pi.get(j, k);
  c(j) = -pi.get(i, k);
  c(k) = pi.get(i, j);
  return QuadraticForm::diagonal(c);
}

Matrix kernel_basis(const PluckerVector& pi) {
  const Matrix s = pi.skew_matrix();
  if (pi.is_zero() || !is_decomposable(pi)) return null_space(s);
  // Decomposable and nonzero: rank is exactly 2, whatever rounding does to the
  // trailing singular values.
  Eigen::JacobiSVD<Matrix> svd(s, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(s.cols() - 2);
}

std::vector<QuadraticForm> kernel_casimirs(const PluckerBracket& b) {
  if (b.pi().is_zero()) throw DegenerateInput("kernel_casimirs: zero bracket");
  const Matrix basis = kernel_basis(b.pi());
  std::vector<QuadraticForm> out;
  for (Eigen::Index c = 0; c < basis.cols(); ++c) out.push_back(QuadraticForm::diagonal(basis.col(c)));
  return out;
}

double casimir_residual(const BracketSource& src, const ScalarField& f, const Vector& x) {
  const Vector row = src.structure_matrix_at(x).transpose() * f.gradient(x);
  return row.cwiseAbs().maxCoeff();
}

double jacobian_bracket(std::span<const ScalarField> casimirs, const ScalarField& psi, const ScalarField& f,
                        const ScalarField& g, const Vector& x) {
  const auto n = x.size();
  require(n >= 2 && static_cast<Eigen::Index>(casimirs.size()) == n - 2,
          "jacobian_bracket: need exactly n-2 Casimir functions, got " + std::to_string(casimirs.size()));
  Matrix m(n, n);
  m.col(0) = f.gradient(x);
  m.col(1) = g.gradient(x);
  for (std::size_t c = 0; c < casimirs.size(); ++c) m.col(static_cast<Eigen::Index>(c) + 2) = casimirs[c].gradient(x);
  return psi(x) * m.determinant();
}

double jacobian_bracket(std::span<const ScalarField> casimirs, double psi, const ScalarField& f,
                        const ScalarField& g, const Vector& x) {
  return jacobian_bracket(casimirs, ScalarField::constant(psi), f, g, x);
}

PluckerVector plucker_from_diagonal_quadrics(std::span<const QuadraticForm> forms) {
  require(!forms.empty(), "plucker_from_diagonal_quadrics: no forms given");
  const int n = forms.front().dimension();
  require(static_cast<int>(forms.size()) == n - 2,
          "plucker_from_diagonal_quadrics: need n-2 forms for dimension " + std::to_string(n));
  Matrix coeff(n - 2, n);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    require(forms[r].dimension() == n, "plucker_from_diagonal_quadrics: forms differ in dimension");
    require(forms[r].is_diagonal() && !forms[r].has_linear_part(),
            "plucker_from_diagonal_quadrics: forms must be diagonal quadrics");
    coeff.row(static_cast<Eigen::Index>(r)) = forms[r].diagonal_coefficients().transpose();
  }
  if (numerical_rank(coeff) < n - 2) {
    throw DegenerateInput("plucker_from_diagonal_quadrics: coefficient vectors are linearly dependent");
  }
  PluckerVector pi(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Matrix minor(n - 2, n - 2);
      int c = 0;
      for (int m = 0; m < n; ++m) {
        if (m == i || m == j) continue;
        minor.col(c++) = coeff.col(m);
      }
      // (-1)^((i+1)+(j+1)+1) with 0-based i, j.
      const double sign = ((i + j + 3) % 2 == 0) ? 1.0 : -1.0;
      pi.set(i, j, sign * minor.determinant());
    }
  }
  return pi;
}

Vector sample_generic_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> magnitude(0.5, 2.0);
  std::bernoulli_distribution negative(0.5);
  Vector x(n);
  for (int i = 0; i < n; ++i) x(i) = negative(rng) ? -magnitude(rng) : magnitude(rng);
  return x;
}

JacobianRepresentation plucker_to_jacobian(const PluckerBracket& b, std::uint64_t seed, int check_points) {
  const int n = b.dimension();
  const auto& pi = b.pi();
  if (pi.is_zero()) throw DegenerateInput("plucker_to_jacobian: zero bracket");
  JacobianRepresentation rep;
  rep.casimirs = kernel_casimirs(b);
  if (static_cast<int>(rep.casimirs.size()) != n - 2) {
    throw DegenerateInput("plucker_to_jacobian: kernel has dimension " + std::to_string(rep.casimirs.size()) +
                          ", expected " + std::to_string(n - 2));
  }
  const std::vector<ScalarField> fields(rep.casimirs.begin(), rep.casimirs.end());
  auto det_matrix = [&](const Vector& x) {
    Matrix d = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        d(i, j) = jacobian_bracket(fields, 1.0, ScalarField::coordinate(n, i), ScalarField::coordinate(n, j), x);
        d(j, i) = -d(i, j);
      }
    return d;
  };

  int a = 0;
  int c = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(pi.get(i, j)) > std::abs(pi.get(a, c))) {
        a = i;
        c = j;
      }

  std::mt19937_64 rng(seed);
  const Vector anchor = sample_generic_point(n, rng);
  const double det_entry = det_matrix(anchor)(a, c);
  if (det_entry == 0.0) throw std::logic_error("plucker_to_jacobian: Jacobian bracket vanishes at pivot entry");
  rep.multiple = b.structure_matrix_at(anchor)(a, c) / det_entry;

  double worst = 0.0;
  for (int s = 0; s <= check_points; ++s) {
    const Vector x = s == 0 ? anchor : sample_generic_point(n, rng);
    const Matrix p = b.structure_matrix_at(x);
    const Matrix d = rep.multiple * det_matrix(x);
    const double scale = p.cwiseAbs().maxCoeff();
    worst = std::max(worst, (p - d).cwiseAbs().maxCoeff() / scale);
  }
  rep.consistency = worst;
  if (worst > 1e-9) {
    throw std::logic_error("plucker_to_jacobian: multiple is inconsistent across entries (relative mismatch " +
                           std::to_string(worst) + ")");
  }
  return rep;
}

CompatibilityResult compatibility_residuals(const PluckerBracket& a, const PluckerBracket& b,
                                            const CompatibilityOptions& options) {
  require(a.dimension() == b.dimension(), "compatibility_residuals: dimension mismatch");
  CompatibilityResult result;
  result.intersection = intersection_residuals(a.pi(), b.pi());
  result.intersection_relative = relative_intersection_residual(a.pi(), b.pi());
  result.lines_intersect = result.intersection_relative <= options.tolerance;

  const auto sum = PluckerBracket::unchecked(a.pi() + b.pi());
  std::mt19937_64 rng(options.seed);
  double worst = 0.0;
  if (!sum.pi().is_zero()) {
    for (int s = 0; s < options.sample_points; ++s) {
      worst = std::max(worst, relative_jacobiator(sum, sample_generic_point(a.dimension(), rng)));
    }
  }
  result.sum_jacobiator_relative = worst;
  result.sum_is_poisson = worst <= options.tolerance;
  return result;
}

}  // namespace plucker_poisson
