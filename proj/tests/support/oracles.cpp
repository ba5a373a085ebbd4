#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace oracles {

double evaluate(const Polynomial& p, const Vector& x) {
  double sum = 0.0;
  for (const auto& m : p) {
    double term = m.coeff;
    for (std::size_t i = 0; i < m.exps.size(); ++i) term *= std::pow(x(static_cast<Eigen::Index>(i)), m.exps[i]);
    sum += term;
  }
  return sum;
}

Polynomial derivative(const Polynomial& p, int l) {
  Polynomial out;
  for (const auto& m : p) {
    const int e = m.exps[static_cast<std::size_t>(l)];
    if (e == 0) continue;
    Monomial d = m;
    d.coeff *= e;
    d.exps[static_cast<std::size_t>(l)] = e - 1;
    out.push_back(std::move(d));
  }
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Monomial m{x.coeff * y.coeff, x.exps};
      for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += y.exps[i];
      out.push_back(std::move(m));
    }
  return out;
}

Polynomial bracket_polynomial(const PluckerVector& pi, int i, int j) {
  const int n = pi.dimension();
  if (i == j) return {};
  Monomial m{pi.get(i, j), std::vector<int>(static_cast<std::size_t>(n), 1)};
  m.exps[static_cast<std::size_t>(i)] = 0;
  m.exps[static_cast<std::size_t>(j)] = 0;
  return {m};
}

namespace {

// {x_a, F} for a polynomial F.
Polynomial bracket_with_coordinate(const PluckerVector& pi, int a, const Polynomial& f) {
  Polynomial out;
  for (int l = 0; l < pi.dimension(); ++l) {
    const auto term = multiply(bracket_polynomial(pi, a, l), derivative(f, l));
    out.insert(out.end(), term.begin(), term.end());
  }
  return out;
}

}  // namespace

double nested_jacobiator(const PluckerVector& pi, int i, int j, int k, const Vector& x) {
  return evaluate(bracket_with_coordinate(pi, i, bracket_polynomial(pi, j, k)), x) +
         evaluate(bracket_with_coordinate(pi, j, bracket_polynomial(pi, k, i)), x) +
         evaluate(bracket_with_coordinate(pi, k, bracket_polynomial(pi, i, j)), x);
}

double pfaffian(const PluckerVector& p, int a, int b, int c, int d) {
  return p.get(a, b) * p.get(c, d) - p.get(a, c) * p.get(b, d) + p.get(a, d) * p.get(b, c);
}

PluckerVector minors(const Vector& alpha, const Vector& beta) {
  const auto n = static_cast<int>(alpha.size());
  PluckerVector p(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::Matrix2d m;
      m << alpha(i), beta(i), alpha(j), beta(j);
      p.set(i, j, m.determinant());
    }
  return p;
}

Vector generic_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.5, 2.0);
  std::bernoulli_distribution sign(0.5);
  Vector x(n);
  for (int i = 0; i < n; ++i) x(i) = sign(rng) ? -u(rng) : u(rng);
  return x;
}

Vector normal_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v;
}

double projective_distance(const PluckerVector& a, const PluckerVector& b) {
  const auto& ca = a.components();
  const auto& cb = b.components();
  const auto pivot = static_cast<std::size_t>(
      std::max_element(ca.begin(), ca.end(), [](double x, double y) { return std::abs(x) < std::abs(y); }) - ca.begin());
  if (cb[pivot] == 0.0) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) worst = std::max(worst, std::abs(ca[i] / ca[pivot] - cb[i] / cb[pivot]));
  return worst;
}

double max_span_distance(const Matrix& basis, const Matrix& vectors) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    const Vector v = vectors.col(c);
    const Vector coeffs = basis.colPivHouseholderQr().solve(v);
    worst = std::max(worst, (basis * coeffs - v).norm() / std::max(1.0, v.norm()));
  }
  return worst;
}

}  // namespace oracles
