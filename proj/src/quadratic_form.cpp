#include "plucker_poisson/quadratic_form.hpp"

#include <cmath>
#include <limits>

namespace plucker_poisson {

QuadraticForm::QuadraticForm(const Matrix& m) : QuadraticForm(m, Vector::Zero(m.rows())) {}

QuadraticForm::QuadraticForm(const Matrix& m, const Vector& linear) {
  require(m.rows() == m.cols(), "QuadraticForm: matrix must be square");
  require(linear.size() == m.rows(), "QuadraticForm: linear part has wrong length");
  a_ = 0.5 * (m + m.transpose());
  b_ = linear;
}

QuadraticForm QuadraticForm::diagonal(const Vector& coefficients) {
  return QuadraticForm(Matrix(coefficients.asDiagonal()));
}

QuadraticForm QuadraticForm::zero(int n) { return QuadraticForm(Matrix::Zero(n, n)); }

QuadraticForm QuadraticForm::linear(const Vector& b) {
  return QuadraticForm(Matrix::Zero(b.size(), b.size()), b);
}

bool QuadraticForm::is_diagonal() const {
  for (Eigen::Index i = 0; i < a_.rows(); ++i)
    for (Eigen::Index j = 0; j < a_.cols(); ++j)
      if (i != j && a_(i, j) != 0.0) return false;
  return true;
}

double QuadraticForm::operator()(const Vector& x) const {
  require(x.size() == a_.rows(), "QuadraticForm: point has wrong dimension");
  return 0.5 * x.dot(a_ * x) + b_.dot(x);
}

Vector QuadraticForm::gradient(const Vector& x) const {
  require(x.size() == a_.rows(), "QuadraticForm: point has wrong dimension");
  return a_ * x + b_;
}

ScalarField::ScalarField(QuadraticForm form)
    : value_([form](const Vector& x) { return form(x); }),
      gradient_([form](const Vector& x) { return form.gradient(x); }),
      form_(std::move(form)) {}

ScalarField::ScalarField(ValueFn value, GradientFn gradient)
    : value_(std::move(value)), gradient_(std::move(gradient)) {}

ScalarField ScalarField::constant(double c) {
  return ScalarField([c](const Vector&) { return c; },
                     [](const Vector& x) -> Vector { return Vector::Zero(x.size()); });
}

ScalarField ScalarField::coordinate(int n, int index) {
  require(index >= 0 && index < n, "ScalarField::coordinate: index out of range");
  return ScalarField(QuadraticForm::linear(Vector::Unit(n, index)));
}

Vector ScalarField::gradient(const Vector& x) const {
  if (gradient_) return gradient_(x);
  return finite_difference_gradient(value_, x);
}

Vector finite_difference_gradient(const ScalarField::ValueFn& f, const Vector& x) {
  static const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  Vector g(x.size());
  Vector probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = base * std::max(1.0, std::abs(x(i)));
    probe(i) = x(i) + h;
    const double up = f(probe);
    probe(i) = x(i) - h;
    const double down = f(probe);
    probe(i) = x(i);
    g(i) = (up - down) / (2.0 * h);
  }
  return g;
}

}  // namespace plucker_poisson
