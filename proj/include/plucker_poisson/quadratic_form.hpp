#pragma once

#include "plucker_poisson/linalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace plucker_poisson {

/// f(x) = 1/2 x^T A x + b^T x with A symmetric.
///
/// The linear part b defaults to zero; it exists so that coordinate
/// Hamiltonians such as H = x_5 fit the same encoding. A diagonal form built
/// from (a_1..a_n) is 1/2 sum a_k x_k^2, so a Casimir written as
/// sum a_k x_k^2 is represented up to the (irrelevant) factor 1/2.
class QuadraticForm {
 public:
  /// Symmetrizes m as (m + m^T)/2.
  explicit QuadraticForm(const Matrix& m);
  QuadraticForm(const Matrix& m, const Vector& linear);

  static QuadraticForm diagonal(const Vector& coefficients);
  static QuadraticForm zero(int n);
  /// f(x) = b^T x.
  static QuadraticForm linear(const Vector& b);

  [[nodiscard]] int dimension() const { return static_cast<int>(a_.rows()); }
  [[nodiscard]] const Matrix& matrix() const { return a_; }
  [[nodiscard]] const Vector& linear_part() const { return b_; }
  [[nodiscard]] bool is_diagonal() const;
  [[nodiscard]] bool has_linear_part() const { return !b_.isZero(0.0); }
  [[nodiscard]] bool is_zero() const { return a_.isZero(0.0) && !has_linear_part(); }
  [[nodiscard]] Vector diagonal_coefficients() const { return a_.diagonal(); }

  [[nodiscard]] double operator()(const Vector& x) const;
  [[nodiscard]] Vector gradient(const Vector& x) const;

  friend bool operator==(const QuadraticForm& l, const QuadraticForm& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  Matrix a_;
  Vector b_;
};

/// A differentiable scalar function. Gradients are exact when supplied,
/// otherwise central differences with step cbrt(eps) * max(1, |x_i|).
class ScalarField {
 public:
  using ValueFn = std::function<double(const Vector&)>;
  using GradientFn = std::function<Vector(const Vector&)>;

  ScalarField(QuadraticForm form);  // NOLINT(google-explicit-constructor)
  explicit ScalarField(ValueFn value, GradientFn gradient = {});

  static ScalarField constant(double c);
  static ScalarField coordinate(int n, int index);

  [[nodiscard]] double operator()(const Vector& x) const { return value_(x); }
  [[nodiscard]] Vector gradient(const Vector& x) const;
  [[nodiscard]] bool has_exact_gradient() const { return static_cast<bool>(gradient_); }
  [[nodiscard]] const std::optional<QuadraticForm>& form() const { return form_; }

 private:
  ValueFn value_;
  GradientFn gradient_;
  std::optional<QuadraticForm> form_;
};

Vector finite_difference_gradient(const ScalarField::ValueFn& f, const Vector& x);

struct NamedInvariant {
  std::string name;
  ScalarField function;
};

}  // namespace plucker_poisson
