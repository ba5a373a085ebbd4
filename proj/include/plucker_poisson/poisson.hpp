#pragma once

// Operations on Poisson brackets, with emphasis on the Plücker family
// {x_i, x_j} = pi_ij x_1 ... x̂_i ... x̂_j ... x_n.

#include "plucker_poisson/bracket.hpp"
#include "plucker_poisson/quadratic_form.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace plucker_poisson {

/// {f, g}(x) = grad f(x)^T P(x) grad g(x).
double bracket_of(const BracketSource& src, const ScalarField& f, const ScalarField& g, const Vector& x);

/// {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}} at x.
double jacobiator(const BracketSource& src, int i, int j, int k, const Vector& x);

/// Jacobiator for every triple i<j<k (lexicographic), sharing one evaluation
/// of P and dP at x.
std::vector<double> jacobiators(const BracketSource& src, const Vector& x);

/// |pi|^2 |x|^(2n-4): the natural magnitude of a Plücker-bracket jacobiator.
double jacobiator_scale(const PluckerVector& pi, const Vector& x);

int rank_at(const BracketSource& src, const Vector& x);

/// P(x) = Psi(x) X^Y with X = sum alpha_i/x_i d_i, Y = sum beta_j/x_j d_j and
/// Psi = x_1...x_n. Orientation follows recover_plane.
struct TensorDecomposition {
  Vector alpha;
  Vector beta;

  /// Psi(x) (alpha_i beta_j - alpha_j beta_i) / (x_i x_j); needs all x_m != 0.
  [[nodiscard]] Matrix evaluate(const Vector& x) const;
};

TensorDecomposition decompose_tensor(const PluckerBracket& b);

/// f_ijk = pi_jk x_i^2 - pi_ik x_j^2 + pi_ij x_k^2 as a diagonal form
/// (coefficients (pi_jk, -pi_ik, pi_ij) at i, j, k; value carries the 1/2).
QuadraticForm casimir_fijk(const PluckerBracket& b, int i, int j, int k);

/// Orthonormal basis (columns) of ker(pi_ij).
Matrix kernel_basis(const PluckerVector& pi);

/// Diagonal Casimirs 1/2 sum_k a_k x_k^2, one per kernel basis vector a.
std::vector<QuadraticForm> kernel_casimirs(const PluckerBracket& b);

/// max_l |{f, x_l}(x)|.
double casimir_residual(const BracketSource& src, const ScalarField& f, const Vector& x);

/// Psi(x) det(grad f, grad g, grad f_1, ..., grad f_{n-2}).
double jacobian_bracket(std::span<const ScalarField> casimirs, const ScalarField& psi, const ScalarField& f,
                        const ScalarField& g, const Vector& x);
double jacobian_bracket(std::span<const ScalarField> casimirs, double psi, const ScalarField& f,
                        const ScalarField& g, const Vector& x);

/// pi_ij = (-1)^(i+j+1) det(C without columns i, j) (1-based i, j), where C is
/// the (n-2) x n coefficient matrix of the diagonal forms. With Psi = 1 the
/// Jacobian bracket of the forms is then exactly the Plücker bracket of pi.
PluckerVector plucker_from_diagonal_quadrics(std::span<const QuadraticForm> forms);

struct JacobianRepresentation {
  std::vector<QuadraticForm> casimirs;  // n - 2 diagonal forms
  double multiple = 0.0;                // P = multiple * {.,.}_det with Psi = 1
  double consistency = 0.0;             // worst relative mismatch over the checks
};

/// Expresses b as a constant multiple of the Jacobian bracket generated by its
/// kernel Casimirs. The multiple is fixed at one generic point from the
/// largest |pi_ij| and then checked on every entry at `check_points` further
/// points; a mismatch above 1e-9 throws std::logic_error.
JacobianRepresentation plucker_to_jacobian(const PluckerBracket& b, std::uint64_t seed = 0,
                                           int check_points = 20);

struct CompatibilityResult {
  std::vector<QuadrupleResidual> intersection;
  double intersection_relative = 0.0;  // max|B| / (max|a| max|b|)
  double sum_jacobiator_relative = 0.0;
  bool lines_intersect = false;
  bool sum_is_poisson = false;

  [[nodiscard]] bool compatible() const { return lines_intersect && sum_is_poisson; }
  [[nodiscard]] bool routes_agree() const { return lines_intersect == sum_is_poisson; }
};

struct CompatibilityOptions {
  double tolerance = kDefaultDecomposabilityTolerance;
  int sample_points = 20;
  std::uint64_t seed = 0;
};

/// Intersection residuals of the two lines, cross-checked against the
/// jacobiator of the sum bracket pi + pi' at random generic points.
CompatibilityResult compatibility_residuals(const PluckerBracket& a, const PluckerBracket& b,
                                            const CompatibilityOptions& options = {});

/// Largest jacobiator of the bracket with coefficients pi over all triples,
/// normalised by pi_max^2 * sum_l |x|-monomial magnitude (see the .cpp).
double relative_jacobiator(const PluckerBracket& b, const Vector& x);

/// Point with every coordinate uniform in [-2,-0.5] U [0.5,2].
Vector sample_generic_point(int n, std::mt19937_64& rng);

}  // namespace plucker_poisson
