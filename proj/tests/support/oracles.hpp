#pragma once

// Test-only reference computations, written independently of the library
// code paths they check.

#include "plucker_poisson/plucker.hpp"

#include <random>
#include <vector>

namespace oracles {

using plucker_poisson::Matrix;
using plucker_poisson::PluckerVector;
using plucker_poisson::Vector;

/// c * prod x_m^{e_m}.
struct Monomial {
  double coeff = 0.0;
  std::vector<int> exps;
};

using Polynomial = std::vector<Monomial>;

double evaluate(const Polynomial& p, const Vector& x);
Polynomial derivative(const Polynomial& p, int l);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// {x_i, x_j} of the monomial bracket as an explicit polynomial.
Polynomial bracket_polynomial(const PluckerVector& pi, int i, int j);

/// {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}} by expanding
/// {x_a, F} = sum_l {x_a, x_l} dF/dx_l term by term on polynomials.
double nested_jacobiator(const PluckerVector& pi, int i, int j, int k, const Vector& x);

/// The alternating form p_ab p_cd - p_ac p_bd + p_ad p_bc on any index order.
double pfaffian(const PluckerVector& p, int a, int b, int c, int d);

/// 2x2 minors of the n x 2 matrix [alpha beta], computed entry by entry.
PluckerVector minors(const Vector& alpha, const Vector& beta);

/// Uniform in [-2,-0.5] U [0.5,2] per coordinate.
Vector generic_point(int n, std::mt19937_64& rng);
Vector normal_vector(int n, std::mt19937_64& rng);

/// Largest |a_i - b_i| / max|a| after scaling both to unit pivot at the
/// entry where |a| is largest: distance between projective points.
double projective_distance(const PluckerVector& a, const PluckerVector& b);

/// Distance of each column of `vectors` from the column span of `basis`
/// (via least squares), maximized.
double max_span_distance(const Matrix& basis, const Matrix& vectors);

}  // namespace oracles
