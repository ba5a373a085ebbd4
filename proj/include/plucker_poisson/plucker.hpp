#pragma once

// Plücker coordinates of 2-planes in R^n (equivalently lines in P^{n-1}).
//
// Indices in this C++ API are 0-based. Documentation and the JSON formats use
// 1-based indices; conversion happens only at the serialization boundary.

#include "plucker_poisson/linalg.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace plucker_poisson {

inline constexpr double kDefaultDecomposabilityTolerance = 1e-9;

/// Coefficients pi_ij, i < j, of a bivector in R^n, stored lexicographically.
/// get(i, j) follows the antisymmetric convention: get(j, i) == -get(i, j),
/// get(i, i) == 0.
class PluckerVector {
 public:
  /// All-zero components; callers must fill at least one before use as a
  /// projective point. Throws InvalidArgument for n < 3.
  explicit PluckerVector(int n);

  /// Components in lexicographic pair order (12, 13, ..., 1n, 23, ...).
  PluckerVector(int n, std::vector<double> components);

  [[nodiscard]] int dimension() const { return n_; }
  [[nodiscard]] std::size_t size() const { return components_.size(); }
  [[nodiscard]] const std::vector<double>& components() const { return components_; }

  [[nodiscard]] double get(int i, int j) const;
  /// Sets pi_ij (and implicitly pi_ji = -value). Requires i != j.
  void set(int i, int j, double value);

  [[nodiscard]] double max_abs() const;
  [[nodiscard]] double norm() const;
  [[nodiscard]] bool is_zero() const { return max_abs() == 0.0; }

  /// The constant skew matrix (pi_ij).
  [[nodiscard]] Matrix skew_matrix() const;

  PluckerVector& operator+=(const PluckerVector& other);
  PluckerVector& operator*=(double s);
  friend PluckerVector operator+(PluckerVector a, const PluckerVector& b) { return a += b; }
  friend PluckerVector operator*(double s, PluckerVector a) { return a *= s; }

  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;

  /// Lexicographic storage slot of the pair (i, j), i < j.
  [[nodiscard]] static std::size_t pair_index(int n, int i, int j);

 private:
  int n_;
  std::vector<double> components_;
};

/// Two spanning vectors of a 2-plane.
struct PlaneBasis {
  Vector alpha;
  Vector beta;
};

using Quadruple = std::array<int, 4>;

struct QuadrupleResidual {
  Quadruple indices;  // i < j < k < l
  double residual;
};

/// pi_ij = alpha_i beta_j - alpha_j beta_i. Throws InvalidArgument on
/// mismatched or too-short vectors, DegenerateInput when alpha and beta are
/// dependent.
PluckerVector wedge(const PlaneBasis& basis);

/// R_ijkl = p_ij p_kl - p_ik p_jl + p_jk p_il for every i<j<k<l; C(n,4) entries.
std::vector<QuadrupleResidual> plucker_residuals(const PluckerVector& p);

/// The alternating quadric Pf(i,j,k,l) = p_ij p_kl - p_ik p_jl + p_il p_jk for
/// arbitrary (not necessarily sorted, pairwise distinct) indices.
double pfaffian4(const PluckerVector& p, int i, int j, int k, int l);

/// Largest |R_ijkl| divided by max|p|^2 (0 for n = 3 or p = 0).
double relative_plucker_residual(const PluckerVector& p);

bool is_decomposable(const PluckerVector& p, double tol = kDefaultDecomposabilityTolerance);

/// Matrix of v -> v ^ p in lexicographic bases: C(n,3) rows, n columns.
Matrix representation_matrix(const PluckerVector& p);

/// A basis whose wedge reproduces p. Pivot: the largest |p_ab| (first in
/// lexicographic order on ties); alpha_j = p_aj / p_ab, beta_j = p_bj.
PlaneBasis recover_plane(const PluckerVector& p, double tol = kDefaultDecomposabilityTolerance);

/// Polarized relation B(p,q)_ijkl for every i<j<k<l; all zero iff the lines meet.
std::vector<QuadrupleResidual> intersection_residuals(const PluckerVector& p,
                                                      const PluckerVector& q);

/// max |B(p,q)| / (max|p| * max|q|).
double relative_intersection_residual(const PluckerVector& p, const PluckerVector& q);

/// All i<j<k<l tuples, lexicographic.
std::vector<Quadruple> quadruples(int n);
std::vector<std::array<int, 3>> triples(int n);

}  // namespace plucker_poisson
