#include "plucker_poisson/systems.hpp"

#include <cmath>
#include <memory>
#include <string>

namespace plucker_poisson {
namespace {

PluckerBracket three_dimensional(double p12, double p13, double p23) {
  PluckerVector pi(3);
  pi.set(0, 1, p12);
  pi.set(0, 2, p13);
  pi.set(1, 2, p23);
  return PluckerBracket(pi);
}

template <class B>
BracketPtr share(B bracket) {
  return std::make_shared<B>(std::move(bracket));
}

}  // namespace

PluckerBracket jacobi_pi1() { return three_dimensional(0.0, 1.0, -1.0); }
PluckerBracket jacobi_pi2(double k) { return three_dimensional(1.0, 0.0, k * k); }
PluckerBracket jacobi_pi3(double k) { return three_dimensional(1.0, 0.5 * k * k, 0.5 * k * k); }

JacobiBiHamiltonian jacobi_bihamiltonian(double k) {
  const auto h1 = QuadraticForm::diagonal(Vector{{k * k, 0.0, 1.0}});
  const auto h2 = QuadraticForm::diagonal(Vector{{1.0, 1.0, 0.0}});
  return {{share(jacobi_pi1()), h1, {}}, {share(jacobi_pi2(k)), h2, {}}, {share(jacobi_pi3(k)), h2, {}}};
}

// ---------------------------------------------------------------------------

Vector realization_r4_map(const Vector& xi) {
  require(xi.size() == 4, "realization_r4_map: expected (q1, q2, p1, p2)");
  const double q1 = xi(0), q2 = xi(1), p1 = xi(2), p2 = xi(3);
  return Vector{{p1, p2, p1 * q2 - p2 * q1}};
}

Matrix realization_r4_jacobian(const Vector& xi) {
  require(xi.size() == 4, "realization_r4_jacobian: expected (q1, q2, p1, p2)");
  const double q1 = xi(0), q2 = xi(1), p1 = xi(2), p2 = xi(3);
  Matrix d = Matrix::Zero(3, 4);
  d(0, 2) = 1.0;
  d(1, 3) = 1.0;
  d.row(2) << -p2, p1, q2, -q1;
  return d;
}

Realization realization_r4() { return {2, realization_r4_map, realization_r4_jacobian, share(jacobi_pi1())}; }

ScalarField realization_r4_hamiltonian(double k) {
  const double a = 1.0 + k * k;
  auto value = [a](const Vector& xi) {
    const double q1 = xi(0), q2 = xi(1), p1 = xi(2), p2 = xi(3);
    const double z = p1 * q2 - p2 * q1;
    return 0.5 * a * p1 * p1 + 0.5 * p2 * p2 + 0.5 * z * z;
  };
  auto gradient = [a](const Vector& xi) {
    const double q1 = xi(0), q2 = xi(1), p1 = xi(2), p2 = xi(3);
    const double z = p1 * q2 - p2 * q1;
    return Vector{{-z * p2, z * p1, a * p1 + z * q2, p2 - z * q1}};
  };
  return ScalarField(value, gradient);
}

QuadraticForm realization_r4_reduced_hamiltonian(double k) {
  return QuadraticForm::diagonal(Vector{{1.0 + k * k, 1.0, 1.0}});
}

Vector clebsch_map(const Vector& xi) {
  require(xi.size() == 6, "clebsch_map: expected (q1, q2, q3, p1, p2, p3)");
  const double q1 = xi(0), q2 = xi(1), q3 = xi(2), p1 = xi(3), p2 = xi(4), p3 = xi(5);
  return Vector{{p1, p2, p3, p3 * q2 - p2 * q3, p1 * q3 - p3 * q1, p2 * q1 - p1 * q2}};
}

Matrix clebsch_map_jacobian(const Vector& xi) {
  require(xi.size() == 6, "clebsch_map_jacobian: expected (q1, q2, q3, p1, p2, p3)");
  const double q1 = xi(0), q2 = xi(1), q3 = xi(2), p1 = xi(3), p2 = xi(4), p3 = xi(5);
  Matrix d = Matrix::Zero(6, 6);
  d(0, 3) = d(1, 4) = d(2, 5) = 1.0;
  d.row(3) << 0.0, p3, -p2, 0.0, -q3, q2;
  d.row(4) << -p3, 0.0, p1, q3, 0.0, -q1;
  d.row(5) << p2, -p1, 0.0, -q2, q1, 0.0;
  return d;
}

Realization clebsch_realization() {
  return {3, clebsch_map, clebsch_map_jacobian, std::make_shared<E3Bracket>()};
}

ScalarField clebsch_realization_hamiltonian() {
  auto value = [](const Vector& xi) {
    const auto q = xi.head<3>();
    const auto p = xi.tail<3>();
    double h = 0.5 * p.squaredNorm();
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const double w = p(i) * q(j) - p(j) * q(i);
        h += 0.5 * w * w;
      }
    return h;
  };
  auto gradient = [](const Vector& xi) {
    const auto q = xi.head<3>();
    const auto p = xi.tail<3>();
    Vector g = Vector::Zero(6);
    g.tail<3>() = p;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const double w = p(i) * q(j) - p(j) * q(i);
        g(j) += w * p(i);
        g(i) -= w * p(j);
        g(3 + i) += w * q(j);
        g(3 + j) -= w * q(i);
      }
    return g;
  };
  return ScalarField(value, gradient);
}

double poisson_map_residual(const Realization& r, const Vector& xi) {
  require(xi.size() == 2 * r.degrees_of_freedom, "poisson_map_residual: point has wrong dimension");
  const Matrix j = canonical_bracket(r.degrees_of_freedom).structure_matrix_at(xi);
  const Matrix d = r.jacobian(xi);
  const Matrix target = r.target->structure_matrix_at(r.map(xi));
  const double scale = std::max(1.0, target.cwiseAbs().maxCoeff());
  return (d * j * d.transpose() - target).cwiseAbs().maxCoeff() / scale;
}

double pushforward_field_residual(const Realization& r, const ScalarField& upstairs, const ScalarField& downstairs,
                                  const Vector& xi) {
  require(xi.size() == 2 * r.degrees_of_freedom, "pushforward_field_residual: point has wrong dimension");
  const Matrix j = canonical_bracket(r.degrees_of_freedom).structure_matrix_at(xi);
  const Vector image = r.jacobian(xi) * (j * upstairs.gradient(xi));
  const Vector y = r.map(xi);
  const Vector field = r.target->structure_matrix_at(y) * downstairs.gradient(y);
  return (image - field).cwiseAbs().maxCoeff() / std::max(1.0, field.cwiseAbs().maxCoeff());
}

// ---------------------------------------------------------------------------

double ClebschParameters::condition_residual() const {
  require((kappa.array() != 0.0).all(), "ClebschParameters: kappa components must be nonzero");
  return (lambda(1) - lambda(2)) / kappa(0) + (lambda(2) - lambda(0)) / kappa(1) + (lambda(0) - lambda(1)) / kappa(2);
}

std::array<double, 3> ClebschParameters::c_ratios() const {
  std::array<double, 3> c{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int l = (i + 2) % 3;
    if (lambda(j) == lambda(l)) {
      throw DegenerateInput("ClebschParameters: lambda_" + std::to_string(j + 1) + " = lambda_" +
                            std::to_string(l + 1) + ", ratio undefined");
    }
    c[static_cast<std::size_t>(i)] = kappa(i) * (kappa(j) - kappa(l)) / (lambda(j) - lambda(l));
  }
  return c;
}

QuadraticForm ClebschParameters::extra_integral() const {
  const double c = c_ratios()[0];
  Vector d(6);
  d << 2.0 * kappa, Vector::Constant(3, 2.0 * c);
  return QuadraticForm::diagonal(d);
}

QuadraticForm ClebschParameters::hamiltonian() const {
  Vector d(6);
  d << lambda, kappa;
  return QuadraticForm::diagonal(d);
}

ClebschParameters ClebschParameters::integrable(const Eigen::Vector3d& kappa, double mu, double nu) {
  ClebschParameters p;
  p.kappa = kappa;
  p.lambda = {mu * kappa(1) * kappa(2) + nu, mu * kappa(2) * kappa(0) + nu, mu * kappa(0) * kappa(1) + nu};
  return p;
}

HamiltonianSystem clebsch_system(const ClebschParameters& params) {
  HamiltonianSystem sys{std::make_shared<E3Bracket>(), params.hamiltonian(), {}};
  sys.invariants.push_back({"f1", QuadraticForm::diagonal(Vector{{2.0, 2.0, 2.0, 0.0, 0.0, 0.0}})});
  Matrix pairing = Matrix::Zero(6, 6);
  pairing.topRightCorner(3, 3).setIdentity();
  pairing.bottomLeftCorner(3, 3).setIdentity();
  sys.invariants.push_back({"f2", QuadraticForm(pairing)});
  sys.invariants.push_back({"h", params.hamiltonian()});
  const bool distinct =
      params.lambda(0) != params.lambda(1) && params.lambda(1) != params.lambda(2) && params.lambda(0) != params.lambda(2);
  if (distinct && (params.kappa.array() != 0.0).all() && std::abs(params.condition_residual()) <= 1e-12) {
    sys.invariants.push_back({"f3", params.extra_integral()});
  }
  return sys;
}

Vector clebsch_cross_product_field(const ClebschParameters& params, const Vector& z) {
  require(z.size() == 6, "clebsch_cross_product_field: point must have 6 coordinates");
  const Eigen::Vector3d x = z.head<3>();
  const Eigen::Vector3d y = z.tail<3>();
  const Eigen::Vector3d hx = params.lambda.cwiseProduct(x);
  const Eigen::Vector3d hy = params.kappa.cwiseProduct(y);
  Vector out(6);
  out << -x.cross(hy), -(x.cross(hx) + y.cross(hy));
  return out;
}

// ---------------------------------------------------------------------------

HamiltonianSystem fairlie_system(const Eigen::Vector4d& c) {
  require((c.array() != 0.0).all(), "fairlie_system: every c_i must be nonzero");
  PluckerVector pi(4);
  pi.set(0, 2, -4.0 * c(0) * c(2));
  pi.set(0, 3, -4.0 * c(0) * c(3));
  pi.set(1, 2, -4.0 * c(1) * c(2));
  pi.set(1, 3, -4.0 * c(1) * c(3));
  // H = (x1^2/c1 + x2^2/c2 - x3^2/c3 - x4^2/c4) / 16.
  const Vector h{{1.0 / (8.0 * c(0)), 1.0 / (8.0 * c(1)), -1.0 / (8.0 * c(2)), -1.0 / (8.0 * c(3))}};
  HamiltonianSystem sys{std::make_shared<PluckerBracket>(pi), QuadraticForm::diagonal(h), {}};
  sys.invariants.push_back({"f1", QuadraticForm::diagonal(Vector{{2.0 * c(1), -2.0 * c(0), 0.0, 0.0}})});
  sys.invariants.push_back({"f2", QuadraticForm::diagonal(Vector{{0.0, 0.0, 2.0 * c(3), -2.0 * c(2)}})});
  sys.invariants.push_back({"H", QuadraticForm::diagonal(h)});
  return sys;
}

std::vector<QuadraticForm> double_elliptic_casimirs(double g, double kt) {
  require(kt != 0.0, "double_elliptic_casimirs: kt must be nonzero");
  const double g2 = 2.0 * g * g;
  return {
      QuadraticForm::diagonal(Vector{{2.0, -2.0, 0.0, 0.0, 0.0, 0.0}}),
      QuadraticForm::diagonal(Vector{{2.0, 0.0, -2.0, 0.0, 0.0, 0.0}}),
      QuadraticForm::diagonal(Vector{{-g2, 0.0, 0.0, 2.0, -2.0, 0.0}}),
      QuadraticForm::diagonal(Vector{{-g2, 0.0, 0.0, 2.0, 0.0, 2.0 / (kt * kt)}}),
  };
}

HamiltonianSystem double_elliptic_system(double g, double kt) {
  const auto casimirs = double_elliptic_casimirs(g, kt);
  HamiltonianSystem sys{std::make_shared<PluckerBracket>(plucker_from_diagonal_quadrics(casimirs)),
                        QuadraticForm::linear(Vector::Unit(6, 4)), {}};
  for (std::size_t m = 0; m < casimirs.size(); ++m) {
    sys.invariants.push_back({"C" + std::to_string(m + 1), casimirs[m]});
  }
  sys.invariants.push_back({"H", QuadraticForm::linear(Vector::Unit(6, 4))});
  return sys;
}

}  // namespace plucker_poisson
