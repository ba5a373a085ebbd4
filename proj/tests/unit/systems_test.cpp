#include "oracles.hpp"
#include "plucker_poisson/systems.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace pp = plucker_poisson;
using pp::Matrix;
using pp::Vector;

namespace {

Vector cross_field_by_hand(const pp::ClebschParameters& p, const Vector& z) {
  const Eigen::Vector3d x = z.head<3>(), y = z.tail<3>();
  const Eigen::Vector3d hx = p.lambda.cwiseProduct(x), hy = p.kappa.cwiseProduct(y);
  Vector out(6);
  out << hy.cross(x), hx.cross(x) + hy.cross(y);
  return out;
}

}  // namespace

TEST(JacobiBrackets, Entries) {
  const double k = 0.3;
  EXPECT_EQ(pp::jacobi_pi1().pi(), pp::PluckerVector(3, {0.0, 1.0, -1.0}));
  EXPECT_EQ(pp::jacobi_pi2(k).pi(), pp::PluckerVector(3, {1.0, 0.0, k * k}));
  EXPECT_EQ(pp::jacobi_pi3(k).pi(), pp::PluckerVector(3, {1.0, 0.5 * k * k, 0.5 * k * k}));
}

TEST(JacobiBrackets, SameFieldThreeWays) {
  std::mt19937_64 rng(51);
  const auto p = pp::jacobi_bihamiltonian(0.8);
  for (int s = 0; s < 50; ++s) {
    const Vector x = oracles::generic_point(3, rng);
    const Vector f1 = pp::vector_field(p.first, x);
    EXPECT_NEAR(f1(0), x(1) * x(2), 1e-14);
    EXPECT_LT((pp::vector_field(p.second, x) - f1).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((pp::vector_field(p.third, x) - f1).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(JacobiBrackets, PairwiseCompatible) {
  const auto r = pp::compatibility_residuals(pp::jacobi_pi1(), pp::jacobi_pi2(0.5));
  EXPECT_TRUE(r.compatible());
}

TEST(RealizationR4, MapValues) {
  EXPECT_EQ(pp::realization_r4_map(Vector{{0.0, 0.0, 1.0, 1.0}}), (Vector{{1.0, 1.0, 0.0}}));
  const Vector xi{{0.5, -1.0, 2.0, 3.0}};
  EXPECT_EQ(pp::realization_r4_map(xi), (Vector{{2.0, 3.0, 2.0 * -1.0 - 3.0 * 0.5}}));
}

TEST(RealizationR4, JacobianMatchesFiniteDifferences) {
  std::mt19937_64 rng(52);
  const Vector xi = oracles::generic_point(4, rng);
  const Matrix j = pp::realization_r4_jacobian(xi);
  for (int c = 0; c < 4; ++c) {
    Vector hp = xi, hm = xi;
    hp(c) += 1e-6;
    hm(c) -= 1e-6;
    const Vector fd = (pp::realization_r4_map(hp) - pp::realization_r4_map(hm)) / 2e-6;
    EXPECT_LT((fd - j.col(c)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(RealizationR4, PoissonMapAndHamiltonian) {
  std::mt19937_64 rng(53);
  const auto r = pp::realization_r4();
  const double k = 0.5;
  const auto up = pp::realization_r4_hamiltonian(k);
  const auto down = pp::realization_r4_reduced_hamiltonian(k);
  for (int s = 0; s < 100; ++s) {
    const Vector xi = oracles::generic_point(4, rng);
    EXPECT_LT(pp::poisson_map_residual(r, xi), 1e-12);
    EXPECT_NEAR(up(xi), down(pp::realization_r4_map(xi)), 1e-12);
    EXPECT_LT(pp::pushforward_field_residual(r, up, down, xi), 1e-12);
  }
}

// A map that is not Poisson: swapping the first two target coordinates.
TEST(RealizationR4, DetectsNonPoissonMap) {
  auto r = pp::realization_r4();
  r.map = [](const Vector& xi) {
    Vector v = pp::realization_r4_map(xi);
    std::swap(v(0), v(1));
    return v;
  };
  r.jacobian = [](const Vector& xi) {
    Matrix m = pp::realization_r4_jacobian(xi);
    m.row(0).swap(m.row(1));
    return m;
  };
  EXPECT_GT(pp::poisson_map_residual(r, Vector{{0.3, 0.7, -1.1, 0.4}}), 0.1);
}

TEST(ClebschMap, DisplayedComponents) {
  const Vector xi{{1.0, 2.0, 3.0, -0.5, 0.25, 2.0}};
  const Vector q = xi.head(3), p = xi.tail(3);
  const Vector z = pp::clebsch_map(xi);
  EXPECT_EQ(z.head(3), p);
  EXPECT_DOUBLE_EQ(z(3), p(2) * q(1) - p(1) * q(2));
  EXPECT_DOUBLE_EQ(z(4), p(0) * q(2) - p(2) * q(0));
  EXPECT_DOUBLE_EQ(z(5), p(1) * q(0) - p(0) * q(1));
  // Componentwise these are q x p.
  const Eigen::Vector3d q_cross_p = Eigen::Vector3d(q(0), q(1), q(2)).cross(Eigen::Vector3d(p(0), p(1), p(2)));
  EXPECT_NEAR((z.tail(3) - Vector(q_cross_p)).norm(), 0.0, 1e-15);
  EXPECT_EQ(pp::clebsch_map(Vector{{0.0, 0.0, 0.0, 1.0, 2.0, 3.0}}), (Vector{{1.0, 2.0, 3.0, 0.0, 0.0, 0.0}}));
}

TEST(ClebschMap, PoissonMapOntoE3) {
  std::mt19937_64 rng(54);
  const auto r = pp::clebsch_realization();
  for (int s = 0; s < 100; ++s) EXPECT_LT(pp::poisson_map_residual(r, oracles::generic_point(6, rng)), 1e-12);
}

TEST(ClebschMap, UnitParametersPushForward) {
  std::mt19937_64 rng(55);
  const auto r = pp::clebsch_realization();
  const auto h = pp::ClebschParameters{}.hamiltonian();
  for (int s = 0; s < 100; ++s) {
    const Vector xi = oracles::generic_point(6, rng);
    EXPECT_NEAR(pp::clebsch_realization_hamiltonian()(xi), h(pp::clebsch_map(xi)), 1e-12);
    EXPECT_LT(pp::pushforward_field_residual(r, pp::clebsch_realization_hamiltonian(), h, xi), 1e-11);
  }
}

TEST(E3, CasimirsAndRank) {
  std::mt19937_64 rng(56);
  const auto sys = pp::clebsch_system(pp::ClebschParameters{});
  ASSERT_GE(sys.invariants.size(), 3u);
  EXPECT_EQ(sys.invariants[0].name, "f1");
  EXPECT_EQ(sys.invariants[1].name, "f2");
  for (int s = 0; s < 20; ++s) {
    const Vector z = oracles::generic_point(6, rng);
    EXPECT_LT(pp::casimir_residual(*sys.source, sys.invariants[0].function, z), 1e-14);
    EXPECT_LT(pp::casimir_residual(*sys.source, sys.invariants[1].function, z), 1e-14);
    EXPECT_EQ(pp::rank_at(*sys.source, z), 4);
  }
}

TEST(Clebsch, CrossProductForm) {
  std::mt19937_64 rng(57);
  pp::ClebschParameters p;
  p.lambda = Eigen::Vector3d(1.5, -0.3, 2.0);
  p.kappa = Eigen::Vector3d(0.7, 1.1, -2.0);
  const auto sys = pp::clebsch_system(p);
  for (int s = 0; s < 50; ++s) {
    const Vector z = oracles::generic_point(6, rng);
    const Vector f = pp::vector_field(sys, z);
    EXPECT_LT((f - pp::clebsch_cross_product_field(p, z)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((f - cross_field_by_hand(p, z)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Clebsch, ConditionResidual) {
  pp::ClebschParameters p;
  p.lambda = Eigen::Vector3d(1.0, 2.0, 3.0);
  EXPECT_EQ(p.condition_residual(), 0.0);
  p.kappa = Eigen::Vector3d(1.0, 2.0, 4.0);
  EXPECT_DOUBLE_EQ(p.condition_residual(), -1.0 + 2.0 / 2.0 - 1.0 / 4.0);
  p.kappa(1) = 0.0;
  EXPECT_THROW((void)p.condition_residual(), std::invalid_argument);
}

TEST(Clebsch, IntegrableFamily) {
  const Eigen::Vector3d kappa(0.5, 1.5, 2.5);
  const auto p = pp::ClebschParameters::integrable(kappa, -1.25, 0.4);
  EXPECT_NEAR(p.condition_residual(), 0.0, 1e-14);
  EXPECT_DOUBLE_EQ(p.lambda(0), -1.25 * 1.5 * 2.5 + 0.4);
  const auto c = p.c_ratios();
  EXPECT_NEAR(c[0], c[1], 1e-13);
  EXPECT_NEAR(c[1], c[2], 1e-13);
  EXPECT_NEAR(c[0], 1.0 / 1.25, 1e-13);  // c = -1/mu

  const auto sys = pp::clebsch_system(p);
  ASSERT_EQ(sys.invariants.back().name, "f3");
  std::mt19937_64 rng(58);
  for (int s = 0; s < 50; ++s) {
    EXPECT_LT(std::abs(pp::bracket_of(*sys.source, p.extra_integral(), p.hamiltonian(), oracles::generic_point(6, rng))),
              1e-12);
  }
}

// With c multiplying the kappa terms as well, the quadric does not commute
// with h; the working integral keeps the kappa terms unscaled.
TEST(Clebsch, ScaledKappaTermsDoNotCommute) {
  const auto p = pp::ClebschParameters::integrable(Eigen::Vector3d(0.5, 1.5, 2.5), -1.25, 0.4);
  const double c = p.c_ratios()[0];
  Vector d(6);
  d << 2.0 * c * p.kappa, Vector::Constant(3, 2.0 * c);
  const auto literal = pp::QuadraticForm::diagonal(d);
  const auto sys = pp::clebsch_system(p);
  std::mt19937_64 rng(59);
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    worst = std::max(worst, std::abs(pp::bracket_of(*sys.source, literal, p.hamiltonian(), oracles::generic_point(6, rng))));
  }
  EXPECT_GT(worst, 1e-2);
}

TEST(Clebsch, DegenerateRatios) {
  pp::ClebschParameters p;
  p.lambda = Eigen::Vector3d(1.0, 2.0, 2.0);
  EXPECT_THROW((void)p.c_ratios(), pp::DegenerateInput);
  // Equal lambdas: the extra integral is not monitored.
  EXPECT_EQ(pp::clebsch_system(pp::ClebschParameters{}).invariants.size(), 3u);
}

TEST(Fairlie, BracketAndField) {
  const Eigen::Vector4d c(1.0, -2.0, 0.5, 3.0);
  const auto sys = pp::fairlie_system(c);
  const auto& pi = dynamic_cast<const pp::PluckerBracket&>(*sys.source).pi();
  EXPECT_EQ(pi.get(0, 1), 0.0);
  EXPECT_EQ(pi.get(2, 3), 0.0);
  EXPECT_DOUBLE_EQ(pi.get(0, 2), -4 * c(0) * c(2));
  EXPECT_DOUBLE_EQ(pi.get(1, 3), -4 * c(1) * c(3));
  EXPECT_EQ(pp::plucker_residuals(pi)[0].residual, 0.0);
  std::mt19937_64 rng(60);
  for (int s = 0; s < 50; ++s) {
    const Vector x = oracles::generic_point(4, rng);
    const Vector f = pp::vector_field(sys, x);
    for (int i = 0; i < 4; ++i) {
      const double prod = x.prod() / x(i);
      EXPECT_NEAR(f(i), c(i) * prod, 1e-11 * std::max(1.0, std::abs(c(i) * prod)));
    }
  }
  EXPECT_THROW((void)pp::fairlie_system(Eigen::Vector4d(1.0, 0.0, 1.0, 1.0)), std::invalid_argument);
}

// From a point with all coordinates positive and all c_i > 0 the orbit
// escapes to infinity in finite time; the integrals hold up to that point.
TEST(Fairlie, ConservationBeforeBlowUp) {
  const auto sys = pp::fairlie_system(Eigen::Vector4d(1.0, 1.0, 1.0, 0.25));
  const Vector x0{{0.3, 0.4, 0.5, 0.6}};
  const auto traj = pp::integrate(sys, x0, 2.5);
  for (const auto& d : pp::invariant_drift(traj)) EXPECT_LE(d.max_abs, 1e-6) << d.name;
  try {
    (void)pp::integrate(sys, x0, 20.0);
    FAIL() << "expected a blow-up";
  } catch (const pp::IntegrationFailure& e) {
    EXPECT_GT(e.time(), 2.5);
    EXPECT_LT(e.time(), 20.0);
  }
}

TEST(Fairlie, BuiltinOrbitStaysBounded) {
  const auto sys = pp::fairlie_system(Eigen::Vector4d(1.0, 1.0, 1.0, 0.25));
  const auto traj = pp::integrate(sys, Vector{{0.3, 0.3, 0.5, -0.6}}, 50.0);
  for (const auto& d : pp::invariant_drift(traj)) EXPECT_LE(d.max_abs, 1e-6) << d.name;
  EXPECT_LT(traj.final_state().cwiseAbs().maxCoeff(), 2.0);
}

TEST(DoubleElliptic, BracketIsScaledFairlie) {
  const double g = 1.3, kt = 0.8;
  const auto sys = pp::double_elliptic_system(g, kt);
  const auto& pi = dynamic_cast<const pp::PluckerBracket&>(*sys.source).pi();
  const double factor = 16.0 / (kt * kt);
  EXPECT_NEAR(pi.get(0, 4), -factor, 1e-12);
  EXPECT_NEAR(pi.get(1, 4), -factor, 1e-12);
  EXPECT_NEAR(pi.get(2, 4), -factor, 1e-12);
  EXPECT_NEAR(pi.get(3, 4), -factor * g * g, 1e-12);
  EXPECT_NEAR(pi.get(4, 5), 0.0, 1e-12);
  EXPECT_TRUE(pp::is_decomposable(pi));

  const auto fairlie = pp::fairlie_system(Eigen::Vector4d(1.0, 1.0, 1.0, g * g));
  std::mt19937_64 rng(61);
  for (int s = 0; s < 20; ++s) {
    const Vector x = oracles::generic_point(6, rng);
    const Vector f = pp::vector_field(sys, x);
    const Vector reduced = pp::vector_field(fairlie, x.head(4));
    EXPECT_LT((f.head(4) + factor * x(5) * reduced).cwiseAbs().maxCoeff(), 1e-11 * factor * 16.0);
    EXPECT_NEAR(f(4), 0.0, 1e-12);
  }
}

TEST(DoubleElliptic, CasimirsAreCasimirs) {
  const auto sys = pp::double_elliptic_system(1.0, 0.8);
  std::mt19937_64 rng(62);
  for (const auto& f : pp::double_elliptic_casimirs(1.0, 0.8)) {
    for (int s = 0; s < 20; ++s) EXPECT_LT(pp::casimir_residual(*sys.source, f, oracles::generic_point(6, rng)), 1e-12);
  }
  EXPECT_THROW((void)pp::double_elliptic_casimirs(1.0, 0.0), std::invalid_argument);
}
