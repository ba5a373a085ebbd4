#include "oracles.hpp"
#include "plucker_poisson/dynamics.hpp"
#include "plucker_poisson/elliptic.hpp"
#include "plucker_poisson/systems.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

namespace pp = plucker_poisson;
using pp::Vector;

namespace {

pp::HamiltonianSystem plucker_system(const pp::PluckerVector& pi, const pp::QuadraticForm& h) {
  return {std::make_shared<pp::PluckerBracket>(pi), h, {}};
}

}  // namespace

TEST(VectorField, JacobiSystem) {
  const double k = 0.6;
  const auto sys = pp::jacobi_elliptic_system(k);
  const Vector x{{0.3, -0.8, 1.2}};
  const Vector f = pp::vector_field(sys, x);
  EXPECT_NEAR(f(0), x(1) * x(2), 1e-15);
  EXPECT_NEAR(f(1), -x(0) * x(2), 1e-15);
  EXPECT_NEAR(f(2), -k * k * x(0) * x(1), 1e-15);
}

TEST(VectorField, CasimirHamiltonianGivesZeroField) {
  const auto sys = plucker_system(pp::PluckerVector(3, {0.0, 1.0, -1.0}), pp::QuadraticForm::diagonal(Vector{{1.0, 1.0, 0.0}}));
  EXPECT_LT(pp::vector_field(sys, Vector{{0.4, 1.1, -0.7}}).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Integrate, SineAndCosineAtZeroModulus) {
  const auto sys = pp::jacobi_elliptic_system(0.0);
  pp::IntegrationControls c;
  for (int i = 1; i <= 100; ++i) c.sample_times.push_back(0.1 * i);
  const auto traj = pp::integrate(sys, Vector{{0.0, 1.0, 1.0}}, 10.0, c);
  ASSERT_EQ(traj.sample_states.size(), 100u);
  for (std::size_t i = 0; i < traj.sample_times.size(); ++i) {
    const double t = traj.sample_times[i];
    const Vector& s = traj.sample_states[i];
    EXPECT_NEAR(s(0), std::sin(t), 1e-8) << t;
    EXPECT_NEAR(s(1), std::cos(t), 1e-8) << t;
    EXPECT_NEAR(s(2), 1.0, 1e-12);
  }
  // Accepted-step states obey the same closed form.
  for (std::size_t i = 0; i < traj.times.size(); ++i) EXPECT_NEAR(traj.states[i](0), std::sin(traj.times[i]), 1e-8);
}

TEST(Integrate, JacobiInvariantsToFifty) {
  for (double k : {0.2, 0.5, 0.9}) {
    const auto traj = pp::integrate(pp::jacobi_elliptic_system(k), Vector{{0.0, 1.0, 1.0}}, 50.0);
    ASSERT_EQ(traj.invariant_names.size(), 2u);
    for (const auto& d : pp::invariant_drift(traj)) EXPECT_LE(d.max_abs, 1e-6) << d.name << " k=" << k;
    EXPECT_DOUBLE_EQ(traj.times.back(), 50.0);
  }
}

TEST(Integrate, TimesStrictlyIncreasing) {
  const auto traj = pp::integrate(pp::jacobi_elliptic_system(0.5), Vector{{0.0, 1.0, 1.0}}, 5.0);
  ASSERT_EQ(traj.times.size(), traj.states.size());
  ASSERT_EQ(traj.times.size(), traj.invariant_values.size());
  for (std::size_t i = 1; i < traj.times.size(); ++i) EXPECT_GT(traj.times[i], traj.times[i - 1]);
  EXPECT_EQ(traj.stats.accepted + 1, traj.times.size());
}

TEST(Integrate, StationaryAtOrigin) {
  std::mt19937_64 rng(41);
  const auto pi = pp::wedge({oracles::normal_vector(5, rng), oracles::normal_vector(5, rng)});
  const auto sys = plucker_system(pi, pp::QuadraticForm::diagonal(Vector::Ones(5)));
  const auto traj = pp::integrate(sys, Vector::Zero(5), 3.0);
  EXPECT_TRUE(traj.final_state().isZero(0.0));
}

TEST(Integrate, ZeroAndNegativeHorizon) {
  const auto sys = pp::jacobi_elliptic_system(0.5);
  const Vector x0{{0.1, 0.2, 0.3}};
  const auto traj = pp::integrate(sys, x0, 0.0);
  ASSERT_EQ(traj.times.size(), 1u);
  EXPECT_EQ(traj.final_state(), x0);
  EXPECT_THROW((void)pp::integrate(sys, x0, -1.0), std::invalid_argument);
  pp::IntegrationControls bad;
  bad.rtol = 0.0;
  EXPECT_THROW((void)pp::integrate(sys, x0, 1.0, bad), std::invalid_argument);
  EXPECT_THROW((void)pp::integrate(sys, Vector::Zero(4), 1.0), std::invalid_argument);
}

TEST(Integrate, TinyHorizonIsNotABlowUp) {
  const auto sys = pp::jacobi_elliptic_system(0.5);
  const auto traj = pp::integrate(sys, Vector{{0.0, 1.0, 1.0}}, 1e-16);
  EXPECT_EQ(traj.times.back(), 1e-16);
}

TEST(Integrate, RungeKutta4FixedStep) {
  const auto sys = pp::jacobi_elliptic_system(0.5);
  pp::IntegrationControls rk;
  rk.method = pp::Method::RungeKutta4;
  rk.step = 0.25;
  const auto coarse = pp::integrate(sys, Vector{{0.0, 1.0, 1.0}}, 20.0, rk);
  EXPECT_EQ(coarse.stats.accepted, 80u);
  const auto adaptive = pp::integrate(sys, Vector{{0.0, 1.0, 1.0}}, 20.0);
  const double coarse_drift = pp::invariant_drift(coarse)[0].max_abs;
  EXPECT_GT(coarse_drift, pp::invariant_drift(adaptive)[0].max_abs);
  EXPECT_LT(coarse_drift, 1e-3);
  rk.step = 0.0;
  EXPECT_THROW((void)pp::integrate(sys, Vector{{0.0, 1.0, 1.0}}, 1.0, rk), std::invalid_argument);
}

TEST(Integrate, ForwardBackward) {
  const auto sys = pp::jacobi_elliptic_system(0.7);
  const Vector x0{{0.0, 1.0, 1.0}};
  const auto forward = pp::integrate(sys, x0, 10.0);
  const auto back = pp::integrate(sys.reversed(), forward.final_state(), 10.0);
  EXPECT_LT((back.final_state() - x0).cwiseAbs().maxCoeff(), 1e-7);
}

// Casimirs of a Plücker bracket are conserved for any Hamiltonian.
TEST(Integrate, PluckerCasimirsConserved) {
  std::mt19937_64 rng(42);
  const auto pi = pp::wedge({oracles::normal_vector(5, rng), oracles::normal_vector(5, rng)});
  auto sys = plucker_system(1.0 / pi.max_abs() * pi, pp::QuadraticForm::diagonal(Vector{{1.0, 2.0, 1.0, 3.0, 1.0}}));
  const pp::PluckerBracket b(1.0 / pi.max_abs() * pi);
  int m = 0;
  for (const auto& f : pp::kernel_casimirs(b)) sys.invariants.push_back({"C" + std::to_string(++m), f});
  sys.invariants.push_back({"H", sys.hamiltonian});
  const auto traj = pp::integrate(sys, Vector{{0.3, -0.2, 0.4, 0.1, -0.5}}, 20.0);
  for (const auto& d : pp::invariant_drift(traj)) EXPECT_LE(d.max_abs, 1e-8) << d.name;
}

TEST(Integrate, FairlieLiteralHamiltonianBlowsUp) {
  // All four separable signs equal: the orbit is unbounded and reaches
  // infinity in finite time.
  const auto sys = pp::fairlie_system(Vector{{1.0, 1.0, 1.0, 1.0}});
  const Vector x0{{0.5, 0.6, 0.7, 0.8}};
  try {
    (void)pp::integrate(sys, x0, 50.0);
    FAIL() << "expected a blow-up";
  } catch (const pp::IntegrationFailure& e) {
    EXPECT_GT(e.time(), 0.1);
    EXPECT_LT(e.time(), 50.0);
    pp::IntegrationControls c;
    const auto before = pp::integrate(sys, x0, 0.5 * e.time(), c);
    for (const auto& d : pp::invariant_drift(before)) EXPECT_LE(d.normalized, 1e-6) << d.name;
  }
}

TEST(Drift, NormalizedByInitialMagnitude) {
  pp::Trajectory t;
  t.invariant_names = {"a", "b"};
  t.invariant_values = {{10.0, 0.5}, {10.2, 0.4}, {9.9, 0.45}};
  t.times = {0.0, 1.0, 2.0};
  t.states.assign(3, Vector::Zero(1));
  const auto d = pp::invariant_drift(t);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(d[0].max_abs, 0.2, 1e-14);
  EXPECT_NEAR(d[0].normalized, 0.02, 1e-14);
  EXPECT_NEAR(d[1].max_abs, 0.1, 1e-14);
  EXPECT_NEAR(d[1].normalized, 0.1, 1e-14);
}

TEST(Csv, HeaderAndRows) {
  const auto traj = pp::integrate(pp::jacobi_elliptic_system(0.5), Vector{{0.0, 1.0, 1.0}}, 1.0);
  std::ostringstream out;
  pp::write_trajectory_csv(traj, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t,x1,x2,x3,inv1,inv2");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5);
  }
  EXPECT_EQ(rows, traj.times.size());
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
  EXPECT_EQ(out.str().substr(header.size() + 1, 2), "0,");
}

TEST(Bihamiltonian, SelfResidualIsZero) {
  const auto p = pp::jacobi_bihamiltonian(0.4);
  const std::vector<Vector> pts = {Vector{{0.1, 0.2, 0.3}}, Vector{{-1.0, 0.5, 2.0}}};
  EXPECT_EQ(pp::bihamiltonian_residual(p.first, p.first, pts), 0.0);
  EXPECT_LT(pp::bihamiltonian_residual(p.first, p.second, pts), 1e-15);
  EXPECT_LT(pp::bihamiltonian_residual(p.first, p.third, pts), 1e-15);
  // Different Hamiltonian on the same bracket is detected.
  auto other = p.second;
  other.hamiltonian = pp::QuadraticForm::diagonal(Vector{{1.0, 2.0, 0.0}});
  EXPECT_GT(pp::bihamiltonian_residual(p.first, other, pts), 0.1);
}
