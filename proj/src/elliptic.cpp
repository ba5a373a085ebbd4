#include "plucker_poisson/elliptic.hpp"

#include "plucker_poisson/bracket.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <string>

namespace plucker_poisson {
namespace {

void require_modulus(double k) {
  require(k >= 0.0 && k < 1.0, "elliptic functions: modulus must lie in [0, 1), got " + std::to_string(k));
}

JacobiTriple to_triple(const Vector& s, double sign) { return {sign * s(0), s(1), s(2)}; }

}  // namespace

HamiltonianSystem jacobi_elliptic_system(double k) {
  PluckerVector pi(3);
  pi.set(0, 2, 1.0);   // {x, z} = y
  pi.set(1, 2, -1.0);  // {y, z} = -x
  const double k2 = k * k;
  HamiltonianSystem sys{std::make_shared<PluckerBracket>(pi), QuadraticForm::diagonal(Vector{{k2, 0.0, 1.0}}), {}};
  sys.invariants.push_back({"F", QuadraticForm::diagonal(Vector{{2.0, 2.0, 0.0}})});
  sys.invariants.push_back({"G", QuadraticForm::diagonal(Vector{{2.0 * k2, 0.0, 2.0}})});
  return sys;
}

IntegrationControls elliptic_controls() {
  IntegrationControls c;
  c.rtol = 1e-12;
  c.atol = 1e-14;
  return c;
}

JacobiTriple jacobi_elliptic(double t, double k, const IntegrationControls& controls) {
  const double times[] = {t};
  return jacobi_elliptic_grid(times, k, controls).front();
}

std::vector<JacobiTriple> jacobi_elliptic_grid(std::span<const double> times, double k,
                                               const IntegrationControls& controls) {
  require_modulus(k);
  for (double t : times) require(std::isfinite(t), "jacobi_elliptic: time must be finite");
  const auto sys = jacobi_elliptic_system(k);
  std::vector<JacobiTriple> out(times.size());

  // Visit |t| in increasing order, integrating segment by segment.
  std::vector<std::size_t> order(times.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return std::abs(times[a]) < std::abs(times[b]); });

  Vector state{{0.0, 1.0, 1.0}};
  double reached = 0.0;
  for (std::size_t idx : order) {
    const double target = std::abs(times[idx]);
    if (target > reached) {
      state = integrate(sys, state, target - reached, controls).final_state();
      reached = target;
    }
    out[idx] = to_triple(state, times[idx] < 0.0 ? -1.0 : 1.0);
  }
  return out;
}

double incomplete_elliptic_f(double phi, double k) {
  require_modulus(k);
  const double k2 = k * k;
  auto integrand = [k2](double theta) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - k2 * s * s);
  };
  if (phi == 0.0) return 0.0;
  // Boost's tolerance is relative to the L1 norm; scale it by an upper bound on
  // the integral so the absolute error stays near 1e-12. Asking for much less
  // drives the error estimate into roundoff and the recursion to full depth.
  const double bound = std::abs(phi) / std::sqrt(1.0 - k2);
  const double tol = 1e-12 / std::max(1.0, bound);
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, 0.0, phi, 12, tol);
}

double quarter_period(double k) { return incomplete_elliptic_f(std::numbers::pi / 2.0, k); }

JacobiTriple elliptic_oracle(double t, double k) {
  require_modulus(k);
  const double big_k = quarter_period(k);
  const double target = std::abs(t);
  require(target <= big_k * (1.0 + 1e-14),
          "elliptic_oracle: |t| = " + std::to_string(target) + " exceeds the quarter period " + std::to_string(big_k));
  if (target == 0.0) return {0.0, 1.0, 1.0};

  double lo = 0.0;
  double hi = std::numbers::pi / 2.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (incomplete_elliptic_f(mid, k) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double phi = 0.5 * (lo + hi);
  const double s = std::sin(phi);
  // dF/dphi = 1 / sqrt(1 - k^2 sin^2 phi).
  phi -= (incomplete_elliptic_f(phi, k) - target) * std::sqrt(1.0 - k * k * s * s);
  phi = std::clamp(phi, 0.0, std::numbers::pi / 2.0);

  const double sn = std::sin(phi);
  const double sign = t < 0.0 ? -1.0 : 1.0;
  return {sign * sn, std::cos(phi), std::sqrt(1.0 - k * k * sn * sn)};
}

}  // namespace plucker_poisson
