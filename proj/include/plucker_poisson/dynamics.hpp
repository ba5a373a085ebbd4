#pragma once

#include "plucker_poisson/bracket.hpp"
#include "plucker_poisson/quadratic_form.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace plucker_poisson {

struct HamiltonianSystem {
  BracketPtr source;
  ScalarField hamiltonian;
  std::vector<NamedInvariant> invariants;

  [[nodiscard]] int dimension() const { return source->dimension(); }
  /// Same bracket and invariants, Hamiltonian negated: the time-reversed flow.
  [[nodiscard]] HamiltonianSystem reversed() const;
};

/// P(x) grad H(x).
Vector vector_field(const HamiltonianSystem& sys, const Vector& x);

enum class Method { DormandPrince45, RungeKutta4 };

struct IntegrationControls {
  double rtol = 1e-9;
  double atol = 1e-12;
  Method method = Method::DormandPrince45;
  /// Fixed step for RungeKutta4; initial-step hint (0 = automatic) otherwise.
  double step = 0.0;
  /// Extra output times in [0, t_end], filled by cubic Hermite interpolation
  /// between accepted steps.
  std::vector<double> sample_times;
  std::size_t max_steps = 10'000'000;
};

struct StepStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t evaluations = 0;
  double last_step = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> states;
  std::vector<std::string> invariant_names;
  /// invariant_values[step][m] = invariant m at times[step].
  std::vector<std::vector<double>> invariant_values;
  std::vector<double> sample_times;
  std::vector<Vector> sample_states;
  StepStats stats;

  [[nodiscard]] const Vector& final_state() const { return states.back(); }
};

/// Integration aborted: step size underflow (blow-up) or a non-finite state.
class IntegrationFailure : public std::runtime_error {
 public:
  IntegrationFailure(const std::string& what, double time) : std::runtime_error(what), time_(time) {}
  [[nodiscard]] double time() const { return time_; }

 private:
  double time_;
};

/// Integrates x' = P(x) grad H(x) from t = 0 to t_end (t_end = 0 yields the
/// initial state alone). Adaptive embedded Runge-Kutta 5(4) with PI step
/// control by default; fixed-step classical RK4 on request.
Trajectory integrate(const HamiltonianSystem& sys, const Vector& x0, double t_end,
                     const IntegrationControls& controls = {});

struct InvariantDrift {
  std::string name;
  double initial = 0.0;
  double max_abs = 0.0;     // max_t |f(x(t)) - f(x(0))|
  double normalized = 0.0;  // max_abs / max(1, |f(x(0))|)
};

std::vector<InvariantDrift> invariant_drift(const Trajectory& traj);

/// CSV with header t,x1..xn,inv1..invm, one row per accepted step, %.17g, LF.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

/// max over points of |P_A grad H_A - P_B grad H_B| / max(1, |P_A grad H_A|).
double bihamiltonian_residual(const HamiltonianSystem& a, const HamiltonianSystem& b,
                              const std::vector<Vector>& points);

}  // namespace plucker_poisson
