#include "plucker_poisson/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

namespace plucker_poisson {

HamiltonianSystem HamiltonianSystem::reversed() const {
  const ScalarField h = hamiltonian;
  ScalarField negated([h](const Vector& x) { return -h(x); },
                      [h](const Vector& x) -> Vector { return -h.gradient(x); });
  return {source, std::move(negated), invariants};
}

Vector vector_field(const HamiltonianSystem& sys, const Vector& x) {
  require(x.size() == sys.dimension(), "vector_field: point has wrong dimension");
  return sys.source->structure_matrix_at(x) * sys.hamiltonian.gradient(x);
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kMinScale = 0.2;
constexpr double kMaxScale = 5.0;
constexpr double kAlpha = 0.7 / 5.0;
constexpr double kBeta = 0.4 / 5.0;

class Recorder {
 public:
  Recorder(const HamiltonianSystem& sys, const IntegrationControls& controls, double t_end, Trajectory& out)
      : sys_(sys), out_(out) {
    for (const auto& inv : sys.invariants) out_.invariant_names.push_back(inv.name);
    pending_ = controls.sample_times;
    std::sort(pending_.begin(), pending_.end());
    for (double s : pending_) {
      require(s >= 0.0 && s <= t_end, "integrate: sample time outside [0, t_end]");
    }
  }

  void record(double t, const Vector& x) {
    if (!x.allFinite()) throw IntegrationFailure("integrate: non-finite state at t = " + std::to_string(t), t);
    out_.times.push_back(t);
    out_.states.push_back(x);
    std::vector<double> values;
    values.reserve(sys_.invariants.size());
    for (const auto& inv : sys_.invariants) values.push_back(inv.function(x));
    out_.invariant_values.push_back(std::move(values));
  }

  // Cubic Hermite interpolation of the samples falling in [t0, t1].
  void interpolate(double t0, const Vector& y0, const Vector& f0, double t1, const Vector& y1, const Vector& f1) {
    const double h = t1 - t0;
    while (next_ < pending_.size() && pending_[next_] <= t1) {
      const double s = pending_[next_];
      Vector y;
      if (h == 0.0) {
        y = y1;
      } else {
        const double u = (s - t0) / h;
        const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
        const double h10 = u * (1 - u) * (1 - u);
        const double h01 = u * u * (3 - 2 * u);
        const double h11 = u * u * (u - 1);
        y = h00 * y0 + h10 * h * f0 + h01 * y1 + h11 * h * f1;
      }
      out_.sample_times.push_back(s);
      out_.sample_states.push_back(std::move(y));
      ++next_;
    }
  }

 private:
  const HamiltonianSystem& sys_;
  Trajectory& out_;
  std::vector<double> pending_;
  std::size_t next_ = 0;
};

double error_norm(const Vector& err, const Vector& y0, const Vector& y1, double rtol, double atol) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double sc = atol + rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
    const double r = err(i) / sc;
    sum += r * r;
  }
  return std::sqrt(sum / static_cast<double>(err.size()));
}

double initial_step(const HamiltonianSystem& sys, const Vector& y0, const Vector& f0, double rtol, double atol,
                    double t_end, StepStats& stats) {
  auto scaled = [&](const Vector& v) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double r = v(i) / (atol + rtol * std::abs(y0(i)));
      sum += r * r;
    }
    return std::sqrt(sum / static_cast<double>(v.size()));
  };
  const double d0 = scaled(y0);
  const double d1 = scaled(f0);
  const double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  const Vector f1 = vector_field(sys, y0 + h0 * f0);
  ++stats.evaluations;
  const double d2 = scaled(f1 - f0) / h0;
  const double h1 = std::max(d1, d2) <= 1e-15 ? std::max(1e-6, h0 * 1e-3)
                                              : std::pow(0.01 / std::max(d1, d2), 1.0 / 5.0);
  return std::min({100.0 * h0, h1, t_end});
}

void integrate_dopri(const HamiltonianSystem& sys, const Vector& x0, double t_end, const IntegrationControls& c,
                     Recorder& rec, Trajectory& out) {
  auto& stats = out.stats;
  double t = 0.0;
  Vector y = x0;
  Vector k1 = vector_field(sys, y);
  ++stats.evaluations;
  double h = c.step > 0.0 ? std::min(c.step, t_end) : initial_step(sys, y, k1, c.rtol, c.atol, t_end, stats);
  double err_prev = 1e-4;
  bool last_rejected = false;

  while (t < t_end) {
    if (stats.accepted + stats.rejected >= c.max_steps) {
      throw IntegrationFailure("integrate: step budget exhausted at t = " + std::to_string(t), t);
    }
    const double min_step = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
    if (h < min_step && h < t_end - t) {
      throw IntegrationFailure("integrate: step size underflow (blow-up) at t = " + std::to_string(t), t);
    }
    const bool final_step = t + h >= t_end;
    if (final_step) h = t_end - t;

    const Vector k2 = vector_field(sys, y + h * a21 * k1);
    const Vector k3 = vector_field(sys, y + h * (a31 * k1 + a32 * k2));
    const Vector k4 = vector_field(sys, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vector k5 = vector_field(sys, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vector k6 = vector_field(sys, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Vector y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vector k7 = vector_field(sys, y_new);
    stats.evaluations += 6;

    const Vector err_vec = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double err = error_norm(err_vec, y, y_new, c.rtol, c.atol);
    if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();

    if (err <= 1.0) {
      const double t_new = final_step ? t_end : t + h;
      rec.interpolate(t, y, k1, t_new, y_new, k7);
      t = t_new;
      y = y_new;
      k1 = k7;
      rec.record(t, y);
      ++stats.accepted;
      stats.last_step = h;
      double scale = err == 0.0 ? kMaxScale
                                : kSafety * std::pow(err, -kAlpha) * std::pow(err_prev, kBeta);
      scale = std::clamp(scale, kMinScale, kMaxScale);
      if (last_rejected) scale = std::min(scale, 1.0);
      h *= scale;
      err_prev = std::max(err, 1e-4);
      last_rejected = false;
    } else {
      ++stats.rejected;
      const double scale = std::isfinite(err) ? std::max(kMinScale, kSafety * std::pow(err, -1.0 / 5.0)) : kMinScale;
      h *= scale;
      last_rejected = true;
    }
  }
}

void integrate_rk4(const HamiltonianSystem& sys, const Vector& x0, double t_end, const IntegrationControls& c,
                   Recorder& rec, Trajectory& out) {
  require(c.step > 0.0, "integrate: RK4 needs a positive fixed step");
  auto& stats = out.stats;
  double t = 0.0;
  Vector y = x0;
  Vector k1 = vector_field(sys, y);
  ++stats.evaluations;
  while (t < t_end) {
    if (stats.accepted >= c.max_steps) {
      throw IntegrationFailure("integrate: step budget exhausted at t = " + std::to_string(t), t);
    }
    const bool final_step = t + c.step >= t_end * (1.0 - 1e-14);
    const double h = final_step ? t_end - t : c.step;
    const Vector k2 = vector_field(sys, y + 0.5 * h * k1);
    const Vector k3 = vector_field(sys, y + 0.5 * h * k2);
    const Vector k4 = vector_field(sys, y + h * k3);
    const Vector y_new = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const Vector f_new = vector_field(sys, y_new);
    stats.evaluations += 4;
    const double t_new = final_step ? t_end : t + h;
    rec.interpolate(t, y, k1, t_new, y_new, f_new);
    t = t_new;
    y = y_new;
    k1 = f_new;
    rec.record(t, y);
    ++stats.accepted;
    stats.last_step = h;
  }
}

}  // namespace

Trajectory integrate(const HamiltonianSystem& sys, const Vector& x0, double t_end,
                     const IntegrationControls& controls) {
  require(x0.size() == sys.dimension(), "integrate: initial state has wrong dimension");
  require(t_end >= 0.0 && std::isfinite(t_end), "integrate: t_end must be finite and non-negative");
  require(controls.rtol > 0.0 && controls.atol > 0.0, "integrate: tolerances must be positive");
  Trajectory out;
  Recorder rec(sys, controls, t_end, out);
  rec.record(0.0, x0);
  const Vector f0 = vector_field(sys, x0);
  if (t_end == 0.0) {
    rec.interpolate(0.0, x0, f0, 0.0, x0, f0);
    return out;
  }
  if (controls.method == Method::RungeKutta4) {
    integrate_rk4(sys, x0, t_end, controls, rec, out);
  } else {
    integrate_dopri(sys, x0, t_end, controls, rec, out);
  }
  return out;
}

std::vector<InvariantDrift> invariant_drift(const Trajectory& traj) {
  require(!traj.states.empty(), "invariant_drift: empty trajectory");
  std::vector<InvariantDrift> out;
  for (std::size_t m = 0; m < traj.invariant_names.size(); ++m) {
    InvariantDrift d;
    d.name = traj.invariant_names[m];
    d.initial = traj.invariant_values.front()[m];
    for (const auto& row : traj.invariant_values) d.max_abs = std::max(d.max_abs, std::abs(row[m] - d.initial));
    d.normalized = d.max_abs / std::max(1.0, std::abs(d.initial));
    out.push_back(d);
  }
  return out;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  const auto n = traj.states.empty() ? 0 : traj.states.front().size();
  out << "t";
  for (Eigen::Index i = 1; i <= n; ++i) out << ",x" << i;
  for (std::size_t m = 1; m <= traj.invariant_names.size(); ++m) out << ",inv" << m;
  out << '\n';
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
  };
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    put(traj.times[s]);
    for (Eigen::Index i = 0; i < n; ++i) {
      out << ',';
      put(traj.states[s](i));
    }
    for (double v : traj.invariant_values[s]) {
      out << ',';
      put(v);
    }
    out << '\n';
  }
}

double bihamiltonian_residual(const HamiltonianSystem& a, const HamiltonianSystem& b,
                              const std::vector<Vector>& points) {
  require(a.dimension() == b.dimension(), "bihamiltonian_residual: dimension mismatch");
  double worst = 0.0;
  for (const auto& x : points) {
    const Vector va = vector_field(a, x);
    const Vector vb = vector_field(b, x);
    worst = std::max(worst, (va - vb).norm() / std::max(1.0, va.norm()));
  }
  return worst;
}

}  // namespace plucker_poisson
