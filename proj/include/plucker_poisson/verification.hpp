#pragma once

// Verification suites and machine-readable reports behind the CLI.

#include "plucker_poisson/elliptic.hpp"
#include "plucker_poisson/scenario.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace plucker_poisson {

struct CheckResult {
  std::string check;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  /// Quantity reported alongside the residual (a fitted factor, a rank).
  std::optional<double> value;
};

struct VerificationReport {
  std::string name;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool verdict() const;
  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] const CheckResult* find(const std::string& check) const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int sample_points = 100;
  /// Relative tolerance of the sampled structural checks.
  double tolerance = 1e-10;
  /// Worker threads for per-point evaluation; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Structural checks for the scenario's bracket plus any optional checks the
/// scenario declares. Deterministic for a fixed seed.
VerificationReport verify_scenario(const ScenarioSpec& spec, const VerifyOptions& options = {});

struct CompatReport {
  std::string name;
  CompatibilityResult result;
  double tolerance = 0.0;

  [[nodiscard]] bool compatible() const { return result.compatible(); }
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Both specs must use the plucker structure with equal dimensions
/// (SpecError otherwise).
CompatReport compat_scenarios(const ScenarioSpec& a, const ScenarioSpec& b, const CompatibilityOptions& options);

struct IntegrationReport {
  std::string name;
  Trajectory trajectory;
  std::vector<InvariantDrift> drift;
  double drift_bound = 0.0;
  std::optional<std::string> failure;
  double failure_time = 0.0;

  /// No failure and every normalized drift within the bound.
  [[nodiscard]] bool ok() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

IntegrationReport integrate_scenario(const ScenarioSpec& spec);

struct EllipticRow {
  double t = 0.0;
  JacobiTriple ode;
  /// Present where the quadrature oracle applies (|t| <= K(k)).
  std::optional<JacobiTriple> oracle;
};

struct EllipticTable {
  double k = 0.0;
  std::vector<EllipticRow> rows;
  double max_identity = 0.0;      // max of |sn^2 + cn^2 - 1| and |k^2 sn^2 + dn^2 - 1|
  double max_oracle_delta = 0.0;  // max |ODE - oracle| over sn, cn, dn

  /// Identities within 1e-9 and oracle deltas within 1e-7.
  [[nodiscard]] bool ok() const;
  /// t,sn,cn,dn,identity_sn_cn,identity_dn,sn_oracle_delta,cn_oracle_delta,dn_oracle_delta;
  /// oracle columns are empty off the primary branch.
  void write_csv(std::ostream& out) const;
};

/// steps + 1 equally spaced times on [0, t_max]. Throws InvalidArgument for
/// k outside [0, 1), steps < 1 or a non-finite t_max.
EllipticTable elliptic_table(double k, double t_max, int steps);

}  // namespace plucker_poisson
