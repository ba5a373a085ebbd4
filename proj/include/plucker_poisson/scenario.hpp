#pragma once

// Scenario descriptions: JSON schema, built-in catalog and system assembly.
//
// Indices in JSON are 1-based; the C++ API is 0-based throughout.

#include "plucker_poisson/dynamics.hpp"
#include "plucker_poisson/poisson.hpp"
#include "plucker_poisson/systems.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace plucker_poisson {

/// Malformed or inconsistent scenario input. The message names the field.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Structure { Plucker, E3, Canonical };

struct NamedForm {
  std::string name;
  QuadraticForm form;
  friend bool operator==(const NamedForm&, const NamedForm&) = default;
};

/// Pair (i, j) with the value expected for pi_ij, up to `ExpectedPi::factor`.
struct PiEntry {
  int i = 0;
  int j = 0;
  double value = 0.0;
  friend bool operator==(const PiEntry&, const PiEntry&) = default;
};

struct ExpectedPi {
  std::vector<PiEntry> entries;
  /// Fixed factor relating pi to the entries; empty means "one common factor,
  /// computed and reported".
  std::optional<double> factor;
  friend bool operator==(const ExpectedPi&, const ExpectedPi&) = default;
};

struct RealizationSpec {
  std::string map;  // "r4" or "clebsch"
  double k = 0.0;   // r4 only
  friend bool operator==(const RealizationSpec&, const RealizationSpec&) = default;
};

struct PartnerSpec {
  PluckerVector pi;
  QuadraticForm hamiltonian;
  friend bool operator==(const PartnerSpec&, const PartnerSpec&) = default;
};

struct ScenarioSpec {
  std::string name;
  int dimension = 0;
  Structure structure = Structure::Plucker;
  /// Required for Structure::Plucker unless jacobian_casimirs is given, in
  /// which case it is generated from them.
  std::optional<PluckerVector> pi;
  bool unchecked = false;
  std::optional<QuadraticForm> hamiltonian;
  Vector initial;
  double t_end = 0.0;
  IntegrationControls controls;
  /// Empty with monitor_auto = true: kernel Casimirs (or e(3) Casimirs) and H.
  bool monitor_auto = true;
  std::vector<NamedForm> monitor;
  double drift_bound = 1e-6;

  // Optional checks beyond the structural ones.
  /// Extra functions that must Poisson-commute with every coordinate.
  std::vector<NamedForm> casimirs;
  /// n-2 diagonal quadrics whose Jacobian bracket must reproduce pi, exactly
  /// `jacobian_factor` times pi when given, else up to a reported factor.
  std::vector<NamedForm> jacobian_casimirs;
  std::optional<double> jacobian_factor;
  std::optional<ExpectedPi> expected_pi;
  std::optional<RealizationSpec> realization;
  std::vector<PartnerSpec> bihamiltonian;
  std::optional<ClebschParameters> clebsch;

  /// The Plücker vector actually used: `pi`, or generated from the quadrics.
  [[nodiscard]] PluckerVector plucker_vector() const;
  /// Throws SpecError on inconsistent dimensions or a non-Poisson pi (unless unchecked).
  void validate() const;
};

bool operator==(const ScenarioSpec& a, const ScenarioSpec& b);

ScenarioSpec scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioSpec& spec);

/// Parses text; syntax errors report line and column.
ScenarioSpec parse_scenario(const std::string& text);

BracketPtr make_bracket(const ScenarioSpec& spec);
/// Hamiltonian system with monitors resolved ("auto" expanded).
HamiltonianSystem make_system(const ScenarioSpec& spec);

/// Parameter defaults: k = 0.5, j = (1,2,3), g = 1, kt = 0.8,
/// lambda = (1,2,3), kappa = (1,1,1), Fairlie c = (1,1,1,1/4).
std::vector<ScenarioSpec> builtin_catalog();
std::optional<ScenarioSpec> find_builtin(const std::string& name);

}  // namespace plucker_poisson
