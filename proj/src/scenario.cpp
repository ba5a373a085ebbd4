#include "plucker_poisson/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>

namespace plucker_poisson {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw SpecError("field '" + field + "': " + what);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) fail(path + key, "missing");
  return j.at(key);
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number, got " + std::string(j.type_name()));
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "must be finite");
  return v;
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer, got " + std::string(j.type_name()));
  return j.get<int>();
}

Vector vector_of(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

json to_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

PluckerVector pi_from_json(const json& j, int n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of {\"i\", \"j\", \"value\"}");
  if (n < 3) fail(path, "requires dimension >= 3");
  PluckerVector pi(n);
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string p = path + "[" + std::to_string(e) + "].";
    if (!j[e].is_object()) fail(path + "[" + std::to_string(e) + "]", "expected an object");
    const int i = integer(member(j[e], "i", p), p + "i");
    const int k = integer(member(j[e], "j", p), p + "j");
    const double value = number(member(j[e], "value", p), p + "value");
    if (i < 1 || k > n || i >= k) fail(p + "j", "need 1 <= i < j <= " + std::to_string(n));
    if (!seen.insert({i, k}).second) fail(p + "i", "pair listed twice");
    pi.set(i - 1, k - 1, value);
  }
  return pi;
}

json pi_to_json(const PluckerVector& pi) {
  json a = json::array();
  const int n = pi.dimension();
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (pi.get(i, k) != 0.0) a.push_back({{"i", i + 1}, {"j", k + 1}, {"value", pi.get(i, k)}});
  return a;
}

QuadraticForm form_from_json(const json& j, int n, const std::string& path) {
  if (!j.is_object()) fail(path, "expected {\"diagonal\": [...]} or {\"matrix\": [[...]]}");
  const bool has_diag = j.contains("diagonal");
  const bool has_matrix = j.contains("matrix");
  const bool has_linear = j.contains("linear");
  if (has_diag && has_matrix) fail(path, "give either \"diagonal\" or \"matrix\", not both");
  if (!has_diag && !has_matrix && !has_linear) fail(path, "needs \"diagonal\", \"matrix\" or \"linear\"");
  Matrix a = Matrix::Zero(n, n);
  if (has_diag) {
    const Vector d = vector_of(j.at("diagonal"), path + ".diagonal");
    if (d.size() != n) fail(path + ".diagonal", "expected " + std::to_string(n) + " entries");
    a = d.asDiagonal();
  } else if (has_matrix) {
    const json& m = j.at("matrix");
    if (!m.is_array() || static_cast<int>(m.size()) != n) fail(path + ".matrix", "expected " + std::to_string(n) + " rows");
    for (int r = 0; r < n; ++r) {
      const Vector row = vector_of(m[static_cast<std::size_t>(r)], path + ".matrix[" + std::to_string(r) + "]");
      if (row.size() != n) fail(path + ".matrix[" + std::to_string(r) + "]", "expected " + std::to_string(n) + " entries");
      a.row(r) = row.transpose();
    }
  }
  Vector b = Vector::Zero(n);
  if (has_linear) {
    b = vector_of(j.at("linear"), path + ".linear");
    if (b.size() != n) fail(path + ".linear", "expected " + std::to_string(n) + " entries");
  }
  return QuadraticForm(a, b);
}

json form_to_json(const QuadraticForm& f) {
  json j = json::object();
  if (f.is_diagonal()) {
    j["diagonal"] = to_json(f.diagonal_coefficients());
  } else {
    json rows = json::array();
    for (Eigen::Index r = 0; r < f.matrix().rows(); ++r) rows.push_back(to_json(f.matrix().row(r).transpose()));
    j["matrix"] = rows;
  }
  if (f.has_linear_part()) j["linear"] = to_json(f.linear_part());
  return j;
}

std::vector<NamedForm> named_forms_from_json(const json& j, int n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of forms");
  std::vector<NamedForm> out;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string p = path + "[" + std::to_string(e) + "]";
    std::string name = "f" + std::to_string(e + 1);
    if (j[e].is_object() && j[e].contains("name")) {
      if (!j[e].at("name").is_string()) fail(p + ".name", "expected a string");
      name = j[e].at("name").get<std::string>();
    }
    out.push_back({name, form_from_json(j[e], n, p)});
  }
  return out;
}

json named_forms_to_json(const std::vector<NamedForm>& forms) {
  json a = json::array();
  for (const auto& f : forms) {
    json j = form_to_json(f.form);
    j["name"] = f.name;
    a.push_back(j);
  }
  return a;
}

Structure structure_from(const std::string& s) {
  if (s == "plucker") return Structure::Plucker;
  if (s == "e3") return Structure::E3;
  if (s == "canonical") return Structure::Canonical;
  fail("structure", "unknown value \"" + s + "\" (expected plucker, e3 or canonical)");
}

std::string structure_name(Structure s) {
  switch (s) {
    case Structure::Plucker: return "plucker";
    case Structure::E3: return "e3";
    case Structure::Canonical: return "canonical";
  }
  return "plucker";
}

Eigen::Vector3d three(const json& j, const std::string& path) {
  const Vector v = vector_of(j, path);
  if (v.size() != 3) fail(path, "expected 3 entries");
  return v;
}

}  // namespace

PluckerVector ScenarioSpec::plucker_vector() const {
  if (pi) return *pi;
  if (!jacobian_casimirs.empty()) {
    std::vector<QuadraticForm> forms;
    for (const auto& f : jacobian_casimirs) forms.push_back(f.form);
    return plucker_from_diagonal_quadrics(forms);
  }
  throw SpecError("field 'pi': missing (and no jacobian_casimirs to generate it)");
}

void ScenarioSpec::validate() const {
  const int n = dimension;
  auto check_form = [n](const QuadraticForm& f, const std::string& path) {
    if (f.dimension() != n) fail(path, "dimension " + std::to_string(f.dimension()) + " != " + std::to_string(n));
  };
  switch (structure) {
    case Structure::Plucker: {
      if (n < 3) fail("dimension", "plucker structure needs n >= 3");
      if (!jacobian_casimirs.empty()) {
        if (static_cast<int>(jacobian_casimirs.size()) != n - 2) fail("jacobian_casimirs", "need exactly n-2 forms");
        for (std::size_t m = 0; m < jacobian_casimirs.size(); ++m) {
          const auto& f = jacobian_casimirs[m].form;
          check_form(f, "jacobian_casimirs[" + std::to_string(m) + "]");
          if (!f.is_diagonal() || f.has_linear_part()) {
            fail("jacobian_casimirs[" + std::to_string(m) + "]", "must be a diagonal quadric");
          }
        }
      }
      if (pi && pi->dimension() != n) fail("pi", "dimension mismatch");
      PluckerVector p(n);
      try {
        p = plucker_vector();
      } catch (const DegenerateInput& e) {
        fail("jacobian_casimirs", e.what());
      }
      if (p.is_zero()) fail("pi", "all components are zero");
      if (!unchecked && !is_decomposable(p)) {
        fail("pi", "violates the Plücker relations (relative residual " +
                       std::to_string(relative_plucker_residual(p)) + "); set \"unchecked\": true to load it anyway");
      }
      break;
    }
    case Structure::E3:
      if (n != 6) fail("dimension", "e3 structure needs n = 6");
      break;
    case Structure::Canonical:
      if (n < 2 || n % 2 != 0) fail("dimension", "canonical structure needs an even n >= 2");
      break;
  }
  if (structure != Structure::Plucker) {
    if (pi) fail("pi", "only valid with the plucker structure");
    if (!jacobian_casimirs.empty()) fail("jacobian_casimirs", "only valid with the plucker structure");
    if (expected_pi) fail("expected_pi", "only valid with the plucker structure");
    if (!bihamiltonian.empty()) fail("bihamiltonian", "only valid with the plucker structure");
  }
  if (hamiltonian) check_form(*hamiltonian, "hamiltonian");
  if (initial.size() != 0 && initial.size() != n) fail("initial", "expected " + std::to_string(n) + " entries");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) fail("t_end", "must be finite and >= 0");
  if (!(controls.rtol > 0.0)) fail("controls.rtol", "must be > 0");
  if (!(controls.atol > 0.0)) fail("controls.atol", "must be > 0");
  if (controls.step < 0.0) fail("controls.step", "must be >= 0");
  if (controls.method == Method::RungeKutta4 && !(controls.step > 0.0)) fail("controls.step", "rk4 needs a step > 0");
  if (!(drift_bound > 0.0)) fail("drift_bound", "must be > 0");
  for (std::size_t m = 0; m < monitor.size(); ++m) check_form(monitor[m].form, "monitor[" + std::to_string(m) + "]");
  for (std::size_t m = 0; m < casimirs.size(); ++m) check_form(casimirs[m].form, "casimirs[" + std::to_string(m) + "]");
  if (jacobian_factor && jacobian_casimirs.empty()) fail("jacobian_factor", "needs jacobian_casimirs");
  if (expected_pi) {
    for (std::size_t e = 0; e < expected_pi->entries.size(); ++e) {
      const auto& en = expected_pi->entries[e];
      if (en.i < 0 || en.j >= n || en.i >= en.j) fail("expected_pi.entries[" + std::to_string(e) + "]", "bad pair");
    }
  }
  for (std::size_t m = 0; m < bihamiltonian.size(); ++m) {
    const std::string p = "bihamiltonian[" + std::to_string(m) + "]";
    if (bihamiltonian[m].pi.dimension() != n) fail(p + ".pi", "dimension mismatch");
    if (!is_decomposable(bihamiltonian[m].pi)) fail(p + ".pi", "violates the Plücker relations");
    check_form(bihamiltonian[m].hamiltonian, p + ".hamiltonian");
  }
  if (realization) {
    if (realization->map == "r4") {
      if (structure != Structure::Plucker || n != 3) fail("realization.map", "r4 maps onto a 3-dimensional plucker bracket");
    } else if (realization->map == "clebsch") {
      if (structure != Structure::E3) fail("realization.map", "clebsch maps onto the e3 structure");
    } else {
      fail("realization.map", "unknown map \"" + realization->map + "\" (expected r4 or clebsch)");
    }
  }
  if (clebsch) {
    if (structure != Structure::E3) fail("clebsch", "only valid with the e3 structure");
    if (!(clebsch->kappa.array() != 0.0).all()) fail("clebsch.kappa", "components must be nonzero");
  }
}

bool operator==(const ScenarioSpec& a, const ScenarioSpec& b) {
  auto same_controls = [](const IntegrationControls& x, const IntegrationControls& y) {
    return x.rtol == y.rtol && x.atol == y.atol && x.method == y.method && x.step == y.step;
  };
  auto same_clebsch = [](const std::optional<ClebschParameters>& x, const std::optional<ClebschParameters>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->lambda == y->lambda && x->kappa == y->kappa);
  };
  return a.name == b.name && a.dimension == b.dimension && a.structure == b.structure && a.pi == b.pi &&
         a.unchecked == b.unchecked && a.hamiltonian == b.hamiltonian && a.initial == b.initial &&
         a.t_end == b.t_end && same_controls(a.controls, b.controls) && a.monitor_auto == b.monitor_auto &&
         a.monitor == b.monitor && a.drift_bound == b.drift_bound && a.casimirs == b.casimirs &&
         a.jacobian_casimirs == b.jacobian_casimirs && a.jacobian_factor == b.jacobian_factor &&
         a.expected_pi == b.expected_pi && a.realization == b.realization && a.bihamiltonian == b.bihamiltonian &&
         same_clebsch(a.clebsch, b.clebsch);
}

ScenarioSpec scenario_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("scenario: top level must be a JSON object");
  static const std::set<std::string> known = {
      "name",    "dimension",   "structure", "pi",       "unchecked",         "hamiltonian",     "initial",
      "t_end",   "controls",    "monitor",   "drift_bound", "casimirs",       "jacobian_casimirs", "jacobian_factor",
      "expected_pi", "realization", "bihamiltonian", "clebsch"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) fail(key, "unknown field");
  }

  ScenarioSpec s;
  const json& name = member(j, "name", "");
  if (!name.is_string()) fail("name", "expected a string");
  s.name = name.get<std::string>();
  s.dimension = integer(member(j, "dimension", ""), "dimension");
  if (s.dimension < 2) fail("dimension", "must be >= 2");
  const int n = s.dimension;

  if (j.contains("structure")) {
    if (!j.at("structure").is_string()) fail("structure", "expected a string");
    s.structure = structure_from(j.at("structure").get<std::string>());
  }
  if (j.contains("pi")) s.pi = pi_from_json(j.at("pi"), n, "pi");
  if (j.contains("unchecked")) {
    if (!j.at("unchecked").is_boolean()) fail("unchecked", "expected true or false");
    s.unchecked = j.at("unchecked").get<bool>();
  }
  if (j.contains("hamiltonian")) s.hamiltonian = form_from_json(j.at("hamiltonian"), n, "hamiltonian");
  if (j.contains("initial")) s.initial = vector_of(j.at("initial"), "initial");
  if (j.contains("t_end")) s.t_end = number(j.at("t_end"), "t_end");

  if (j.contains("controls")) {
    const json& c = j.at("controls");
    if (!c.is_object()) fail("controls", "expected an object");
    for (const auto& [key, value] : c.items()) {
      if (key != "rtol" && key != "atol" && key != "method" && key != "step") fail("controls." + key, "unknown field");
    }
    if (c.contains("rtol")) s.controls.rtol = number(c.at("rtol"), "controls.rtol");
    if (c.contains("atol")) s.controls.atol = number(c.at("atol"), "controls.atol");
    if (c.contains("step")) s.controls.step = number(c.at("step"), "controls.step");
    if (c.contains("method")) {
      const json& m = c.at("method");
      const std::string method = m.is_string() ? m.get<std::string>() : "";
      if (method == "rk45") {
        s.controls.method = Method::DormandPrince45;
      } else if (method == "rk4") {
        s.controls.method = Method::RungeKutta4;
      } else {
        fail("controls.method", "expected \"rk45\" or \"rk4\"");
      }
    }
  }

  if (j.contains("monitor")) {
    const json& m = j.at("monitor");
    if (m.is_string()) {
      if (m.get<std::string>() != "auto") fail("monitor", "expected \"auto\" or a list of forms");
    } else {
      s.monitor_auto = false;
      s.monitor = named_forms_from_json(m, n, "monitor");
    }
  }
  if (j.contains("drift_bound")) s.drift_bound = number(j.at("drift_bound"), "drift_bound");
  if (j.contains("casimirs")) s.casimirs = named_forms_from_json(j.at("casimirs"), n, "casimirs");
  if (j.contains("jacobian_casimirs")) {
    s.jacobian_casimirs = named_forms_from_json(j.at("jacobian_casimirs"), n, "jacobian_casimirs");
  }
  if (j.contains("jacobian_factor")) s.jacobian_factor = number(j.at("jacobian_factor"), "jacobian_factor");

  if (j.contains("expected_pi")) {
    const json& e = j.at("expected_pi");
    if (!e.is_object()) fail("expected_pi", "expected an object");
    ExpectedPi ex;
    const PluckerVector listed = pi_from_json(member(e, "entries", "expected_pi."), n, "expected_pi.entries");
    // Keep the listed pairs, including explicit zeros.
    for (std::size_t k = 0; k < e.at("entries").size(); ++k) {
      const int i = e.at("entries")[k].at("i").get<int>() - 1;
      const int jj = e.at("entries")[k].at("j").get<int>() - 1;
      ex.entries.push_back({i, jj, listed.get(i, jj)});
    }
    if (e.contains("factor") && !e.at("factor").is_null()) ex.factor = number(e.at("factor"), "expected_pi.factor");
    s.expected_pi = ex;
  }

  if (j.contains("realization")) {
    const json& r = j.at("realization");
    if (!r.is_object()) fail("realization", "expected an object");
    const json& map = member(r, "map", "realization.");
    if (!map.is_string()) fail("realization.map", "expected a string");
    s.realization = RealizationSpec{map.get<std::string>(), 0.0};
    if (r.contains("k")) s.realization->k = number(r.at("k"), "realization.k");
  }

  if (j.contains("bihamiltonian")) {
    const json& b = j.at("bihamiltonian");
    if (!b.is_array()) fail("bihamiltonian", "expected an array");
    for (std::size_t m = 0; m < b.size(); ++m) {
      const std::string p = "bihamiltonian[" + std::to_string(m) + "].";
      s.bihamiltonian.push_back({pi_from_json(member(b[m], "pi", p), n, p + "pi"),
                                 form_from_json(member(b[m], "hamiltonian", p), n, p + "hamiltonian")});
    }
  }

  if (j.contains("clebsch")) {
    const json& c = j.at("clebsch");
    if (!c.is_object()) fail("clebsch", "expected an object");
    ClebschParameters params;
    params.lambda = three(member(c, "lambda", "clebsch."), "clebsch.lambda");
    params.kappa = three(member(c, "kappa", "clebsch."), "clebsch.kappa");
    s.clebsch = params;
  }

  s.validate();
  return s;
}

json scenario_to_json(const ScenarioSpec& s) {
  json j;
  j["name"] = s.name;
  j["dimension"] = s.dimension;
  j["structure"] = structure_name(s.structure);
  if (s.pi) j["pi"] = pi_to_json(*s.pi);
  if (s.unchecked) j["unchecked"] = true;
  if (s.hamiltonian) j["hamiltonian"] = form_to_json(*s.hamiltonian);
  if (s.initial.size() > 0) j["initial"] = to_json(s.initial);
  j["t_end"] = s.t_end;
  j["controls"] = {{"rtol", s.controls.rtol},
                   {"atol", s.controls.atol},
                   {"method", s.controls.method == Method::RungeKutta4 ? "rk4" : "rk45"},
                   {"step", s.controls.step}};
  j["monitor"] = s.monitor_auto ? json("auto") : named_forms_to_json(s.monitor);
  j["drift_bound"] = s.drift_bound;
  if (!s.casimirs.empty()) j["casimirs"] = named_forms_to_json(s.casimirs);
  if (!s.jacobian_casimirs.empty()) j["jacobian_casimirs"] = named_forms_to_json(s.jacobian_casimirs);
  if (s.jacobian_factor) j["jacobian_factor"] = *s.jacobian_factor;
  if (s.expected_pi) {
    json entries = json::array();
    for (const auto& e : s.expected_pi->entries) entries.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"value", e.value}});
    j["expected_pi"] = {{"entries", entries}, {"factor", s.expected_pi->factor ? json(*s.expected_pi->factor) : json()}};
  }
  if (s.realization) {
    j["realization"] = {{"map", s.realization->map}};
    if (s.realization->map == "r4") j["realization"]["k"] = s.realization->k;
  }
  if (!s.bihamiltonian.empty()) {
    json b = json::array();
    for (const auto& p : s.bihamiltonian) b.push_back({{"pi", pi_to_json(p.pi)}, {"hamiltonian", form_to_json(p.hamiltonian)}});
    j["bihamiltonian"] = b;
  }
  if (s.clebsch) j["clebsch"] = {{"lambda", to_json(s.clebsch->lambda)}, {"kappa", to_json(s.clebsch->kappa)}};
  return j;
}

ScenarioSpec parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

BracketPtr make_bracket(const ScenarioSpec& spec) {
  switch (spec.structure) {
    case Structure::E3: return std::make_shared<E3Bracket>();
    case Structure::Canonical: return std::make_shared<ConstantBracket>(canonical_bracket(spec.dimension / 2));
    case Structure::Plucker: break;
  }
  auto pi = spec.plucker_vector();
  if (spec.unchecked) return std::make_shared<PluckerBracket>(PluckerBracket::unchecked(std::move(pi)));
  return std::make_shared<PluckerBracket>(std::move(pi));
}

HamiltonianSystem make_system(const ScenarioSpec& spec) {
  if (!spec.hamiltonian) throw SpecError("field 'hamiltonian': missing (needed to integrate)");
  HamiltonianSystem sys{make_bracket(spec), *spec.hamiltonian, {}};
  if (!spec.monitor_auto) {
    for (const auto& m : spec.monitor) sys.invariants.push_back({m.name, m.form});
    return sys;
  }
  if (spec.structure == Structure::Plucker) {
    const auto& b = static_cast<const PluckerBracket&>(*sys.source);
    const auto forms = kernel_casimirs(b);
    for (std::size_t m = 0; m < forms.size(); ++m) sys.invariants.push_back({"C" + std::to_string(m + 1), forms[m]});
  } else if (spec.structure == Structure::E3) {
    const auto e3 = clebsch_system(ClebschParameters{});
    sys.invariants.push_back(e3.invariants[0]);
    sys.invariants.push_back(e3.invariants[1]);
  }
  sys.invariants.push_back({"H", *spec.hamiltonian});
  return sys;
}

// ---------------------------------------------------------------------------
// Built-in catalog

namespace {

PluckerVector pi4(double p12, double p13, double p14, double p23, double p24, double p34) {
  return PluckerVector(4, {p12, p13, p14, p23, p24, p34});
}

std::vector<NamedForm> named(const std::vector<NamedInvariant>& invariants) {
  std::vector<NamedForm> out;
  for (const auto& inv : invariants) out.push_back({inv.name, *inv.function.form()});
  return out;
}

QuadraticForm diag(std::initializer_list<double> d) {
  return QuadraticForm::diagonal(Eigen::Map<const Vector>(d.begin(), static_cast<Eigen::Index>(d.size())));
}

ScenarioSpec base(const std::string& name, int n) {
  ScenarioSpec s;
  s.name = name;
  s.dimension = n;
  return s;
}

ScenarioSpec ex3() {
  const double k = 0.5;
  const double k2 = k * k;
  auto s = base("ex3", 4);
  s.pi = pi4(-1.0, 2.0, 0.0, -2.0, -k2, 2.0 * k2);
  s.hamiltonian = diag({1.0, 1.0, 1.0, 0.0});
  s.initial = Vector{{0.3, 0.4, 0.5, 0.6}};
  s.t_end = 20.0;
  // f = k^2 x1^2 + x4^2 and g = 2 x1^2 + 2 x2^2 + x3^2.
  s.jacobian_casimirs = {{"f", diag({2.0 * k2, 0.0, 0.0, 2.0})}, {"g", diag({4.0, 4.0, 2.0, 0.0})}};
  return s;
}

ScenarioSpec sklyanin() {
  const double j1 = 1.0, j2 = 2.0, j3 = 3.0;
  auto s = base("sklyanin", 4);
  // pi_24 = -1, pi_34 = +1: the values generated by the two Casimirs below.
  s.pi = pi4(j2 - j3, j3 - j1, j1 - j2, 1.0, -1.0, 1.0);
  s.hamiltonian = diag({1.0, 1.0, 1.0, 0.0});
  s.initial = Vector{{0.3, 0.4, 0.5, 0.6}};
  s.t_end = 20.0;
  s.jacobian_casimirs = {{"C1", diag({2.0, 2.0 * j1, 2.0 * j2, 2.0 * j3})}, {"C2", diag({0.0, 2.0, 2.0, 2.0})}};
  return s;
}

ScenarioSpec n5() {
  auto s = base("n5", 5);
  const PluckerVector pi = wedge({Vector{{1.0, 2.0, 0.0, 1.0, -1.0}}, Vector{{0.0, 1.0, 1.0, 2.0, 1.0}}});
  s.pi = pi;
  s.hamiltonian = diag({1.0, 0.0, 1.0, 0.0, 1.0});
  s.initial = Vector{{0.3, 0.4, 0.5, 0.6, 0.7}};
  s.t_end = 10.0;
  auto f = [&](int i, int j, int k) { return casimir_fijk(PluckerBracket(pi), i, j, k); };
  s.casimirs = {{"f234", f(1, 2, 3)}, {"f345", f(2, 3, 4)}, {"f123", f(0, 1, 2)}};
  return s;
}

ScenarioSpec n6() {
  auto s = base("n6", 6);
  PluckerVector pi(6);
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {4, 5}}) {
    pi.set(i - 1, j - 1, 1.0);
  }
  pi.set(4, 5, -1.0);
  s.pi = pi;
  s.hamiltonian = diag({1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  s.initial = Vector{{0.3, 0.4, 0.5, 0.6, 0.7, 0.8}};
  s.t_end = 10.0;
  s.jacobian_casimirs = {{"f1", diag({1.0, -1.0, 1.0, 0.0, 0.0, 0.0})},
                         {"f2", diag({0.0, 0.0, -1.0, 1.0, 0.0, 0.0})},
                         {"f3", diag({0.0, 0.0, 0.0, -1.0, 0.0, 1.0})},
                         {"f4", diag({0.0, -1.0, 0.0, 0.0, -1.0, 1.0})}};
  s.jacobian_factor = 1.0;
  return s;
}

ScenarioSpec fairlie() {
  const Eigen::Vector4d c(1.0, 1.0, 1.0, 0.25);
  const auto sys = fairlie_system(c);
  auto s = base("fairlie", 4);
  s.pi = static_cast<const PluckerBracket&>(*sys.source).pi();
  s.hamiltonian = *sys.hamiltonian.form();
  // x1 = x2 with c1 = c2 keeps the orbit bounded; see README.
  s.initial = Vector{{0.3, 0.3, 0.5, -0.6}};
  s.t_end = 50.0;
  s.monitor_auto = false;
  s.monitor = named(sys.invariants);
  s.jacobian_casimirs = {s.monitor[0], s.monitor[1]};
  return s;
}

ScenarioSpec double_elliptic() {
  const double g = 1.0;
  const double kt = 0.8;
  const auto sys = double_elliptic_system(g, kt);
  auto s = base("double-elliptic", 6);
  s.hamiltonian = *sys.hamiltonian.form();
  s.initial = Vector{{0.3, 0.3, 0.5, 0.6, 0.5, 0.02}};
  s.t_end = 50.0;
  s.monitor_auto = false;
  s.monitor = named(sys.invariants);
  const auto casimirs = double_elliptic_casimirs(g, kt);
  for (std::size_t m = 0; m < casimirs.size(); ++m) s.jacobian_casimirs.push_back({"C" + std::to_string(m + 1), casimirs[m]});
  // {x_a, x_5} for a = 1..4 and {x5, x6} = 0, as displayed.
  s.expected_pi = ExpectedPi{{{0, 4, -1.0}, {1, 4, -1.0}, {2, 4, -1.0}, {3, 4, -g * g}, {4, 5, 0.0}}, std::nullopt};
  return s;
}

ScenarioSpec clebsch() {
  const ClebschParameters params{{1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}};
  const auto sys = clebsch_system(params);
  auto s = base("clebsch", 6);
  s.structure = Structure::E3;
  s.hamiltonian = params.hamiltonian();
  s.initial = Vector{{0.3, -0.2, 0.5, 0.1, 0.4, -0.3}};
  s.t_end = 50.0;
  s.monitor_auto = false;
  s.monitor = named(sys.invariants);
  s.realization = RealizationSpec{"clebsch", 0.0};
  s.clebsch = params;
  return s;
}

ScenarioSpec jacobi3d() {
  const double k = 0.5;
  const auto pairs = jacobi_bihamiltonian(k);
  auto s = base("jacobi3d", 3);
  s.pi = jacobi_pi1().pi();
  s.hamiltonian = *pairs.first.hamiltonian.form();
  s.initial = Vector{{0.0, 1.0, 1.0}};
  s.t_end = 50.0;
  s.monitor_auto = false;
  s.monitor = {{"F", diag({2.0, 2.0, 0.0})}, {"G", diag({2.0 * k * k, 0.0, 2.0})}, {"H", *s.hamiltonian}};
  s.bihamiltonian = {{jacobi_pi2(k).pi(), *pairs.second.hamiltonian.form()},
                     {jacobi_pi3(k).pi(), *pairs.third.hamiltonian.form()}};
  return s;
}

ScenarioSpec realization_r4_scenario() {
  const double k = 0.5;
  auto s = base("realization-r4", 3);
  s.pi = jacobi_pi1().pi();
  s.hamiltonian = realization_r4_reduced_hamiltonian(k);
  s.initial = realization_r4_map(Vector{{0.1, 0.2, 0.3, 0.4}});
  s.t_end = 50.0;
  s.realization = RealizationSpec{"r4", k};
  return s;
}

}  // namespace

std::vector<ScenarioSpec> builtin_catalog() {
  return {ex3(), sklyanin(), n5(), n6(), fairlie(), double_elliptic(), clebsch(), jacobi3d(), realization_r4_scenario()};
}

std::optional<ScenarioSpec> find_builtin(const std::string& name) {
  for (auto& s : builtin_catalog()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

}  // namespace plucker_poisson
