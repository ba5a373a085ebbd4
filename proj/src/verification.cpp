#include "plucker_poisson/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <random>
#include <thread>

namespace plucker_poisson {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// max over points of f(point). Points are split across threads; the result
/// does not depend on the split.
template <class F>
double parallel_max(const std::vector<Vector>& points, unsigned threads, F&& f) {
  std::vector<double> values(points.size(), 0.0);
  std::vector<std::exception_ptr> errors(points.size());
  unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < points.size(); i += workers) {
      try {
        values[i] = f(points[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::isnan(v) ? kInf : v);
  return worst;
}

std::vector<Vector> sample_points(int n, int count, std::mt19937_64& rng) {
  std::vector<Vector> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) pts.push_back(sample_generic_point(n, rng));
  return pts;
}

CheckResult check(std::string name, double residual, double tolerance, std::optional<double> value = std::nullopt) {
  return {std::move(name), residual <= tolerance, residual, tolerance, value};
}

/// max_l |{f, x_l}| relative to max|grad f| * max|P|.
double relative_casimir_residual(const BracketSource& src, const ScalarField& f, const Vector& x) {
  const Matrix p = src.structure_matrix_at(x);
  const Vector g = f.gradient(x);
  const double scale = g.cwiseAbs().maxCoeff() * p.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (p.transpose() * g).cwiseAbs().maxCoeff() / scale;
}

void casimir_check(VerificationReport& report, const std::string& name, const BracketSource& src,
                   const std::vector<ScalarField>& fields, const std::vector<Vector>& pts, const VerifyOptions& o) {
  const double r = parallel_max(pts, o.threads, [&](const Vector& x) {
    double worst = 0.0;
    for (const auto& f : fields) worst = std::max(worst, relative_casimir_residual(src, f, x));
    return worst;
  });
  report.checks.push_back(check(name, r, o.tolerance));
}

std::vector<ScalarField> fields_of(const std::vector<NamedForm>& forms) {
  std::vector<ScalarField> out;
  for (const auto& f : forms) out.emplace_back(f.form);
  return out;
}

/// Least-squares factor lambda with q ~ lambda * p, and max|q - lambda p| / max|q|.
std::pair<double, double> fit_factor(const std::vector<double>& q, const std::vector<double>& p) {
  double qp = 0.0;
  double pp = 0.0;
  double qmax = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    qp += q[i] * p[i];
    pp += p[i] * p[i];
    qmax = std::max(qmax, std::abs(q[i]));
  }
  if (pp == 0.0 || qmax == 0.0) return {0.0, kInf};
  const double lambda = qp / pp;
  double worst = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) worst = std::max(worst, std::abs(q[i] - lambda * p[i]));
  return {lambda, worst / qmax};
}

double fixed_factor_residual(const std::vector<double>& q, const std::vector<double>& p, double factor) {
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    worst = std::max(worst, std::abs(q[i] - factor * p[i]));
    scale = std::max({scale, std::abs(q[i]), std::abs(factor * p[i])});
  }
  return scale == 0.0 ? 0.0 : worst / scale;
}

void realization_checks(VerificationReport& report, const RealizationSpec& spec, std::mt19937_64& rng,
                        const VerifyOptions& o) {
  Realization r;
  ScalarField upstairs = ScalarField::constant(0.0);
  ScalarField downstairs = ScalarField::constant(0.0);
  if (spec.map == "r4") {
    r = realization_r4();
    upstairs = realization_r4_hamiltonian(spec.k);
    downstairs = realization_r4_reduced_hamiltonian(spec.k);
  } else {
    r = clebsch_realization();
    upstairs = clebsch_realization_hamiltonian();
    downstairs = ClebschParameters{}.hamiltonian();
  }
  const auto xi = sample_points(2 * r.degrees_of_freedom, o.sample_points, rng);
  report.checks.push_back(check("realization_poisson_map",
                                parallel_max(xi, o.threads, [&](const Vector& p) { return poisson_map_residual(r, p); }),
                                1e-9));
  report.checks.push_back(check(
      "realization_hamiltonian_field",
      parallel_max(xi, o.threads, [&](const Vector& p) { return pushforward_field_residual(r, upstairs, downstairs, p); }),
      1e-11));
}

void plucker_checks(VerificationReport& report, const ScenarioSpec& spec, const PluckerBracket& b,
                    const std::vector<Vector>& pts, const VerifyOptions& o) {
  const int n = b.dimension();
  const auto& pi = b.pi();
  const double pmax = pi.max_abs();

  report.checks.push_back(check("plucker_relations", relative_plucker_residual(pi), o.tolerance));
  report.checks.push_back(check("jacobiator_generic",
                                parallel_max(pts, o.threads, [&](const Vector& x) { return relative_jacobiator(b, x); }),
                                o.tolerance));
  {
    double worst = 0.0;
    for (double v : jacobiators(b, Vector::Ones(n))) worst = std::max(worst, std::abs(v));
    report.checks.push_back(check("jacobiator_at_ones", worst, o.tolerance * pmax * pmax * std::max(1, n - 3)));
  }
  report.checks.push_back(check("rank_generic", parallel_max(pts, o.threads, [&](const Vector& x) {
                                  return std::abs(rank_at(b, x) - 2.0);
                                }),
                                0.0, 2.0));
  if (n >= 4) {
    const int rank = numerical_rank(representation_matrix(pi));
    report.checks.push_back(check("representation_rank", std::abs(rank - (n - 2.0)), 0.0, rank));
  }

  std::vector<ScalarField> fijk;
  for (const auto& [i, j, k] : triples(n)) {
    auto f = casimir_fijk(b, i, j, k);
    if (!f.is_zero()) fijk.emplace_back(f);
  }
  casimir_check(report, "casimirs_fijk", b, fijk, pts, o);

  const bool decomposable = is_decomposable(pi);
  if (decomposable) {
    std::vector<ScalarField> kernel;
    for (auto& f : kernel_casimirs(b)) kernel.emplace_back(f);
    casimir_check(report, "casimirs_kernel", b, kernel, pts, o);

    const auto t = decompose_tensor(b);
    report.checks.push_back(check("decompose_tensor", parallel_max(pts, o.threads, [&](const Vector& x) {
                                    const Matrix p = b.structure_matrix_at(x);
                                    return (t.evaluate(x) - p).cwiseAbs().maxCoeff() / p.cwiseAbs().maxCoeff();
                                  }),
                                  o.tolerance));

    double consistency = kInf;
    try {
      consistency = plucker_to_jacobian(b, o.seed).consistency;
    } catch (const std::exception&) {
      // Reported as an infinite residual.
    }
    report.checks.push_back(check("nambu_equivalence", consistency, 1e-9));
  }

  if (!spec.casimirs.empty()) casimir_check(report, "casimirs_listed", b, fields_of(spec.casimirs), pts, o);

  if (!spec.jacobian_casimirs.empty()) {
    casimir_check(report, "casimirs_jacobian_generators", b, fields_of(spec.jacobian_casimirs), pts, o);
    std::vector<QuadraticForm> forms;
    for (const auto& f : spec.jacobian_casimirs) forms.push_back(f.form);
    const auto q = plucker_from_diagonal_quadrics(forms);
    if (spec.jacobian_factor) {
      report.checks.push_back(check("jacobian_generators",
                                    fixed_factor_residual(q.components(), pi.components(), *spec.jacobian_factor),
                                    1e-11, *spec.jacobian_factor));
    } else {
      const auto [lambda, r] = fit_factor(q.components(), pi.components());
      report.checks.push_back(check("jacobian_generators", r, 1e-11, lambda));
    }
  }

  if (spec.expected_pi) {
    std::vector<double> actual;
    std::vector<double> expected;
    for (const auto& e : spec.expected_pi->entries) {
      actual.push_back(pi.get(e.i, e.j));
      expected.push_back(e.value);
    }
    if (spec.expected_pi->factor) {
      const double f = *spec.expected_pi->factor;
      report.checks.push_back(check("expected_pi", fixed_factor_residual(actual, expected, f), 1e-11, f));
    } else {
      const auto [lambda, r] = fit_factor(actual, expected);
      report.checks.push_back(check("expected_pi", r, 1e-11, lambda));
    }
  }

  if (!spec.bihamiltonian.empty()) {
    if (!spec.hamiltonian) throw SpecError("field 'hamiltonian': needed for the bihamiltonian check");
    const HamiltonianSystem first{std::make_shared<PluckerBracket>(b), *spec.hamiltonian, {}};
    for (std::size_t m = 0; m < spec.bihamiltonian.size(); ++m) {
      const HamiltonianSystem other{std::make_shared<PluckerBracket>(spec.bihamiltonian[m].pi),
                                    spec.bihamiltonian[m].hamiltonian,
                                    {}};
      report.checks.push_back(check("bihamiltonian_" + std::to_string(m + 1),
                                    bihamiltonian_residual(first, other, pts), 1e-12));
    }
  }
}

void e3_checks(VerificationReport& report, const ScenarioSpec& spec, const BracketSource& src,
               const std::vector<Vector>& pts, const VerifyOptions& o) {
  report.checks.push_back(check("jacobiator_generic", parallel_max(pts, o.threads, [&](const Vector& x) {
                                  double worst = 0.0;
                                  for (double v : jacobiators(src, x)) worst = std::max(worst, std::abs(v));
                                  return worst / std::max(1.0, src.structure_matrix_at(x).cwiseAbs().maxCoeff());
                                }),
                                o.tolerance));
  report.checks.push_back(check("rank_generic", parallel_max(pts, o.threads, [&](const Vector& x) {
                                  return std::abs(rank_at(src, x) - 4.0);
                                }),
                                0.0, 4.0));
  const auto e3 = clebsch_system(ClebschParameters{});
  casimir_check(report, "casimirs_e3", src, {e3.invariants[0].function, e3.invariants[1].function}, pts, o);
  if (!spec.casimirs.empty()) casimir_check(report, "casimirs_listed", src, fields_of(spec.casimirs), pts, o);

  if (!spec.clebsch) return;
  const auto& params = *spec.clebsch;
  const double condition = std::abs(params.condition_residual());
  report.checks.push_back(check("clebsch_condition", condition, 1e-12));
  const auto sys = clebsch_system(params);
  report.checks.push_back(check("clebsch_cross_product_form", parallel_max(pts, o.threads, [&](const Vector& x) {
                                  const Vector v = vector_field(sys, x);
                                  return (v - clebsch_cross_product_field(params, x)).cwiseAbs().maxCoeff() /
                                         std::max(1.0, v.cwiseAbs().maxCoeff());
                                }),
                                1e-11));
  std::array<double, 3> c{};
  try {
    c = params.c_ratios();
  } catch (const DegenerateInput&) {
    report.checks.push_back(check("clebsch_ratios", kInf, 1e-9));
    return;
  }
  const auto [lo, hi] = std::minmax({c[0], c[1], c[2]});
  report.checks.push_back(check("clebsch_ratios", (hi - lo) / std::max(1.0, std::max(std::abs(lo), std::abs(hi))), 1e-9,
                                c[0]));
  const auto f3 = params.extra_integral();
  const auto h = params.hamiltonian();
  report.checks.push_back(check("clebsch_extra_integral", parallel_max(pts, o.threads, [&](const Vector& x) {
                                  return std::abs(bracket_of(src, f3, h, x));
                                }),
                                1e-9));
}

}  // namespace

// ---------------------------------------------------------------------------

bool VerificationReport::verdict() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.check == name) return &c;
  return nullptr;
}

namespace {

json number_or_string(double v) {
  // JSON has no infinity; spell it out rather than emit null.
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

json check_json(const CheckResult& c) {
  json j = {{"check", c.check},
            {"status", c.pass ? "pass" : "fail"},
            {"residual", number_or_string(c.residual)},
            {"tolerance", c.tolerance}};
  if (c.value) j["value"] = number_or_string(*c.value);
  return j;
}

}  // namespace

json VerificationReport::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) checks_json.push_back(check_json(c));
  return {{"name", name}, {"checks", checks_json}, {"verdict", verdict() ? "pass" : "fail"}};
}

VerificationReport verify_scenario(const ScenarioSpec& spec, const VerifyOptions& options) {
  spec.validate();
  require(options.sample_points > 0, "verify_scenario: sample_points must be positive");
  VerificationReport report;
  report.name = spec.name;
  std::mt19937_64 rng(options.seed);
  const auto bracket = make_bracket(spec);
  const auto pts = sample_points(spec.dimension, options.sample_points, rng);

  switch (spec.structure) {
    case Structure::Plucker:
      plucker_checks(report, spec, static_cast<const PluckerBracket&>(*bracket), pts, options);
      break;
    case Structure::E3:
      e3_checks(report, spec, *bracket, pts, options);
      break;
    case Structure::Canonical:
      report.checks.push_back(check("jacobiator_generic", parallel_max(pts, options.threads, [&](const Vector& x) {
                                      double worst = 0.0;
                                      for (double v : jacobiators(*bracket, x)) worst = std::max(worst, std::abs(v));
                                      return worst;
                                    }),
                                    options.tolerance));
      report.checks.push_back(check("rank_generic", std::abs(rank_at(*bracket, pts.front()) - spec.dimension), 0.0,
                                    spec.dimension));
      break;
  }
  if (spec.realization) realization_checks(report, *spec.realization, rng, options);
  return report;
}

// ---------------------------------------------------------------------------

json CompatReport::to_json() const {
  json residuals = json::array();
  for (const auto& q : result.intersection) {
    residuals.push_back({{"quadruple", {q.indices[0] + 1, q.indices[1] + 1, q.indices[2] + 1, q.indices[3] + 1}},
                         {"residual", q.residual}});
  }
  json checks = json::array();
  checks.push_back(check_json(check("intersection", result.intersection_relative, tolerance)));
  checks.push_back(check_json(check("sum_jacobiator", result.sum_jacobiator_relative, tolerance)));
  checks.push_back(check_json(check("routes_agree", result.routes_agree() ? 0.0 : 1.0, 0.0)));
  return {{"name", name},
          {"checks", checks},
          {"intersection_residuals", residuals},
          {"verdict", compatible() ? "compatible" : "incompatible"}};
}

CompatReport compat_scenarios(const ScenarioSpec& a, const ScenarioSpec& b, const CompatibilityOptions& options) {
  if (a.structure != Structure::Plucker || b.structure != Structure::Plucker) {
    throw SpecError("compat: both scenarios must use the plucker structure");
  }
  if (a.dimension != b.dimension) {
    throw SpecError("compat: dimension mismatch (" + std::to_string(a.dimension) + " vs " +
                    std::to_string(b.dimension) + ")");
  }
  const auto ba = make_bracket(a);
  const auto bb = make_bracket(b);
  CompatReport report;
  report.name = a.name + " vs " + b.name;
  report.tolerance = options.tolerance;
  report.result = compatibility_residuals(static_cast<const PluckerBracket&>(*ba),
                                          static_cast<const PluckerBracket&>(*bb), options);
  return report;
}

// ---------------------------------------------------------------------------

bool IntegrationReport::ok() const {
  if (failure) return false;
  return std::all_of(drift.begin(), drift.end(), [&](const InvariantDrift& d) { return d.normalized <= drift_bound; });
}

json IntegrationReport::to_json() const {
  json j = {{"name", name}};
  if (failure) {
    j["failure"] = *failure;
    j["failure_time"] = failure_time;
  } else {
    j["t_end"] = trajectory.times.back();
    j["steps"] = trajectory.stats.accepted;
    j["rejected"] = trajectory.stats.rejected;
    j["evaluations"] = trajectory.stats.evaluations;
    json state = json::array();
    for (Eigen::Index i = 0; i < trajectory.final_state().size(); ++i) state.push_back(trajectory.final_state()(i));
    j["final_state"] = state;
  }
  json d = json::array();
  for (const auto& x : drift) {
    d.push_back({{"invariant", x.name},
                 {"initial", x.initial},
                 {"max_abs", x.max_abs},
                 {"normalized", x.normalized},
                 {"bound", drift_bound},
                 {"status", x.normalized <= drift_bound ? "pass" : "fail"}});
  }
  j["drift"] = d;
  j["verdict"] = ok() ? "pass" : "fail";
  return j;
}

IntegrationReport integrate_scenario(const ScenarioSpec& spec) {
  spec.validate();
  if (spec.initial.size() == 0) throw SpecError("field 'initial': missing (needed to integrate)");
  const auto sys = make_system(spec);
  IntegrationReport report;
  report.name = spec.name;
  report.drift_bound = spec.drift_bound;
  try {
    report.trajectory = integrate(sys, spec.initial, spec.t_end, spec.controls);
    report.drift = invariant_drift(report.trajectory);
  } catch (const IntegrationFailure& e) {
    report.failure = e.what();
    report.failure_time = e.time();
  }
  return report;
}

// ---------------------------------------------------------------------------

bool EllipticTable::ok() const { return max_identity <= 1e-9 && max_oracle_delta <= 1e-7; }

void EllipticTable::write_csv(std::ostream& out) const {
  out << "t,sn,cn,dn,identity_sn_cn,identity_dn,sn_oracle_delta,cn_oracle_delta,dn_oracle_delta\n";
  char buf[64];
  auto field = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const auto& r : rows) {
    const auto& s = r.ode;
    out << field(r.t) << ',' << field(s.sn) << ',' << field(s.cn) << ',' << field(s.dn) << ','
        << field(s.sn * s.sn + s.cn * s.cn - 1.0) << ',' << field(k * k * s.sn * s.sn + s.dn * s.dn - 1.0) << ',';
    if (r.oracle) {
      out << field(std::abs(s.sn - r.oracle->sn)) << ',' << field(std::abs(s.cn - r.oracle->cn)) << ','
          << field(std::abs(s.dn - r.oracle->dn));
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

EllipticTable elliptic_table(double k, double t_max, int steps) {
  require(k >= 0.0 && k < 1.0, "elliptic: k must lie in [0, 1)");
  require(steps >= 1, "elliptic: steps must be >= 1");
  require(std::isfinite(t_max), "elliptic: t_max must be finite");
  std::vector<double> times;
  for (int i = 0; i <= steps; ++i) times.push_back(t_max * i / steps);
  const auto values = jacobi_elliptic_grid(times, k);
  const double quarter = quarter_period(k);

  EllipticTable table;
  table.k = k;
  for (std::size_t i = 0; i < times.size(); ++i) {
    EllipticRow row{times[i], values[i], std::nullopt};
    const auto& s = row.ode;
    table.max_identity = std::max({table.max_identity, std::abs(s.sn * s.sn + s.cn * s.cn - 1.0),
                                   std::abs(k * k * s.sn * s.sn + s.dn * s.dn - 1.0)});
    if (std::abs(times[i]) <= quarter) {
      row.oracle = elliptic_oracle(times[i], k);
      table.max_oracle_delta = std::max({table.max_oracle_delta, std::abs(s.sn - row.oracle->sn),
                                         std::abs(s.cn - row.oracle->cn), std::abs(s.dn - row.oracle->dn)});
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace plucker_poisson
