// plucker-poisson: verify, compare and integrate Plücker-family Poisson brackets.
//
// Exit codes: 0 success / pass / compatible, 1 fail / incompatible / drift
// over bound, 2 input error.

#include "plucker_poisson/verification.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pp = plucker_poisson;

namespace {

constexpr int kInputError = 2;

struct Globals {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  bool json = false;
  std::string out;
};

pp::ScenarioSpec load(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    if (!in) throw pp::SpecError("cannot read " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return pp::parse_scenario(buf.str());
    } catch (const pp::SpecError& e) {
      throw pp::SpecError(arg + ": " + e.what());
    }
  }
  if (auto s = pp::find_builtin(arg)) return *s;
  throw pp::SpecError("'" + arg + "' is neither a readable file nor a built-in scenario (see 'list')");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int run_verify(const Globals& g, const std::string& arg, int samples) {
  const auto spec = load(arg);
  pp::VerifyOptions options;
  options.seed = g.seed;
  options.sample_points = samples;
  if (g.tol) options.tolerance = *g.tol;
  const auto report = pp::verify_scenario(spec, options);
  if (g.json) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << report.name << '\n';
    for (const auto& c : report.checks) {
      std::cout << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.check << "  residual " << fmt(c.residual)
                << " (tol " << fmt(c.tolerance) << ")";
      if (c.value) std::cout << "  value " << *c.value;
      std::cout << '\n';
    }
    std::cout << "verdict: " << (report.verdict() ? "pass" : "fail") << '\n';
  }
  return report.verdict() ? 0 : 1;
}

int run_compat(const Globals& g, const std::string& a, const std::string& b) {
  pp::CompatibilityOptions options;
  options.seed = g.seed;
  if (g.tol) options.tolerance = *g.tol;
  const auto report = pp::compat_scenarios(load(a), load(b), options);
  if (g.json) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    const auto& r = report.result;
    std::cout << report.name << '\n'
              << "  intersection residual  " << fmt(r.intersection_relative) << '\n'
              << "  sum-bracket jacobiator " << fmt(r.sum_jacobiator_relative) << '\n'
              << "  tolerance              " << fmt(report.tolerance) << '\n';
    if (!r.routes_agree()) std::cout << "  warning: the two criteria disagree\n";
    std::cout << "verdict: " << (report.compatible() ? "compatible" : "incompatible") << '\n';
  }
  return report.compatible() ? 0 : 1;
}

int run_integrate(const Globals& g, const std::string& arg, std::optional<double> t_end) {
  auto spec = load(arg);
  if (t_end) spec.t_end = *t_end;
  const auto report = pp::integrate_scenario(spec);
  if (!g.out.empty() && !report.failure) {
    std::ofstream out(g.out, std::ios::binary);
    if (!out) throw pp::SpecError("cannot write " + g.out);
    pp::write_trajectory_csv(report.trajectory, out);
  }
  if (g.json) {
    std::cout << report.to_json().dump(2) << '\n';
  } else if (report.failure) {
    std::cout << report.name << ": integration failed at t = " << report.failure_time << ": " << *report.failure << '\n';
  } else {
    std::cout << report.name << ": " << report.trajectory.stats.accepted << " steps to t = "
              << report.trajectory.times.back() << '\n';
    for (const auto& d : report.drift) {
      std::cout << "  " << (d.normalized <= report.drift_bound ? "pass" : "FAIL") << "  " << d.name << "  drift "
                << fmt(d.normalized) << " (bound " << fmt(report.drift_bound) << ")\n";
    }
    std::cout << "verdict: " << (report.ok() ? "pass" : "fail") << '\n';
  }
  return report.ok() ? 0 : 1;
}

int run_elliptic(const Globals& g, double k, double t_max, int steps) {
  if (!(k >= 0.0 && k < 1.0)) throw pp::InvalidArgument("--k must lie in [0, 1)");
  const auto table = pp::elliptic_table(k, t_max, steps);
  if (g.out.empty()) {
    table.write_csv(std::cout);
  } else {
    std::ofstream out(g.out, std::ios::binary);
    if (!out) throw pp::SpecError("cannot write " + g.out);
    table.write_csv(out);
  }
  std::cerr << "max identity residual " << fmt(table.max_identity) << ", max oracle delta "
            << fmt(table.max_oracle_delta) << '\n';
  return table.ok() ? 0 : 1;
}

int run_list(const Globals& g) {
  const auto catalog = pp::builtin_catalog();
  if (g.json) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& s : catalog) all.push_back(pp::scenario_to_json(s));
    std::cout << all.dump(2) << '\n';
    return 0;
  }
  for (const auto& s : catalog) {
    const char* structure = s.structure == pp::Structure::E3 ? "e3" : s.structure == pp::Structure::Canonical ? "canonical" : "plucker";
    std::printf("%-16s n=%d  %s\n", s.name.c_str(), s.dimension, structure);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plücker-coordinate Poisson brackets: verification, compatibility and integration"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for random sample points")->capture_default_str();
  app.add_option("--tol", g.tol, "Override the base relative tolerance");
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--out", g.out, "Output path for CSV data");

  std::string scenario;
  std::string other;
  int samples = 100;
  auto* verify = app.add_subcommand("verify", "Run the structural checks on a scenario");
  verify->add_option("scenario", scenario, "Scenario file or built-in name")->required();
  verify->add_option("--samples", samples, "Number of generic sample points")->capture_default_str()->check(CLI::PositiveNumber);

  auto* compat = app.add_subcommand("compat", "Test two Plücker brackets for compatibility");
  compat->add_option("first", scenario, "Scenario file or built-in name")->required();
  compat->add_option("second", other, "Scenario file or built-in name")->required();

  std::optional<double> t_end;
  auto* integ = app.add_subcommand("integrate", "Integrate a scenario and report invariant drift");
  integ->add_option("scenario", scenario, "Scenario file or built-in name")->required();
  integ->add_option("--t-end", t_end, "Override the scenario's final time");

  double k = 0.5;
  double t_max = 5.0;
  int steps = 100;
  auto* ell = app.add_subcommand("elliptic", "Tabulate sn, cn, dn against the quadrature oracle");
  ell->add_option("--k", k, "Modulus in [0, 1)")->capture_default_str();
  ell->add_option("--t-max", t_max, "Final time")->capture_default_str();
  ell->add_option("--steps", steps, "Number of intervals")->capture_default_str()->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list", "List the built-in scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (verify->parsed()) return run_verify(g, scenario, samples);
    if (compat->parsed()) return run_compat(g, scenario, other);
    if (integ->parsed()) return run_integrate(g, scenario, t_end);
    if (ell->parsed()) return run_elliptic(g, k, t_max, steps);
    if (list->parsed()) return run_list(g);
  } catch (const pp::SpecError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
