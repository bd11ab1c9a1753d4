// Copyright 2026 The qedr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qedr/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qedr/audit.hpp"
#include "qedr/edr.hpp"
#include "qedr/errors.hpp"
#include "qedr/io.hpp"
#include "qedr/measures.hpp"
#include "qedr/operators.hpp"
#include "qedr/scenarios.hpp"

namespace qedr {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kSweepColumns = {"theta", "eta_o",       "epsilon_o",
                                                "delta_g_tau", "p_ab",  "p_e",
                                                "p_e_optimal", "branciard_lhs"};

std::string read_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + what + " file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON when the argument looks like JSON, otherwise a file path.
Json json_argument(const std::string& arg, const std::string& what) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return parse_json(arg, what);
  }
  return parse_json(read_file(arg, what), arg);
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(x)) throw InputError(what + ": not a number: '" + s + "'");
  return x;
}

std::optional<ComplexMatrix> named_pauli(const std::string& name) {
  if (name == "sigma_x") return ops::sigma_x();
  if (name == "sigma_y") return ops::sigma_y();
  if (name == "sigma_z") return ops::sigma_z();
  const std::string prefix = "sigma_theta:";
  if (name.rfind(prefix, 0) == 0) {
    return ops::sigma_theta(parse_double(name.substr(prefix.size()), name));
  }
  return std::nullopt;
}

// sigma_x | sigma_y | sigma_z | sigma_theta:<rad>, optionally followed by
// @k to place it on system factor k (counting from 1); otherwise matrix JSON.
Observable parse_observable(const std::string& arg, const std::string& label,
                            const MeasurementModel& model) {
  const auto at = arg.rfind('@');
  const std::string base = at == std::string::npos ? arg : arg.substr(0, at);
  if (auto pauli = named_pauli(base)) {
    const auto& dims = model.system_dims();
    std::size_t factor = 0;
    if (at != std::string::npos) {
      const double k = parse_double(arg.substr(at + 1), arg);
      if (k < 1 || k > static_cast<double>(dims.size()) || k != std::floor(k)) {
        throw InputError(label + ": subsystem index in '" + arg + "' must be in 1.." +
                         std::to_string(dims.size()));
      }
      factor = static_cast<std::size_t>(k) - 1;
    } else if (dims.size() != 1) {
      throw InputError(label + ": '" + arg + "' needs an @k subsystem suffix");
    }
    if (dims[factor] != 2) throw InputError(label + ": Pauli observable on a non-qubit factor");
    return Observable(on_factor(*pauli, dims, factor), label);
  }
  if (at != std::string::npos && arg.find_first_of("{[") == std::string::npos) {
    throw InputError(label + ": unknown observable '" + arg + "'");
  }
  return Observable(matrix_from_json(json_argument(arg, "observable " + label)), label);
}

QState parse_state(const std::string& arg, const MeasurementModel& model) {
  const auto& dims = model.system_dims();
  const double r = 1.0 / std::numbers::sqrt2;
  const bool qubit = dims.size() == 1 && dims[0] == 2;
  if (qubit && arg == "+") return QState({2}, {r, r});
  if (qubit && arg == "-") return QState({2}, {r, -r});
  if (qubit && arg == "+i") return QState({2}, {r, Complex(0.0, r)});
  if (qubit && arg == "-i") return QState({2}, {r, Complex(0.0, -r)});
  if (arg == "phi+") {
    if (dims != std::vector<std::size_t>{2, 2}) throw InputError("psi: phi+ needs a qubit pair");
    return QState::bell_phi_plus();
  }
  if (!arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos) {
    if (arg.size() != dims.size()) {
      throw InputError("psi: basis label '" + arg + "' needs one digit per system factor (" +
                       std::to_string(dims.size()) + ")");
    }
    std::vector<std::size_t> digits;
    for (std::size_t k = 0; k < arg.size(); ++k) {
      digits.push_back(static_cast<std::size_t>(arg[k] - '0'));
      if (digits.back() >= dims[k]) throw InputError("psi: basis digit out of range in '" + arg + "'");
    }
    return QState::basis(dims, digits);
  }
  if (arg.find_first_of("{[") == std::string::npos && arg.find('.') == std::string::npos &&
      arg.find('/') == std::string::npos) {
    throw InputError("psi: unknown state '" + arg + "'");
  }
  QState s = state_from_json(json_argument(arg, "psi"));
  if (s.dimension() != model.system_dim()) {
    throw InputError("psi: dimension " + std::to_string(s.dimension()) +
                     " does not match the system dimension " + std::to_string(model.system_dim()));
  }
  return QState(dims, s.amplitudes());
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError("cannot write output file '" + out_path + "'");
  f << text;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += cells[i];
  }
  return s + '\n';
}

int cmd_scenario(const std::string& name, std::optional<double> theta,
                 std::optional<std::uint64_t> seed, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  const auto& names = scenario_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw UsageError("unknown scenario '" + name + "' (expected one of: " + list + ")");
  }
  if (theta && name == "bell-sigma-theta" && !(*theta >= 0.0 && *theta < std::numbers::pi / 2)) {
    throw UsageError("--theta must lie in [0, pi/2)");
  }
  const ScenarioResult result = run_scenario(name, theta, seed);
  emit(scenario_to_json(result).dump(2) + "\n", out_path, out);
  if (!result.all_checks_pass()) {
    for (const auto& c : result.checks) {
      if (!c.passed()) {
        err << "check failed: " << c.name << ": expected " << format_number(c.expected)
            << ", got " << format_number(c.actual) << "\n";
      }
    }
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_sweep(double theta_min, double theta_max, double step, const std::string& format,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (!(step > 0.0)) throw UsageError("--step must be positive");
  if (!(theta_min >= 0.0 && theta_min <= theta_max && theta_max < std::numbers::pi / 2)) {
    throw UsageError("theta range must satisfy 0 <= theta-min <= theta-max < pi/2");
  }
  const auto count = static_cast<std::size_t>(std::floor((theta_max - theta_min) / step + 1e-9)) + 1;
  std::string csv = csv_line(kSweepColumns);
  Json rows = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = std::min(theta_min + static_cast<double>(i) * step, theta_max);
    const ScenarioResult r = scenario_bell_sigma_theta(theta);
    std::vector<std::string> cells;
    Json row = Json::object();
    for (const auto& col : kSweepColumns) {
      const double v = r.quantities.at(col);
      cells.push_back(format_number(v));
      row[col] = round_report(v);
    }
    csv += csv_line(cells);
    rows.push_back(std::move(row));
    if (!r.all_checks_pass()) {
      ok = false;
      err << "check failed at theta = " << format_number(theta) << "\n";
    }
  }
  emit(format == "csv" ? csv : Json{{"columns", kSweepColumns}, {"rows", rows}}.dump(2) + "\n",
       out_path, out);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_audit(std::uint64_t seed, std::size_t n, const std::string& format,
              const std::string& out_path, std::ostream& out) {
  if (n < 1) throw UsageError("--n must be at least 1");
  const AuditSummary s = run_audit(seed, n);
  std::string text;
  if (format == "csv") {
    text = csv_line({"property", "universal", "cases", "passed", "worst", "metric"});
    for (const auto& p : s.properties) {
      text += csv_line({p.name, p.universal ? "true" : "false", std::to_string(p.cases),
                        std::to_string(p.passed), format_number(p.worst), '"' + p.metric + '"'});
    }
  } else {
    Json props = Json::array();
    for (const auto& p : s.properties) {
      props.push_back({{"name", p.name},
                       {"universal", p.universal},
                       {"cases", p.cases},
                       {"passed", p.passed},
                       {"worst", std::isfinite(p.worst) ? Json(round_report(p.worst)) : Json()},
                       {"metric", p.metric},
                       {"ok", p.ok()}});
    }
    text = Json{{"seed", s.seed}, {"n", s.n}, {"properties", props}, {"all_pass", s.all_pass()}}
               .dump(2) +
           "\n";
  }
  emit(text, out_path, out);
  return s.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_analyze(const std::string& model_path, const std::string& a_arg, const std::string& b_arg,
                const std::string& psi_arg, double tol, const std::string& format,
                const std::string& out_path, std::ostream& out) {
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  const MeasurementModel model = load_model_file(model_path);
  const Observable a = parse_observable(a_arg, "A", model);
  const Observable b = parse_observable(b_arg, "B", model);
  const QState psi = parse_state(psi_arg, model);
  if (a.dimension() != model.system_dim() || b.dimension() != model.system_dim()) {
    throw InputError("observables must act on the system (dimension " +
                     std::to_string(model.system_dim()) + ")");
  }

  const EDRReport report = edr_report(model, a, b, psi);
  const ProperNonDisturbance proper = is_properly_nondisturbing(model, b, psi, tol);
  const bool distributional = is_distributionally_nondisturbing(model, b, psi, tol);
  const EtaBarResult bar = eta_bar(model, b, psi);

  std::string text;
  if (format == "csv") {
    text = csv_line({"quantity", "value"});
    const std::pair<const char*, double> rows[] = {
        {"epsilon", report.epsilon}, {"eta", report.eta},   {"sigma_a", report.sigma_a},
        {"sigma_b", report.sigma_b}, {"bound", report.commutator_bound}, {"eta_bar", bar.value}};
    for (const auto& [k, v] : rows) text += csv_line({k, format_number(v)});
    for (const auto& r : report.inequalities) {
      text += csv_line({r.name + "_margin", format_number(r.margin)});
    }
  } else {
    Json j;
    j["report"] = edr_report_to_json(report);
    j["classifications"] = {{"distributionally_nondisturbing", distributional},
                            {"properly_nondisturbing", proper.verdict},
                            {"condition_s", proper.s_holds},
                            {"condition_w", proper.w_holds},
                            {"projector_transfer", proper.projector_transfer_holds}};
    j["eta_bar"] = {{"value", round_report(bar.value)},
                    {"t_at_sup", round_report(bar.t_at_sup)},
                    {"period", round_report(bar.period)},
                    {"exact", bar.exact},
                    {"commensurate", bar.commensurate}};
    text = j.dump(2) + "\n";
  }
  emit(text, out_path, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Error and disturbance in quantum measurements", "qedr"};
  app.require_subcommand(1);

  std::string scenario_name;
  std::optional<double> theta;
  std::optional<std::uint64_t> scenario_seed;
  std::string format = "json";
  std::string out_path;
  const std::vector<std::string> formats = {"json", "csv"};

  auto* scenario = app.add_subcommand("scenario", "Run a worked example and print its report");
  scenario->add_option("name", scenario_name,
                       "cnot | no-measurement | bell-sigma-z | bell-sigma-theta | random-local")
      ->required();
  scenario->add_option("--theta", theta, "Angle for bell-sigma-theta, in [0, pi/2)");
  scenario->add_option("--seed", scenario_seed, "Seed for random-local");
  scenario->add_option("--out", out_path, "Write the report to PATH");

  double theta_min = 0.0, theta_max = 0.0, step = 0.0;
  auto* sweep = app.add_subcommand("sweep", "Tabulate the sigma_theta eavesdropping family");
  sweep->add_option("--theta-min", theta_min)->required();
  sweep->add_option("--theta-max", theta_max)->required();
  sweep->add_option("--step", step)->required();
  sweep->add_option("--format", format)->check(CLI::IsMember(formats));
  sweep->add_option("--out", out_path);

  std::uint64_t seed = 0;
  std::size_t n = 100;
  auto* audit = app.add_subcommand("audit", "Randomized audit of the inequalities and theorems");
  audit->add_option("--seed", seed);
  audit->add_option("--n", n, "Cases per property");
  audit->add_option("--format", format)->check(CLI::IsMember(formats));
  audit->add_option("--out", out_path);

  std::string model_path, a_arg, b_arg, psi_arg;
  double tol = kClassifyTol;
  auto* analyze = app.add_subcommand("analyze", "Analyze a user-supplied measurement model");
  analyze->add_option("model", model_path, "Model JSON file")->required();
  analyze->add_option("--a", a_arg, "Measured observable: named Pauli or matrix JSON")->required();
  analyze->add_option("--b", b_arg, "Disturbed observable: named Pauli or matrix JSON")->required();
  analyze->add_option("--psi", psi_arg, "System state: label or state JSON")->required();
  analyze->add_option("--tol", tol, "Classification tolerance");
  analyze->add_option("--format", format)->check(CLI::IsMember(formats));
  analyze->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*scenario) return cmd_scenario(scenario_name, theta, scenario_seed, out_path, out, err);
    if (*sweep) return cmd_sweep(theta_min, theta_max, step, format, out_path, out, err);
    if (*audit) return cmd_audit(seed, n, format, out_path, out);
    return cmd_analyze(model_path, a_arg, b_arg, psi_arg, tol, format, out_path, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const InvariantError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitDataError;
  } catch (const DimensionError& e) {
    err << "dimension mismatch: " << e.what() << "\n";
    return kExitDataError;
  } catch (const PreconditionError& e) {
    err << "unsupported input: " << e.what() << "\n";
    return kExitDataError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace qedr
