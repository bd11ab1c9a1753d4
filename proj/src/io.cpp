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

#include "qedr/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qedr/errors.hpp"

namespace qedr {

namespace {

constexpr double kZeroSnap = 1e-12;

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(where + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json rounded_complex(Complex z) {
  return Json::array({round_report(z.real()), round_report(z.imag())});
}

std::size_t positive_size(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw InputError(where + ": expected a positive integer");
  }
  return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(where + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

std::vector<std::size_t> dims_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty array");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < j.size(); ++i) {
    dims.push_back(positive_size(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return dims;
}

Json rounded_values(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(round_report(x));
  return out;
}

const char* relation_symbol(Relation r) { return r == Relation::kGreaterEqual ? ">=" : "<="; }

}  // namespace

std::string format_number(double x) {
  if (std::abs(x) < kZeroSnap) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_report(double x) { return std::stod(format_number(x)); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (const auto& z : m.row_major_entries()) entries.push_back(complex_to_json(z));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = positive_size(field(j, "rows", "matrix"), "matrix.rows");
  const std::size_t cols = positive_size(field(j, "cols", "matrix"), "matrix.cols");
  const Json& e = field(j, "entries", "matrix");
  if (!e.is_array()) throw InputError("matrix.entries: expected an array");
  if (e.size() != rows * cols) {
    throw InputError("matrix.entries: expected " + std::to_string(rows * cols) +
                     " entries, got " + std::to_string(e.size()));
  }
  std::vector<Complex> flat;
  flat.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    flat.push_back(complex_from_json(e[i], "matrix.entries[" + std::to_string(i) + "]"));
  }
  return ComplexMatrix::from_row_major(rows, cols, flat);
}

Json state_to_json(const QState& s) {
  Json amps = Json::array();
  for (const auto& z : s.amplitudes()) amps.push_back(complex_to_json(z));
  return {{"dims", s.dims()}, {"amplitudes", amps}};
}

QState state_from_json(const Json& j) {
  const Json* amps = &j;
  std::vector<std::size_t> dims;
  if (j.is_object()) {
    dims = dims_from_json(field(j, "dims", "state"), "state.dims");
    amps = &field(j, "amplitudes", "state");
  }
  if (!amps->is_array() || amps->empty()) {
    throw InputError("state.amplitudes: expected a non-empty array");
  }
  std::vector<Complex> values;
  for (std::size_t i = 0; i < amps->size(); ++i) {
    values.push_back(complex_from_json((*amps)[i], "state.amplitudes[" + std::to_string(i) + "]"));
  }
  if (dims.empty()) dims = {values.size()};
  return {std::move(dims), std::move(values)};
}

Json model_to_json(const MeasurementModel& m) {
  return {{"system_dims", m.system_dims()},
          {"probe_dim", m.probe_dim()},
          {"probe_state", state_to_json(m.probe_state())},
          {"unitary", matrix_to_json(m.unitary())},
          {"meter", matrix_to_json(m.meter().matrix())}};
}

MeasurementModel model_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("model: expected a JSON object");
  auto system_dims = dims_from_json(field(j, "system_dims", "model"), "model.system_dims");
  const std::size_t probe_dim = positive_size(field(j, "probe_dim", "model"), "model.probe_dim");
  QState probe_state = state_from_json(field(j, "probe_state", "model"));
  ComplexMatrix unitary = matrix_from_json(field(j, "unitary", "model"));
  Observable meter(matrix_from_json(field(j, "meter", "model")), "meter");
  return {std::move(system_dims), probe_dim, std::move(probe_state), std::move(unitary),
          std::move(meter)};
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

MeasurementModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return model_from_json(parse_json(ss.str(), path));
}

Json distribution_to_json(const JointDistribution& d) {
  Json weights = Json::array();
  for (const auto& row : d.weights()) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(rounded_complex(z));
    weights.push_back(r);
  }
  return {{"kind", to_string(d.kind())},
          {"u", rounded_values(d.u_values())},
          {"v", rounded_values(d.v_values())},
          {"weights", weights}};
}

Json multi_distribution_to_json(const MultiDistribution& d) {
  Json values = Json::array();
  for (const auto& v : d.values) values.push_back(rounded_values(v));
  return {{"labels", d.labels}, {"values", values}, {"weights", rounded_values(d.weights)}};
}

Json inequality_to_json(const InequalityRecord& r) {
  return {{"name", r.name},
          {"relation", relation_symbol(r.relation)},
          {"lhs", round_report(r.lhs)},
          {"rhs", round_report(r.rhs)},
          {"satisfied", r.satisfied},
          {"margin", round_report(r.margin)}};
}

Json edr_report_to_json(const EDRReport& r) {
  Json ineq = Json::array();
  for (const auto& rec : r.inequalities) ineq.push_back(inequality_to_json(rec));
  return {{"epsilon", round_report(r.epsilon)},
          {"eta", round_report(r.eta)},
          {"sigma_a", round_report(r.sigma_a)},
          {"sigma_b", round_report(r.sigma_b)},
          {"bound", round_report(r.commutator_bound)},
          {"inequalities", ineq}};
}

Json e91_report_to_json(const E91Report& r) {
  Json out = {{"label", r.label},
              {"p_ab", round_report(r.p_ab)},
              {"p_e", round_report(r.p_e)},
              {"p_e_optimal", round_report(r.p_e_optimal)},
              {"eta_key", round_report(r.eta_key)},
              {"epsilon_eve", round_report(r.epsilon_eve)},
              {"delta_g_tau", round_report(r.delta_g_tau)}};
  out["theta"] = r.theta ? Json(round_report(*r.theta)) : Json(nullptr);
  return out;
}

Json scenario_to_json(const ScenarioResult& r) {
  Json quantities = Json::object();
  for (const auto& [k, v] : r.quantities) quantities[k] = round_report(v);
  Json dists = Json::object();
  for (const auto& [k, d] : r.distributions) dists[k] = distribution_to_json(d);
  Json multi = Json::object();
  for (const auto& [k, d] : r.multi_distributions) multi[k] = multi_distribution_to_json(d);
  Json ineq = Json::array();
  for (const auto& rec : r.inequalities) ineq.push_back(inequality_to_json(rec));
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", round_report(c.expected)},
                      {"actual", round_report(c.actual)},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed()}});
  }
  Json out = {{"label", r.label},
              {"model", r.model_summary},
              {"quantities", quantities},
              {"distributions", dists},
              {"classifications", r.classifications},
              {"inequalities", ineq},
              {"checks", checks},
              {"all_checks_passed", r.all_checks_pass()}};
  if (!multi.empty()) out["multi_distributions"] = multi;
  if (r.e91) out["e91"] = e91_report_to_json(*r.e91);
  return out;
}

}  // namespace qedr
