#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsuit/catalog.hpp"
#include "qsuit/core.hpp"
#include "qsuit/lu.hpp"
#include "qsuit/protocol.hpp"
#include "qsuit/schmidt.hpp"
#include "qsuit/state.hpp"
#include "qsuit/suitability.hpp"

namespace qsuit {

using json = nlohmann::json;

inline json cplx_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

inline cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("expected [re, im] pair");
  }
  return cplx(j[0].get<double>(), j[1].get<double>());
}

// { "n_qubits": n, "amplitudes": [[re, im], ...] } with 2^n entries.
inline json state_to_json(const pure_state& state) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    amps.push_back(cplx_to_json(state.amplitude(i)));
  }
  return json{{"n_qubits", state.n_qubits()}, {"amplitudes", amps}};
}

inline pure_state state_from_json(const json& j) {
  if (!j.contains("n_qubits") || !j.contains("amplitudes")) {
    throw std::invalid_argument("state json needs n_qubits and amplitudes");
  }
  const int n = j["n_qubits"].get<int>();
  const auto& amps = j["amplitudes"];
  if (!amps.is_array()) throw std::invalid_argument("amplitudes must be an array");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx_from_json(amps[i]);
  return pure_state(n, std::move(v));
}

inline json matrix2_to_json(const Eigen::Matrix2cd& m) {
  return json::array({json::array({cplx_to_json(m(0, 0)), cplx_to_json(m(0, 1))}),
                      json::array({cplx_to_json(m(1, 0)), cplx_to_json(m(1, 1))})});
}

inline json lu_to_json(const local_unitary& lu) {
  json factors = json::array();
  for (const auto& f : lu.factors()) factors.push_back(matrix2_to_json(f));
  return factors;
}

// { "lambda": [5 reals], "phi": real, "unitaries": [three 2x2 matrices] }.
inline json sd_to_json(const schmidt_decomposition& sd) {
  return json{{"lambda", sd.lambda}, {"phi", sd.phi}, {"unitaries", lu_to_json(sd.unitaries)}};
}

// { "protocol": str, "verdict": bool, "residuals": {label: real} }.
inline json report_to_json(const suitability_report& report) {
  json residuals = json::object();
  for (const auto& [label, value] : report.residuals) residuals[label] = value;
  return json{{"protocol", to_string(report.protocol)},
              {"verdict", report.verdict},
              {"residuals", residuals}};
}

inline json outcomes_to_json(const std::vector<teleport_outcome>& outcomes) {
  json list = json::array();
  for (const auto& o : outcomes) {
    list.push_back(json{{"outcome", o.outcome_index},
                        {"probability", o.probability},
                        {"fidelity", o.bob_fidelity}});
  }
  return list;
}

// { "trials": n, "agree": n, "witnesses": [local unitary, ...] }.
inline json trial_report_to_json(const lu_trial_report& report) {
  json witnesses = json::array();
  for (const auto& w : report.disagree_witnesses) witnesses.push_back(lu_to_json(w));
  return json{{"trials", report.trials}, {"agree", report.agree}, {"witnesses", witnesses}};
}

inline json catalog_entry_to_json(const catalog_entry& entry) {
  json expected = json::object();
  for (const auto& [protocol, verdict] : entry.expected) {
    expected[to_string(protocol)] = verdict;
  }
  return json{{"name", entry.name},
              {"label", entry.label},
              {"note", entry.note},
              {"state", state_to_json(entry.state)},
              {"expected", expected}};
}

inline json catalog_to_json() {
  json list = json::array();
  for (const auto& e : catalog()) list.push_back(catalog_entry_to_json(e));
  return list;
}

}  // namespace qsuit
