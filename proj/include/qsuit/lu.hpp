#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qsuit/core.hpp"
#include "qsuit/measures.hpp"
#include "qsuit/random.hpp"
#include "qsuit/state.hpp"
#include "qsuit/suitability.hpp"

namespace qsuit {

// Haar-random tensor product of single-qubit unitaries, deterministic in the
// seed.
inline local_unitary random_local_unitary(std::uint64_t seed, int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("random_local_unitary: need at least one qubit");
  }
  rng_stream rng(seed);
  std::vector<Eigen::Matrix2cd> factors;
  factors.reserve(n_qubits);
  for (int q = 0; q < n_qubits; ++q) factors.push_back(haar_unitary2(rng));
  return local_unitary(std::move(factors));
}

struct lu_trial_config {
  int trials;
  std::uint64_t seed;
  protocol_kind protocol;
};

struct lu_trial_report {
  int trials;
  int agree;
  std::vector<local_unitary> disagree_witnesses;
};

namespace detail {

inline bool protocol_verdict(protocol_kind protocol, const pure_state& state) {
  switch (protocol) {
    case protocol_kind::ptp: return check_ptp3(state).verdict;
    case protocol_kind::ptp_n: return check_ptp_n(state).verdict;
    case protocol_kind::bennett: return check_bennett2(state).verdict;
    case protocol_kind::psdc2: return check_psdc2(state).verdict;
    default: return check_psdc3(state).verdict;
  }
}

}  // namespace detail

// Compares a protocol verdict on a state against the verdict on random local
// rotations of it. Each disagreeing rotation is kept as a witness. Trials
// use seeds derived per index, so serial and batched runs agree.
inline lu_trial_report lu_invariance_trial(const pure_state& state,
                                           const lu_trial_config& config) {
  if (config.trials < 1) {
    throw std::invalid_argument("lu_invariance_trial: trials must be positive");
  }
  const bool base = detail::protocol_verdict(config.protocol, state);
  lu_trial_report report{config.trials, 0, {}};
  const rng_stream root(config.seed);
  for (int t = 0; t < config.trials; ++t) {
    rng_stream rng = root.child(static_cast<std::uint64_t>(t));
    std::vector<Eigen::Matrix2cd> factors;
    for (int q = 0; q < state.n_qubits(); ++q) factors.push_back(haar_unitary2(rng));
    local_unitary lu(std::move(factors));
    const bool rotated = detail::protocol_verdict(config.protocol,
                                                  apply_local_unitary(state, lu));
    if (rotated == base) {
      ++report.agree;
    } else {
      report.disagree_witnesses.push_back(std::move(lu));
    }
  }
  return report;
}

struct psdc3_witness {
  pure_state suitable;    // GHZ: passes the three-bit coding conditions
  pure_state unsuitable;  // its Hadamard rotation: fails condition a1
  local_unitary transform;
};

// Explicit witness that three-bit superdense coding suitability is not
// preserved by local unitaries.
inline psdc3_witness psdc3_counterexample() {
  const double s = 1.0 / std::sqrt(2.0);
  pure_state ghz = pure_state::from_terms(3, {{0, s}, {7, s}});
  local_unitary m_on_first({hadamard(), Eigen::Matrix2cd::Identity(),
                            Eigen::Matrix2cd::Identity()});
  pure_state rotated = apply_local_unitary(ghz, m_on_first);
  return {std::move(ghz), std::move(rotated), std::move(m_on_first)};
}

// The four scalars preserved by local unitaries: single-qubit entropies and
// the 3-tangle.
struct lu_invariant_values {
  double entropy1;
  double entropy2;
  double entropy3;
  double tangle;
};

inline lu_invariant_values lu_invariants(const pure_state& state) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument("lu_invariants: state must have three qubits");
  }
  return {von_neumann_entropy(reduced_density(state, {1})),
          von_neumann_entropy(reduced_density(state, {2})),
          von_neumann_entropy(reduced_density(state, {3})),
          three_tangle(state)};
}

}  // namespace qsuit
