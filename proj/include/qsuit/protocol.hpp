#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsuit/core.hpp"
#include "qsuit/state.hpp"
#include "qsuit/suitability.hpp"

namespace qsuit {

struct teleport_outcome {
  int outcome_index;
  double probability;
  double bob_fidelity;
};

// Measurement basis for teleportation with a three-qubit resource: four
// vectors over qubits (a,1,2) built from the even/odd amplitude blocks of
// the resource, with the Pauli correction Bob applies for each outcome.
class ptp_basis {
 public:
  explicit ptp_basis(const pure_state& resource) {
    if (resource.n_qubits() != 3) {
      throw std::invalid_argument("ptp_basis: resource must have three qubits");
    }
    const auto& c = resource.amplitudes();
    Eigen::VectorXcd xi(4), pi(4);
    for (int i = 0; i < 4; ++i) {
      xi(i) = c(2 * i);      // qubit 3 = |0>
      pi(i) = c(2 * i + 1);  // qubit 3 = |1>
    }
    for (int i = 0; i < 4; ++i) {
      vectors_[i] = Eigen::VectorXcd::Zero(8);
    }
    vectors_[0].head(4) = xi;  // chi+ = |0>Xi + |1>Pi
    vectors_[0].tail(4) = pi;
    vectors_[1].head(4) = xi;  // chi- = |0>Xi - |1>Pi
    vectors_[1].tail(4) = -pi;
    vectors_[2].head(4) = pi;  // sigma+ = |1>Xi + |0>Pi
    vectors_[2].tail(4) = xi;
    vectors_[3].head(4) = -pi;  // sigma- = |1>Xi - |0>Pi
    vectors_[3].tail(4) = xi;
    corrections_ = {Eigen::Matrix2cd::Identity(), pauli_z(), pauli_x(),
                    pauli_x() * pauli_z()};
  }

  // Outcome order: chi+, chi-, sigma+, sigma-.
  const std::array<Eigen::VectorXcd, 4>& vectors() const { return vectors_; }
  const std::array<Eigen::Matrix2cd, 4>& corrections() const { return corrections_; }

  static std::array<std::string, 4> labels() {
    return {"chi+", "chi-", "sigma+", "sigma-"};
  }

 private:
  std::array<Eigen::VectorXcd, 4> vectors_;
  std::array<Eigen::Matrix2cd, 4> corrections_;
};

inline bool ptp_orthogonality(const pure_state& resource, double eps = tol::cond) {
  const ptp_basis basis(resource);
  std::vector<Eigen::VectorXcd> vs(basis.vectors().begin(), basis.vectors().end());
  for (const auto& v : vs) {
    if (std::abs(v.norm() - 1.0) >= eps) return false;
  }
  return gram_offdiag_max(vs) < eps;
}

// Coded-state set for superdense coding: the fixed Pauli words on Alice's
// qubit(s) applied to the resource. Four states for 2 bits, eight for 3.
class coded_set {
 public:
  coded_set(const pure_state& resource, int bits) {
    if (resource.n_qubits() != 3) {
      throw std::invalid_argument("coded_set: resource must have three qubits");
    }
    if (bits != 2 && bits != 3) {
      throw std::invalid_argument("coded_set: bits must be 2 or 3");
    }
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    const Eigen::Matrix2cd zx = pauli_z() * pauli_x();
    operators_.push_back(local_unitary({id, id, id}));
    operators_.push_back(local_unitary({pauli_z(), id, id}));
    operators_.push_back(local_unitary({pauli_x(), id, id}));
    operators_.push_back(local_unitary({zx, id, id}));
    if (bits == 3) {
      operators_.push_back(local_unitary({id, pauli_x(), id}));
      operators_.push_back(local_unitary({id, zx, id}));
      operators_.push_back(local_unitary({pauli_x(), pauli_x(), id}));
      operators_.push_back(local_unitary({pauli_x(), zx, id}));
    }
    for (const auto& op : operators_) {
      states_.push_back(apply_local_unitary(resource, op));
    }
  }

  const std::vector<local_unitary>& operators() const { return operators_; }
  const std::vector<pure_state>& states() const { return states_; }

 private:
  std::vector<local_unitary> operators_;
  std::vector<pure_state> states_;
};

inline coded_set sdc_coded_set(const pure_state& resource, int bits) {
  return coded_set(resource, bits);
}

inline bool sdc_orthogonality(const pure_state& resource, int bits,
                              double eps = tol::cond) {
  return gram_offdiag_max(coded_set(resource, bits).states()) < eps;
}

namespace detail {

// Deterministic enumeration of a joint measurement: project phi (x) resource
// onto each basis vector over the measured qubits, read off the receiver's
// conditional qubit, apply the correction, compare with phi.
inline std::vector<teleport_outcome> enumerate_outcomes(
    const Eigen::VectorXcd& joint, const std::vector<Eigen::VectorXcd>& basis,
    const std::vector<Eigen::Matrix2cd>& corrections, const unknown_qubit& phi) {
  std::vector<teleport_outcome> outcomes;
  for (std::size_t o = 0; o < basis.size(); ++o) {
    Eigen::Vector2cd v = Eigen::Vector2cd::Zero();
    for (Eigen::Index m = 0; m < basis[o].size(); ++m) {
      v(0) += std::conj(basis[o](m)) * joint(2 * m);
      v(1) += std::conj(basis[o](m)) * joint(2 * m + 1);
    }
    const double p = v.squaredNorm();
    double fid = 0.0;
    if (p > 0) {
      const Eigen::Vector2cd bob = corrections[o] * (v / v.norm());
      fid = std::norm(std::conj(phi.alpha) * bob(0) + std::conj(phi.beta) * bob(1));
    }
    outcomes.push_back({static_cast<int>(o), p, fid});
  }
  return outcomes;
}

inline Eigen::VectorXcd attach_unknown(const unknown_qubit& phi,
                                       const pure_state& resource) {
  Eigen::VectorXcd joint(2 * resource.dim());
  joint.head(resource.dim()) = phi.alpha * resource.amplitudes();
  joint.tail(resource.dim()) = phi.beta * resource.amplitudes();
  return joint;
}

}  // namespace detail

// Full teleportation run over all four outcomes. Empty when the resource
// does not yield an orthonormal measurement basis (protocol undefined).
inline std::optional<std::vector<teleport_outcome>> simulate_ptp(
    const pure_state& resource, const unknown_qubit& phi, double eps = tol::cond) {
  if (!ptp_orthogonality(resource, eps)) return std::nullopt;
  const ptp_basis basis(resource);
  return detail::enumerate_outcomes(
      detail::attach_unknown(phi, resource),
      {basis.vectors().begin(), basis.vectors().end()},
      {basis.corrections().begin(), basis.corrections().end()}, phi);
}

// Two-qubit teleportation with the resource-adapted basis over (a,1).
inline std::optional<std::vector<teleport_outcome>> simulate_bennett(
    const pure_state& resource, const unknown_qubit& phi, double eps = tol::cond) {
  if (resource.n_qubits() != 2) {
    throw std::invalid_argument("simulate_bennett: resource must have two qubits");
  }
  if (!check_bennett2(resource, eps).verdict) return std::nullopt;
  const auto& c = resource.amplitudes();
  // xi+- = c0|00> + c2|01> +- c1|10> +- c3|11>,
  // mu+- = +-c1|00> +- c3|01> + c0|10> + c2|11>.
  std::vector<Eigen::VectorXcd> basis(4, Eigen::VectorXcd::Zero(4));
  basis[0] << c(0), c(2), c(1), c(3);
  basis[1] << c(0), c(2), -c(1), -c(3);
  basis[2] << c(1), c(3), c(0), c(2);
  basis[3] << -c(1), -c(3), c(0), c(2);
  const std::vector<Eigen::Matrix2cd> corrections = {
      Eigen::Matrix2cd::Identity(), pauli_z(), pauli_x(), pauli_x() * pauli_z()};
  return detail::enumerate_outcomes(detail::attach_unknown(phi, resource), basis,
                                    corrections, phi);
}

// Superdense coding round trip: Alice encodes the message index with the
// corresponding Pauli word, Bob decodes by overlap with the coded set.
inline std::optional<std::string> simulate_sdc(const pure_state& resource,
                                               const std::string& message,
                                               double eps = tol::cond) {
  const int bits = static_cast<int>(message.size());
  if (bits != 2 && bits != 3) {
    throw std::invalid_argument("simulate_sdc: message must have 2 or 3 bits");
  }
  int index = 0;
  for (char ch : message) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("simulate_sdc: message must be a bit string");
    }
    index = 2 * index + (ch - '0');
  }
  if (!sdc_orthogonality(resource, bits, eps)) return std::nullopt;
  const coded_set set(resource, bits);
  const pure_state& received = set.states()[index];
  int best = 0;
  double best_overlap = -1.0;
  for (std::size_t j = 0; j < set.states().size(); ++j) {
    const double ov = std::abs(overlap(set.states()[j], received));
    if (ov > best_overlap) {
      best_overlap = ov;
      best = static_cast<int>(j);
    }
  }
  std::string decoded(bits, '0');
  for (int b = 0; b < bits; ++b) {
    if ((best >> (bits - 1 - b)) & 1) decoded[b] = '1';
  }
  return decoded;
}

// Fixed-circuit teleportation: CNOT from the unknown qubit onto resource
// qubit 1, Hadamard on the unknown qubit, computational measurement of both,
// then the outcome-indexed Pauli Z^m X^l on qubit 2. Always defined; the
// per-outcome fidelities report how well the circuit does.
inline std::vector<teleport_outcome> simulate_nielsen_circuit(
    const pure_state& resource, const unknown_qubit& phi) {
  if (resource.n_qubits() != 2) {
    throw std::invalid_argument("simulate_nielsen_circuit: resource must have two qubits");
  }
  // Joint state over (a,1,2) with a as most significant qubit.
  Eigen::VectorXcd joint(8);
  joint.head(4) = phi.alpha * resource.amplitudes();
  joint.tail(4) = phi.beta * resource.amplitudes();

  // CNOT a->1: swap |10k> <-> |11k>.
  for (int k = 0; k < 2; ++k) std::swap(joint(4 + k), joint(6 + k));
  // Hadamard on a.
  for (int i = 0; i < 4; ++i) {
    const cplx top = joint(i), bottom = joint(4 + i);
    joint(i) = (top + bottom) / std::sqrt(2.0);
    joint(4 + i) = (top - bottom) / std::sqrt(2.0);
  }

  std::vector<teleport_outcome> outcomes;
  for (int m = 0; m < 2; ++m) {
    for (int l = 0; l < 2; ++l) {
      Eigen::Vector2cd v;
      v << joint(4 * m + 2 * l), joint(4 * m + 2 * l + 1);
      const double p = v.squaredNorm();
      double fid = 0.0;
      if (p > 0) {
        Eigen::Vector2cd bob = v / v.norm();
        if (l) bob = pauli_x() * bob;
        if (m) bob = pauli_z() * bob;
        fid = std::norm(std::conj(phi.alpha) * bob(0) + std::conj(phi.beta) * bob(1));
      }
      outcomes.push_back({2 * m + l, p, fid});
    }
  }
  return outcomes;
}

}  // namespace qsuit
