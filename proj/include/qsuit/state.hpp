#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsuit/core.hpp"

namespace qsuit {

// Normalized pure state of n qubits, amplitudes in the basis order defined
// in core.hpp (qubit 1 = most significant bit).
class pure_state {
 public:
  pure_state(int n_qubits, Eigen::VectorXcd amplitudes)
      : n_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_ < 1 || n_ > max_qubits) {
      throw std::invalid_argument("pure_state: qubit count out of range");
    }
    if (amps_.size() != (Eigen::Index{1} << n_)) {
      throw std::invalid_argument("pure_state: amplitude vector length must be 2^n");
    }
    const double nrm = amps_.norm();
    if (std::abs(nrm - 1.0) > tol::renorm_band) {
      throw std::invalid_argument("pure_state: vector is not normalized");
    }
    // Renormalize, but keep already-normalized input bit-stable so that
    // serialization round trips exactly.
    if (std::abs(nrm - 1.0) > 1e-12) amps_ /= nrm;
  }

  // Computational basis state |index>.
  static pure_state basis(int n_qubits, int index) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
    v(index) = 1.0;
    return pure_state(n_qubits, std::move(v));
  }

  // Sparse construction from (basis index, amplitude) terms.
  static pure_state from_terms(int n_qubits,
                               std::initializer_list<std::pair<int, cplx>> terms) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
    for (const auto& [idx, amp] : terms) v(idx) += amp;
    return pure_state(n_qubits, std::move(v));
  }

  int n_qubits() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  cplx amplitude(Eigen::Index i) const { return amps_(i); }

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

// Hermitian, trace-one matrix of a reduced state.
class density_matrix {
 public:
  explicit density_matrix(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 2 ||
        (m_.rows() & (m_.rows() - 1)) != 0) {
      throw std::invalid_argument("density_matrix: dimension must be a power of two");
    }
    const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol::norm) {
      throw std::domain_error("density_matrix: not Hermitian");
    }
    if (std::abs(m_.trace().real() - 1.0) > tol::norm ||
        std::abs(m_.trace().imag()) > tol::norm) {
      throw std::domain_error("density_matrix: trace is not one");
    }
  }

  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

// Single unknown qubit alpha|0> + beta|1>.
struct unknown_qubit {
  cplx alpha;
  cplx beta;

  unknown_qubit(cplx a, cplx b) : alpha(a), beta(b) {
    const double nrm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (std::abs(nrm - 1.0) > tol::renorm_band) {
      throw std::invalid_argument("unknown_qubit: not normalized");
    }
    alpha /= nrm;
    beta /= nrm;
  }
};

inline Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

inline Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

inline Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

inline Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

// Factor-wise product U1 (x) ... (x) Un of single-qubit unitaries.
class local_unitary {
 public:
  explicit local_unitary(std::vector<Eigen::Matrix2cd> factors)
      : factors_(std::move(factors)) {
    for (const auto& u : factors_) {
      const double res = (u.adjoint() * u - Eigen::Matrix2cd::Identity())
                             .cwiseAbs()
                             .maxCoeff();
      if (res > tol::norm) {
        throw std::invalid_argument("local_unitary: factor is not unitary");
      }
    }
  }

  local_unitary(std::initializer_list<Eigen::Matrix2cd> factors)
      : local_unitary(std::vector<Eigen::Matrix2cd>(factors)) {}

  static local_unitary identity(int n_qubits) {
    return local_unitary(
        std::vector<Eigen::Matrix2cd>(n_qubits, Eigen::Matrix2cd::Identity()));
  }

  int n_qubits() const { return static_cast<int>(factors_.size()); }
  const std::vector<Eigen::Matrix2cd>& factors() const { return factors_; }
  const Eigen::Matrix2cd& factor(int qubit) const { return factors_.at(qubit - 1); }

  local_unitary adjoint() const {
    std::vector<Eigen::Matrix2cd> f;
    f.reserve(factors_.size());
    for (const auto& u : factors_) f.push_back(u.adjoint());
    return local_unitary(std::move(f));
  }

 private:
  std::vector<Eigen::Matrix2cd> factors_;
};

// Applies one 2x2 matrix to a given qubit of a raw amplitude vector.
inline void apply_single_qubit(Eigen::VectorXcd& amps, int n_qubits, int qubit,
                               const Eigen::Matrix2cd& u) {
  const Eigen::Index stride = Eigen::Index{1} << (n_qubits - qubit);
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if ((i & stride) == 0) {
      const cplx a0 = amps(i);
      const cplx a1 = amps(i | stride);
      amps(i) = u(0, 0) * a0 + u(0, 1) * a1;
      amps(i | stride) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

inline pure_state apply_local_unitary(const pure_state& state, const local_unitary& lu) {
  if (lu.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("apply_local_unitary: factor count mismatch");
  }
  Eigen::VectorXcd amps = state.amplitudes();
  for (int q = 1; q <= state.n_qubits(); ++q) {
    apply_single_qubit(amps, state.n_qubits(), q, lu.factor(q));
  }
  return pure_state(state.n_qubits(), std::move(amps));
}

// Partial trace over the complement of `keep` (1-based qubit labels).
inline density_matrix reduced_density(const pure_state& state,
                                      const std::vector<int>& keep) {
  const int n = state.n_qubits();
  std::vector<bool> kept(n + 1, false);
  for (int q : keep) {
    if (q < 1 || q > n || kept[q]) {
      throw std::invalid_argument("reduced_density: invalid qubit index set");
    }
    kept[q] = true;
  }
  const int k = static_cast<int>(keep.size());
  if (k == 0 || k == n) {
    throw std::invalid_argument("reduced_density: keep must be a nonempty proper subset");
  }

  // Kept qubits stay in their original relative order (most significant first).
  std::vector<int> kept_qubits, traced_qubits;
  for (int q = 1; q <= n; ++q) (kept[q] ? kept_qubits : traced_qubits).push_back(q);

  const Eigen::Index dk = Eigen::Index{1} << k;
  const Eigen::Index dt = Eigen::Index{1} << (n - k);
  auto full_index = [&](Eigen::Index kept_bits, Eigen::Index traced_bits) {
    Eigen::Index idx = 0;
    for (int j = 0; j < k; ++j) {
      if ((kept_bits >> (k - 1 - j)) & 1) idx |= Eigen::Index{1} << (n - kept_qubits[j]);
    }
    for (int j = 0; j < n - k; ++j) {
      if ((traced_bits >> (n - k - 1 - j)) & 1) {
        idx |= Eigen::Index{1} << (n - traced_qubits[j]);
      }
    }
    return idx;
  };

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      cplx sum = 0;
      for (Eigen::Index t = 0; t < dt; ++t) {
        sum += state.amplitude(full_index(r, t)) *
               std::conj(state.amplitude(full_index(c, t)));
      }
      rho(r, c) = sum;
    }
  }
  return density_matrix(std::move(rho));
}

inline cplx overlap(const pure_state& a, const pure_state& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("overlap: dimension mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());
}

// |<a|b>|^2; equals one exactly when the states agree up to global phase.
inline double fidelity(const pure_state& a, const pure_state& b) {
  return std::norm(overlap(a, b));
}

// min over global phase of ||a - e^{i t} b||, computed on the aligned
// difference vector so nearly-equal inputs do not lose precision.
inline double phase_aligned_distance(const Eigen::VectorXcd& a,
                                     const Eigen::VectorXcd& b) {
  const cplx ip = a.dot(b);
  if (std::abs(ip) == 0.0) {
    return std::sqrt(a.squaredNorm() + b.squaredNorm());
  }
  return (a - (std::conj(ip) / std::abs(ip)) * b).norm();
}

inline double gram_offdiag_max(const std::vector<Eigen::VectorXcd>& vectors) {
  if (vectors.size() < 2) {
    throw std::invalid_argument("gram_offdiag_max: need at least two states");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      worst = std::max(worst, std::abs(vectors[i].dot(vectors[j])));
    }
  }
  return worst;
}

inline double gram_offdiag_max(const std::vector<pure_state>& states) {
  std::vector<Eigen::VectorXcd> vs;
  vs.reserve(states.size());
  for (const auto& s : states) {
    if (s.dim() != states.front().dim()) {
      throw std::invalid_argument("gram_offdiag_max: dimension mismatch");
    }
    vs.push_back(s.amplitudes());
  }
  return gram_offdiag_max(vs);
}

}  // namespace qsuit
