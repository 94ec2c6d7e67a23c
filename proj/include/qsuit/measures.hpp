#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "qsuit/core.hpp"
#include "qsuit/state.hpp"

namespace qsuit {

// S(rho) = -sum eta_i ln eta_i in nats, with 0 ln 0 = 0.
inline double von_neumann_entropy(const density_matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::domain_error("von_neumann_entropy: eigensolver failed");
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    double eta = solver.eigenvalues()(i);
    if (eta < -tol::norm) {
      throw std::domain_error("von_neumann_entropy: negative eigenvalue beyond tolerance");
    }
    if (eta < tol::eig) continue;  // treated as an exact zero
    s -= eta * std::log(eta);
  }
  return std::max(0.0, s);
}

// Two-qubit pure-state concurrence 2|c0 c3 - c1 c2|.
inline double concurrence2(const pure_state& state) {
  if (state.n_qubits() != 2) {
    throw std::invalid_argument("concurrence2: state must have two qubits");
  }
  const auto& c = state.amplitudes();
  return 2.0 * std::abs(c(0) * c(3) - c(1) * c(2));
}

namespace detail {

// The three equivalent degree-4 forms of the 3-tangle.
inline double tangle_version(const Eigen::VectorXcd& c, int version) {
  cplx square, prod;
  switch (version) {
    case 0:
      square = c(0) * c(7) - c(1) * c(6) + c(2) * c(5) - c(3) * c(4);
      prod = (c(1) * c(4) - c(0) * c(5)) * (c(3) * c(6) - c(2) * c(7));
      break;
    case 1:
      square = c(0) * c(7) + c(1) * c(6) - c(2) * c(5) - c(3) * c(4);
      prod = (c(2) * c(4) - c(0) * c(6)) * (c(3) * c(5) - c(1) * c(7));
      break;
    default:
      square = c(0) * c(7) - c(1) * c(6) - c(2) * c(5) + c(3) * c(4);
      prod = (c(0) * c(3) - c(1) * c(2)) * (c(4) * c(7) - c(5) * c(6));
      break;
  }
  return 4.0 * std::abs(square * square - 4.0 * prod);
}

}  // namespace detail

// Genuine tripartite entanglement of a three-qubit pure state. All three
// algebraic versions are evaluated and must agree.
inline double three_tangle(const pure_state& state) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument("three_tangle: state must have three qubits");
  }
  const auto& c = state.amplitudes();
  const double t0 = detail::tangle_version(c, 0);
  const double t1 = detail::tangle_version(c, 1);
  const double t2 = detail::tangle_version(c, 2);
  if (std::abs(t0 - t1) > tol::inv || std::abs(t0 - t2) > tol::inv) {
    throw std::runtime_error("three_tangle: internal consistency failure");
  }
  return t0;
}

}  // namespace qsuit
