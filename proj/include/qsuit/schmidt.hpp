#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsuit/core.hpp"
#include "qsuit/measures.hpp"
#include "qsuit/state.hpp"

namespace qsuit {

enum class slocc_class { ghz, w, a_bc, b_ac, c_ab, a_b_c };

inline std::string to_string(slocc_class c) {
  switch (c) {
    case slocc_class::ghz: return "GHZ";
    case slocc_class::w: return "W";
    case slocc_class::a_bc: return "A-BC";
    case slocc_class::b_ac: return "B-AC";
    case slocc_class::c_ab: return "C-AB";
    default: return "A-B-C";
  }
}

// Five-term canonical form of a three-qubit state,
//   lambda0|000> + lambda1 e^{i phi}|100> + lambda2|101> + lambda3|110> + lambda4|111>,
// together with the local unitaries that map the original state onto it.
struct schmidt_decomposition {
  std::array<double, 5> lambda;
  double phi;  // in [0, 2*pi)
  local_unitary unitaries;

  schmidt_decomposition(std::array<double, 5> l, double p, local_unitary u)
      : lambda(l), phi(p), unitaries(std::move(u)) {
    double sq = 0.0;
    for (double v : lambda) {
      if (v < -tol::norm) throw std::invalid_argument("schmidt_decomposition: negative lambda");
      sq += v * v;
    }
    if (std::abs(sq - 1.0) > tol::renorm_band) {
      throw std::invalid_argument("schmidt_decomposition: lambdas are not normalized");
    }
    const double s = std::sqrt(sq);
    for (double& v : lambda) v = std::max(0.0, v) / s;
    phi = std::fmod(phi, 2.0 * std::numbers::pi);
    if (phi < 0) phi += 2.0 * std::numbers::pi;
  }

  // The canonical-form vector itself.
  pure_state sd_state() const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v(0) = lambda[0];
    v(4) = lambda[1] * std::exp(cplx(0, phi));
    v(5) = lambda[2];
    v(6) = lambda[3];
    v(7) = lambda[4];
    return pure_state(3, std::move(v));
  }
};

namespace detail {

struct sd_candidate {
  schmidt_decomposition sd;
  double error;
};

inline Eigen::Matrix2cd slice(const Eigen::VectorXcd& c, int i) {
  Eigen::Matrix2cd t;
  t << c(4 * i), c(4 * i + 1), c(4 * i + 2), c(4 * i + 3);
  return t;
}

// det(x*T0 + T1) is quadratic in x: det(T0) x^2 + mixed x + det(T1).
inline cplx det_mixed(const Eigen::Matrix2cd& t0, const Eigen::Matrix2cd& t1) {
  return t0(0, 0) * t1(1, 1) + t0(1, 1) * t1(0, 0) - t0(0, 1) * t1(1, 0) -
         t0(1, 0) * t1(0, 1);
}

inline double wrap_phase(double p) {
  p = std::fmod(p, 2.0 * std::numbers::pi);
  if (p < 0) p += 2.0 * std::numbers::pi;
  return p;
}

// Completes the decomposition for a fixed first-qubit rotation.
inline sd_candidate decompose_with_u1(const pure_state& state,
                                      const Eigen::Matrix2cd& u1) {
  constexpr double present = 1e-13;
  const auto& c = state.amplitudes();
  const Eigen::Matrix2cd t0 = slice(c, 0);
  const Eigen::Matrix2cd t1 = slice(c, 1);

  const Eigen::Matrix2cd m0 = u1(0, 0) * t0 + u1(0, 1) * t1;  // singular by choice of u1
  const Eigen::Matrix2cd m1 = u1(1, 0) * t0 + u1(1, 1) * t1;

  // When the singular slice vanishes entirely the second slice carries all
  // the weight; its own SVD then fixes the remaining freedom.
  const bool degenerate = m0.norm() < 1e-12;
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(degenerate ? m1 : m0,
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2cd u2 = svd.matrixU().adjoint();
  Eigen::Matrix2cd u3 = svd.matrixV().transpose();

  const Eigen::Matrix2cd d0 = u2 * m0 * u3.transpose();
  const Eigen::Matrix2cd d1 = u2 * m1 * u3.transpose();

  const cplx mu1 = d1(0, 0), mu2 = d1(0, 1), mu3 = d1(1, 0), mu4 = d1(1, 1);
  const bool p2 = std::abs(mu2) > present;
  const bool p3 = std::abs(mu3) > present;
  const bool p4 = std::abs(mu4) > present;
  const double a2 = std::arg(mu2), a3 = std::arg(mu3), a4 = std::arg(mu4);

  // Row/column phases: entries |101>, |110>, |111> become real nonnegative
  // and the leftover phase sits on the |100> term.
  double alpha1 = 0.0, beta1 = 0.0, gamma1 = 0.0;
  if (p2 && p3 && p4) {
    gamma1 = a3 - a4;
    alpha1 = a4 - a2 - a3;
    beta1 = a2 - a4;
  } else if (p3 && p4) {
    beta1 = -a3;
    gamma1 = a3 - a4;
  } else if (p2 && p4) {
    gamma1 = -a2;
    beta1 = a2 - a4;
  } else if (p2 && p3) {
    gamma1 = -a2;
    beta1 = -a3;
  } else if (p2) {
    gamma1 = -a2;
  } else if (p3) {
    beta1 = -a3;
  } else if (p4) {
    gamma1 = -a4;
  }
  const double alpha0 = -std::arg(d0(0, 0) == cplx(0, 0) ? cplx(1, 0) : d0(0, 0));

  std::array<double, 5> lambda = {std::abs(d0(0, 0)), std::abs(mu1), std::abs(mu2),
                                  std::abs(mu3), std::abs(mu4)};
  const double phi =
      lambda[1] > present ? wrap_phase(std::arg(mu1) + alpha1) : 0.0;

  auto phase_diag = [](double a, double b) {
    Eigen::Matrix2cd p = Eigen::Matrix2cd::Zero();
    p(0, 0) = std::exp(cplx(0, a));
    p(1, 1) = std::exp(cplx(0, b));
    return p;
  };
  local_unitary total({phase_diag(alpha0, alpha1) * u1, phase_diag(0.0, beta1) * u2,
                       phase_diag(0.0, gamma1) * u3});

  double sq = 0.0;
  for (double v : lambda) sq += v * v;
  const double scale = std::sqrt(sq);
  for (double& v : lambda) v /= scale;

  schmidt_decomposition sd(lambda, phi, total);
  const double err = phase_aligned_distance(
      apply_local_unitary(state, total).amplitudes(), sd.sd_state().amplitudes());
  return {std::move(sd), err};
}

}  // namespace detail

// Canonical Schmidt form of an arbitrary three-qubit state. The first
// unitary is found by making one 2x2 slice of the amplitude tensor singular
// (a quadratic in the rotation ratio); the slice's SVD then yields the other
// two unitaries, and leftover phases are absorbed so that exactly one phase
// survives. Candidate roots are ranked by reconstruction error.
inline schmidt_decomposition schmidt_decompose(const pure_state& state) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument("schmidt_decompose: state must have three qubits");
  }
  const auto& c = state.amplitudes();
  const Eigen::Matrix2cd t0 = detail::slice(c, 0);
  const Eigen::Matrix2cd t1 = detail::slice(c, 1);
  const cplx a = t0.determinant();
  const cplx b = detail::det_mixed(t0, t1);
  const cplx d = t1.determinant();
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(d)});

  std::vector<Eigen::Matrix2cd> candidates;
  if (std::abs(a) <= 1e-12 * std::max(scale, 1e-300)) {
    candidates.push_back(Eigen::Matrix2cd::Identity());
  }
  if (std::abs(d) <= 1e-12 * std::max(scale, 1e-300)) {
    candidates.push_back(pauli_x());
  }
  if (std::abs(a) > 0 && scale > 0) {
    // Stable quadratic roots for a x^2 + b x + d = 0.
    const cplx sq = std::sqrt(b * b - 4.0 * a * d);
    const cplx q = (std::abs(b + sq) >= std::abs(b - sq)) ? -0.5 * (b + sq)
                                                          : -0.5 * (b - sq);
    std::vector<cplx> roots;
    if (std::abs(q) > 0) {
      roots.push_back(q / a);
      roots.push_back(d / q);
    }
    // A vanishing discriminant (tangle-free states) makes the split roots
    // noisy; the exact double root is a better candidate there.
    roots.push_back(-b / (2.0 * a));
    for (const cplx& x : roots) {
      const double nrm = std::sqrt(std::norm(x) + 1.0);
      const cplx u00 = x / nrm, u01 = 1.0 / nrm;
      Eigen::Matrix2cd u;
      u << u00, u01, -std::conj(u01), std::conj(u00);
      candidates.push_back(u);
    }
  }
  if (candidates.empty()) candidates.push_back(Eigen::Matrix2cd::Identity());

  std::optional<detail::sd_candidate> best;
  for (const auto& u1 : candidates) {
    auto cand = detail::decompose_with_u1(state, u1);
    if (!best || cand.error < best->error) best = std::move(cand);
  }
  return best->sd;
}

// Class of a state already in canonical form, by its zero pattern.
inline slocc_class sd_class_of(const schmidt_decomposition& sd,
                               double eps = tol::cls) {
  const auto& l = sd.lambda;
  const bool nz0 = l[0] > eps, nz2 = l[2] > eps, nz3 = l[3] > eps, nz4 = l[4] > eps;
  if (nz0 && nz4) return slocc_class::ghz;
  if (!nz4 && nz0 && nz2 && nz3) return slocc_class::w;
  if (!nz0) {
    const cplx ent = l[1] * l[4] * std::exp(cplx(0, sd.phi)) - l[2] * l[3];
    if (std::abs(ent) > eps) return slocc_class::a_bc;
  }
  if (!nz3 && !nz4 && nz0 && nz2) return slocc_class::b_ac;
  if (!nz2 && !nz4 && nz0 && nz3) return slocc_class::c_ab;
  return slocc_class::a_b_c;
}

namespace detail {

inline bool reduced_is_pure(const pure_state& state, int qubit, double eps) {
  const Eigen::Matrix2cd rho = reduced_density(state, {qubit}).matrix();
  const double det = std::max(0.0, rho.determinant().real());
  const double min_eig = 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 4.0 * det)));
  return min_eig <= eps;
}

}  // namespace detail

// Class of an arbitrary three-qubit state: nonzero tangle means GHZ; else
// the pattern of pure single-qubit marginals separates the remaining five.
inline slocc_class classify_slocc(const pure_state& state, double eps = tol::cls) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument("classify_slocc: state must have three qubits");
  }
  if (three_tangle(state) > eps) return slocc_class::ghz;
  const bool pure1 = detail::reduced_is_pure(state, 1, eps);
  const bool pure2 = detail::reduced_is_pure(state, 2, eps);
  const bool pure3 = detail::reduced_is_pure(state, 3, eps);
  const int pure_count = int(pure1) + int(pure2) + int(pure3);
  if (pure_count == 0) return slocc_class::w;
  if (pure_count == 1) {
    if (pure1) return slocc_class::a_bc;
    if (pure2) return slocc_class::b_ac;
    return slocc_class::c_ab;
  }
  return slocc_class::a_b_c;
}

}  // namespace qsuit
