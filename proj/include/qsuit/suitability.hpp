#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsuit/core.hpp"
#include "qsuit/measures.hpp"
#include "qsuit/random.hpp"
#include "qsuit/schmidt.hpp"
#include "qsuit/state.hpp"

namespace qsuit {

enum class protocol_kind { ptp, ptp_n, bennett, psdc2, psdc3 };

inline std::string to_string(protocol_kind p) {
  switch (p) {
    case protocol_kind::ptp: return "ptp";
    case protocol_kind::ptp_n: return "ptp-n";
    case protocol_kind::bennett: return "bennett";
    case protocol_kind::psdc2: return "psdc2";
    default: return "psdc3";
  }
}

// Verdict plus the magnitude of violation of every individual condition.
// The verdict is true exactly when all residuals are below the tolerance
// the check ran with.
struct suitability_report {
  protocol_kind protocol;
  bool verdict;
  std::vector<std::pair<std::string, double>> residuals;

  suitability_report(protocol_kind p,
                     std::vector<std::pair<std::string, double>> res, double eps)
      : protocol(p), verdict(true), residuals(std::move(res)) {
    for (const auto& [label, r] : residuals) {
      if (r >= eps) verdict = false;
    }
  }

  double residual(std::string_view label) const {
    for (const auto& [l, r] : residuals) {
      if (l == label) return r;
    }
    throw std::invalid_argument("suitability_report: unknown residual label");
  }

  std::vector<std::string> failing(double eps = tol::cond) const {
    std::vector<std::string> out;
    for (const auto& [l, r] : residuals) {
      if (r >= eps) out.push_back(l);
    }
    return out;
  }
};

// Teleportation with an n-qubit resource, Bob holding the last qubit: the
// even/odd amplitude blocks must carry half the weight each and be
// orthogonal as vectors.
inline suitability_report check_ptp_n(const pure_state& state,
                                      double eps = tol::cond) {
  if (state.n_qubits() < 2) {
    throw std::invalid_argument("check_ptp_n: need at least two qubits");
  }
  const auto& c = state.amplitudes();
  double even_weight = 0.0;
  cplx cross = 0.0;
  for (Eigen::Index i = 0; i < c.size(); i += 2) {
    even_weight += std::norm(c(i));
    cross += c(i) * std::conj(c(i + 1));
  }
  return suitability_report(
      protocol_kind::ptp_n,
      {{"cod-1", std::abs(even_weight - 0.5)}, {"cod-4", std::abs(cross)}}, eps);
}

inline suitability_report check_ptp3(const pure_state& state,
                                     double eps = tol::cond) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument("check_ptp3: state must have three qubits");
  }
  auto rep = check_ptp_n(state, eps);
  rep.protocol = protocol_kind::ptp;
  return rep;
}

// Two-qubit teleportation resource conditions.
inline suitability_report check_bennett2(const pure_state& state,
                                         double eps = tol::cond) {
  if (state.n_qubits() != 2) {
    throw std::invalid_argument("check_bennett2: state must have two qubits");
  }
  const auto& c = state.amplitudes();
  const double w = std::norm(c(0)) + std::norm(c(2));
  const cplx cross = c(0) * std::conj(c(1)) + c(2) * std::conj(c(3));
  return suitability_report(
      protocol_kind::bennett,
      {{"bennett-1", std::abs(w - 0.5)}, {"bennett-2", std::abs(cross)}}, eps);
}

// Superdense coding of two bits: halves of the vector split by Alice's qubit
// must balance and be orthogonal.
inline suitability_report check_psdc2(const pure_state& state,
                                      double eps = tol::cond) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument("check_psdc2: state must have three qubits");
  }
  const auto& c = state.amplitudes();
  double top = 0.0;
  cplx cross = 0.0;
  for (int i = 0; i < 4; ++i) {
    top += std::norm(c(i));
    cross += std::conj(c(i)) * c(i + 4);
  }
  return suitability_report(
      protocol_kind::psdc2,
      {{"1-qubit-1", std::abs(top - 0.5)}, {"1-qubit-2", std::abs(cross)}}, eps);
}

// Superdense coding of three bits: the eight pairwise-orthogonality
// conditions of the coded set, expressed on the amplitudes.
inline suitability_report check_psdc3(const pure_state& state,
                                      double eps = tol::cond) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument("check_psdc3: state must have three qubits");
  }
  const auto& c = state.amplitudes();
  auto ns = [&](int i) { return std::norm(c(i)); };
  const double x3 = std::abs(ns(0) + ns(1) - ns(6) - ns(7));
  const double x4 = std::abs(ns(2) + ns(3) - ns(4) - ns(5));
  const double a1 =
      std::abs((std::conj(c(2)) * c(6) + std::conj(c(3)) * c(7)).real());
  const double a3 = std::abs(std::conj(c(0)) * c(4) + std::conj(c(1)) * c(5) +
                             std::conj(c(2)) * c(6) + std::conj(c(3)) * c(7));
  const double u1 = std::abs(std::conj(c(0)) * c(2) + std::conj(c(1)) * c(3));
  const double u2 = std::abs(std::conj(c(4)) * c(6) + std::conj(c(5)) * c(7));
  const double t1 = std::abs(c(2) * std::conj(c(4)) + c(3) * std::conj(c(5)));
  const double t2 = std::abs(std::conj(c(0)) * c(6) + std::conj(c(1)) * c(7));
  return suitability_report(protocol_kind::psdc3,
                            {{"x3", x3},
                             {"x4", x4},
                             {"a1", a1},
                             {"a3", a3},
                             {"u1", u1},
                             {"u2", u2},
                             {"t1", t1},
                             {"t2", t2}},
                            eps);
}

// Teleportation conditions reduced to the canonical form: the weight split
// must hold, and either both lambda products vanish or they are equal with
// phase pi. The second residual is the distance to the nearer branch.
inline suitability_report check_ptp_sd(const schmidt_decomposition& sd,
                                       double eps = tol::cond) {
  const auto& l = sd.lambda;
  const double split =
      std::max(std::abs(l[0] * l[0] + l[1] * l[1] + l[3] * l[3] - 0.5),
               std::abs(l[2] * l[2] + l[4] * l[4] - 0.5));
  const double p12 = l[1] * l[2];
  const double p34 = l[3] * l[4];
  const double both_zero = std::max(p12, p34);
  const double pi_branch =
      std::max(std::abs(sd.phi - std::numbers::pi), std::abs(p12 - p34));
  return suitability_report(
      protocol_kind::ptp,
      {{"SD-1", split}, {"SD-2|SD-3", std::min(both_zero, pi_branch)}}, eps);
}

// One-ebit criteria: PTP needs a maximally mixed marginal on Bob's qubit 3,
// two-bit superdense coding on Alice's qubit 1.
inline bool entropy_criterion(const pure_state& state, protocol_kind protocol,
                              double eps = tol::cond) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument("entropy_criterion: state must have three qubits");
  }
  int qubit;
  if (protocol == protocol_kind::ptp) {
    qubit = 3;
  } else if (protocol == protocol_kind::psdc2) {
    qubit = 1;
  } else {
    throw std::invalid_argument("entropy_criterion: protocol must be ptp or psdc2");
  }
  const double s = von_neumann_entropy(reduced_density(state, {qubit}));
  return std::abs(s - std::log(2.0)) < eps;
}

enum class bennett_family { psi1, psi2, psi3, none };

inline std::string to_string(bennett_family f) {
  switch (f) {
    case bennett_family::psi1: return "psi1";
    case bennett_family::psi2: return "psi2";
    case bennett_family::psi3: return "psi3";
    default: return "none";
  }
}

// Family label plus extracted parameters:
//   psi1 -> {omega1, omega2}; psi2 -> {omega0, omega3};
//   psi3 -> {k, l, theta0, theta1, theta2, theta3}.
struct bennett_family_result {
  bennett_family family;
  std::vector<double> parameters;
};

inline bennett_family_result classify_bennett_family(const pure_state& state,
                                                     double eps = tol::cond) {
  if (!check_bennett2(state, eps).verdict) {
    return {bennett_family::none, {}};
  }
  const auto& c = state.amplitudes();
  auto phase = [&](int i) { return detail::wrap_phase(std::arg(c(i))); };
  const bool outer = std::abs(c(0)) > tol::cls || std::abs(c(3)) > tol::cls;
  const bool inner = std::abs(c(1)) > tol::cls || std::abs(c(2)) > tol::cls;
  if (!outer) {
    return {bennett_family::psi1, {phase(1), phase(2)}};
  }
  if (!inner) {
    return {bennett_family::psi2, {phase(0), phase(3)}};
  }
  return {bennett_family::psi3,
          {std::abs(c(0)), std::abs(c(1)), phase(0), phase(1), phase(2), phase(3)}};
}

enum class psdc3_family { f0, f1, f2, f3, pi1, pi2, pi3, pi4, none };

inline std::string to_string(psdc3_family f) {
  switch (f) {
    case psdc3_family::f0: return "F0";
    case psdc3_family::f1: return "F1";
    case psdc3_family::f2: return "F2";
    case psdc3_family::f3: return "F3";
    case psdc3_family::pi1: return "pi1";
    case psdc3_family::pi2: return "pi2";
    case psdc3_family::pi3: return "pi3";
    case psdc3_family::pi4: return "pi4";
    default: return "none";
  }
}

// Matches a three-bit-coding-suitable state against the known support
// patterns. States with all eight amplitudes nonzero are never labeled: no
// completeness claim is made there.
inline psdc3_family classify_psdc3_family(const pure_state& state,
                                          double eps = tol::cond) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument("classify_psdc3_family: state must have three qubits");
  }
  if (!check_psdc3(state, eps).verdict) return psdc3_family::none;
  const auto& c = state.amplitudes();
  unsigned support = 0;
  for (int i = 0; i < 8; ++i) {
    if (std::abs(c(i)) > tol::cls) support |= 1u << i;
  }
  auto is = [&](std::initializer_list<int> idx) {
    unsigned mask = 0;
    for (int i : idx) mask |= 1u << i;
    return support == mask;
  };
  auto eq = [&](int i, int j) {
    return std::abs(std::abs(c(i)) - std::abs(c(j))) < eps + tol::cls;
  };
  if (is({0, 7})) return psdc3_family::f0;
  if (is({1, 6})) return psdc3_family::f1;
  if (is({2, 5})) return psdc3_family::f2;
  if (is({3, 4})) return psdc3_family::f3;
  if (is({2, 3, 4, 5}) && eq(2, 5) && eq(3, 4)) return psdc3_family::pi1;
  if (is({0, 1, 6, 7}) && eq(0, 7) && eq(1, 6)) return psdc3_family::pi2;
  if (is({1, 2, 5, 6}) && eq(2, 5) && eq(1, 6)) return psdc3_family::pi3;
  if (is({0, 3, 4, 7}) && eq(0, 7) && eq(3, 4)) return psdc3_family::pi4;
  return psdc3_family::none;
}

// Draws a random member of one of the eight families. Constructions follow
// the defining constraints directly, so every sample passes check_psdc3.
inline pure_state sample_psdc3_family(psdc3_family family, std::uint64_t seed) {
  rng_stream rng(seed);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto two_kets = [&](int i, int j) {
    const double pa = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double pb = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return pure_state::from_terms(3, {{i, inv_sqrt2 * std::exp(cplx(0, pa))},
                                      {j, inv_sqrt2 * std::exp(cplx(0, pb))}});
  };
  // Moduli pair (r1, r2) with r1^2 + r2^2 = 1/2, both bounded away from zero.
  const double t = rng.uniform(0.3, std::numbers::pi / 2.0 - 0.3);
  const double r1 = std::cos(t) * inv_sqrt2;
  const double r2 = std::sin(t) * inv_sqrt2;
  const double pa = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double pb = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double pc = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double sign = (rng.integer() & 1) ? 1.0 : -1.0;
  const double half_pi = std::numbers::pi / 2.0;
  auto amp = [](double r, double p) { return r * std::exp(cplx(0, p)); };

  switch (family) {
    case psdc3_family::f0: return two_kets(0, 7);
    case psdc3_family::f1: return two_kets(1, 6);
    case psdc3_family::f2: return two_kets(2, 5);
    case psdc3_family::f3: return two_kets(3, 4);
    case psdc3_family::pi1:
      // |c2| = |c5|, |c3| = |c4|, and c2/c3 = -conj(c5)/conj(c4).
      return pure_state::from_terms(3, {{2, amp(r1, pa)},
                                        {3, amp(r2, pb)},
                                        {4, amp(r2, pc)},
                                        {5, amp(r1, pb - pa + pc + std::numbers::pi)}});
    case psdc3_family::pi2:
      // |c0| = |c7|, |c1| = |c6|, and c6/c7 = -conj(c1)/conj(c0).
      return pure_state::from_terms(3, {{0, amp(r1, pa)},
                                        {1, amp(r2, pb)},
                                        {6, amp(r2, pa + pc - pb + std::numbers::pi)},
                                        {7, amp(r1, pc)}});
    case psdc3_family::pi3:
      // Re(conj(c2) c6) = 0 and conj(c1) c5 + conj(c2) c6 = 0.
      return pure_state::from_terms(3, {{1, amp(r1, pa)},
                                        {2, amp(r2, pb)},
                                        {5, amp(r2, pa - sign * half_pi)},
                                        {6, amp(r1, pb + sign * half_pi)}});
    case psdc3_family::pi4:
      // Re(conj(c3) c7) = 0 and conj(c0) c4 + conj(c3) c7 = 0.
      return pure_state::from_terms(
          3, {{0, amp(r1, pa)},
              {3, amp(r2, pb)},
              {4, amp(r2, pa + sign * half_pi + std::numbers::pi)},
              {7, amp(r1, pb + sign * half_pi)}});
    default:
      throw std::invalid_argument("sample_psdc3_family: family must not be none");
  }
}

}  // namespace qsuit
