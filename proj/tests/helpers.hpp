#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "qsuit/qsuit.hpp"

namespace qsuit::testing {

inline const pure_state& cat(const std::string& name) {
  return catalog_find(name).state;
}

// Random state with the marginal of one qubit maximally mixed, built by
// embedding a random isometry scaled by 1/sqrt(2). `mixed_qubit` is 1 or 3.
inline pure_state isometry_state(rng_stream& rng, int mixed_qubit) {
  Eigen::MatrixXcd g(4, 2);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 2; ++c) g(r, c) = rng.gaussian_cplx();
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd v = Eigen::MatrixXcd(qr.householderQ()).leftCols(2);
  Eigen::VectorXcd amps(8);
  const double s = 1.0 / std::sqrt(2.0);
  for (int m = 0; m < 4; ++m) {
    for (int k = 0; k < 2; ++k) {
      if (mixed_qubit == 3) {
        amps(2 * m + k) = s * v(m, k);  // qubits (1,2) x qubit 3
      } else {
        amps(4 * k + m) = s * v(m, k);  // qubit 1 x qubits (2,3)
      }
    }
  }
  return pure_state(3, std::move(amps));
}

// Canonical-form samples of the non-GHZ classes, coefficients bounded away
// from zero so class membership is unambiguous.
inline pure_state sd_form_sample(slocc_class cls, rng_stream& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  auto term = [&](double lo, double hi) { return rng.uniform(lo, hi); };
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  switch (cls) {
    case slocc_class::w:
      v(0) = term(0.3, 1.0);
      v(4) = term(0.0, 1.0) * std::exp(cplx(0, term(0.0, two_pi)));
      v(5) = term(0.3, 1.0);
      v(6) = term(0.3, 1.0);
      break;
    case slocc_class::a_bc:
      while (true) {
        v(4) = term(0.3, 1.0) * std::exp(cplx(0, term(0.0, two_pi)));
        v(5) = term(0.3, 1.0);
        v(6) = term(0.3, 1.0);
        v(7) = term(0.3, 1.0);
        if (std::abs(v(4) * v(7) - v(5) * v(6)) > 0.05) break;
      }
      break;
    case slocc_class::b_ac:
      v(0) = term(0.3, 1.0);
      v(4) = term(0.0, 1.0) * std::exp(cplx(0, term(0.0, two_pi)));
      v(5) = term(0.3, 1.0);
      break;
    case slocc_class::c_ab:
      v(0) = term(0.3, 1.0);
      v(4) = term(0.0, 1.0) * std::exp(cplx(0, term(0.0, two_pi)));
      v(6) = term(0.3, 1.0);
      break;
    default:  // fully separable
      v(0) = 1.0;
      break;
  }
  v /= v.norm();
  return pure_state(3, std::move(v));
}

// Random members of the two-qubit maximal-concurrence families.
inline pure_state sample_bennett_family(bennett_family family, rng_stream& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double s = 1.0 / std::sqrt(2.0);
  auto ph = [&] { return std::exp(cplx(0, rng.uniform(0.0, two_pi))); };
  switch (family) {
    case bennett_family::psi1:
      return pure_state::from_terms(2, {{1, s * ph()}, {2, s * ph()}});
    case bennett_family::psi2:
      return pure_state::from_terms(2, {{0, s * ph()}, {3, s * ph()}});
    default: {
      const double t = rng.uniform(0.3, std::numbers::pi / 2.0 - 0.3);
      const double k = std::cos(t) * s;
      const double l = std::sin(t) * s;
      const double t1 = rng.uniform(0.0, two_pi);
      const double t2 = rng.uniform(0.0, two_pi);
      const double t0 = rng.uniform(0.0, two_pi);
      const double sign = (rng.integer() & 1) ? 1.0 : -1.0;
      const double t3 = t1 + t2 - t0 + sign * std::numbers::pi;
      return pure_state::from_terms(2, {{0, k * std::exp(cplx(0, t0))},
                                        {1, l * std::exp(cplx(0, t1))},
                                        {2, l * std::exp(cplx(0, t2))},
                                        {3, k * std::exp(cplx(0, t3))}});
    }
  }
}

}  // namespace qsuit::testing
