#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "qsuit/core.hpp"
#include "qsuit/state.hpp"

namespace qsuit {

// splitmix64; used to derive independent child streams from a root seed so
// that serial and parallel trial runs see identical randomness.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random stream. Gaussian samples are produced by an explicit
// Box-Muller transform so results do not depend on the standard library's
// distribution implementations.
class rng_stream {
 public:
  explicit rng_stream(std::uint64_t seed) : gen_(mix64(seed)) {}

  rng_stream child(std::uint64_t index) const {
    return rng_stream(mix64(seed_base_ ^ mix64(index + 1)));
  }

  double uniform() {  // in (0, 1]
    return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t integer() { return gen_(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  cplx gaussian_cplx() { return cplx(gaussian(), gaussian()); }

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_base_ = gen_();  // distinct per-stream base for child derivation
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Haar-random pure state: normalized vector of complex Gaussians.
inline pure_state random_state(int n_qubits, rng_stream& rng) {
  Eigen::VectorXcd v(Eigen::Index{1} << n_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.gaussian_cplx();
  v /= v.norm();
  return pure_state(n_qubits, std::move(v));
}

inline unknown_qubit random_unknown(rng_stream& rng) {
  cplx a = rng.gaussian_cplx();
  cplx b = rng.gaussian_cplx();
  const double nrm = std::sqrt(std::norm(a) + std::norm(b));
  return unknown_qubit(a / nrm, b / nrm);
}

// Haar-random 2x2 unitary: QR of a complex Gaussian matrix with the phases
// of R's diagonal folded into Q.
inline Eigen::Matrix2cd haar_unitary2(rng_stream& rng) {
  Eigen::Matrix2cd a;
  a << rng.gaussian_cplx(), rng.gaussian_cplx(), rng.gaussian_cplx(),
      rng.gaussian_cplx();
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(a);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) {
    const cplx d = r(i, i);
    q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : cplx(1, 0);
  }
  return q;
}

}  // namespace qsuit
