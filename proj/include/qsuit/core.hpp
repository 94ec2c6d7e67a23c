#pragma once

#include <complex>

namespace qsuit {

using cplx = std::complex<double>;

// Tolerance policy for the whole library, sized for double-precision dense
// algebra at dimension <= 4096.
namespace tol {
inline constexpr double norm = 1e-9;         // normalization, unitarity, hermiticity
inline constexpr double eig = 1e-12;         // eigenvalue zero clamp before ln
inline constexpr double inv = 1e-8;          // invariant agreement
inline constexpr double cls = 1e-7;          // zero/nonzero tests in classification
inline constexpr double cond = 1e-9;         // suitability condition residuals
inline constexpr double renorm_band = 1e-6;  // constructors renormalize within this band
}  // namespace tol

inline constexpr int max_qubits = 12;

// Qubit 1 is the most significant bit of the amplitude index, so for n = 3
// the amplitude at index 5 multiplies |101>.
inline int bit_of(int index, int qubit, int n_qubits) {
  return (index >> (n_qubits - qubit)) & 1;
}

}  // namespace qsuit
