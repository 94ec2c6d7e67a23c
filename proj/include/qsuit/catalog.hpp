#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsuit/core.hpp"
#include "qsuit/state.hpp"
#include "qsuit/suitability.hpp"

namespace qsuit {

// A named resource state with the verdicts it is expected to produce. The
// expected values are fixed data; the test suite checks them against the
// live checkers.
struct catalog_entry {
  std::string name;
  std::string label;
  std::string note;
  pure_state state;
  std::map<protocol_kind, bool> expected;
};

namespace detail {

inline std::vector<catalog_entry> build_catalog() {
  using pk = protocol_kind;
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s3 = 1.0 / std::sqrt(3.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  const double s8 = 0.5 * s2;
  const cplx i(0, 1);
  std::vector<catalog_entry> entries;

  auto add3 = [&](std::string name, std::string label, std::string note,
                  pure_state st, bool ptp, bool psdc2, bool psdc3) {
    entries.push_back({std::move(name),
                       std::move(label),
                       std::move(note),
                       std::move(st),
                       {{pk::ptp, ptp}, {pk::psdc2, psdc2}, {pk::psdc3, psdc3}}});
  };
  auto add2 = [&](std::string name, std::string label, std::string note,
                  pure_state st, bool bennett) {
    entries.push_back({std::move(name),
                       std::move(label),
                       std::move(note),
                       std::move(st),
                       {{pk::bennett, bennett}}});
  };

  add3("ghz", "GHZ", "all three marginals maximally mixed; the unique canonical form passing the 3-bit coding conditions",
       pure_state::from_terms(3, {{0, s2}, {7, s2}}), true, true, true);
  add3("w", "W", "marginals mixed but not maximally; fails the weight-balance condition of every protocol",
       pure_state::from_terms(3, {{1, s3}, {2, s3}, {4, s3}}), false, false, false);

  auto w_n = [&](int n) {
    const double k = 1.0 / (std::sqrt(2.0) * std::sqrt(n + 1.0));
    return pure_state::from_terms(3, {{4, k},
                                      {2, std::sqrt(double(n)) * k},
                                      {1, std::sqrt(n + 1.0) * k}});
  };
  add3("w-n-1", "w-n (n=1)", "teleportation-suitable slice of the W class",
       w_n(1), true, false, false);
  add3("w-n-2", "w-n (n=2)", "teleportation-suitable slice of the W class",
       w_n(2), true, false, false);

  add3("g-state", "|G>", "four-term GHZ-class state; suitable for teleportation and 2-bit coding",
       pure_state::from_terms(3, {{0, 0.5}, {2, 0.5}, {5, 0.5}, {7, -0.5}}),
       true, true, false);
  add3("graph-1", "graph state 1", "stabilizer state; fails 3-bit coding on the a1 condition",
       pure_state(3, (Eigen::VectorXcd(8) << s8, s8, s8, -s8, s8, s8, -s8, s8).finished()),
       true, true, false);
  add3("graph-2", "graph state 2", "stabilizer state; fails 3-bit coding on the t1 condition",
       pure_state(3, (Eigen::VectorXcd(8) << s8, s8, s8, -s8, s8, -s8, -s8, -s8).finished()),
       true, true, false);
  add3("c-state", "|C>", "Hadamard rotation of GHZ; the 3-bit coding witness (fails a1)",
       pure_state::from_terms(3, {{0, 0.5}, {3, 0.5}, {4, 0.5}, {7, -0.5}}),
       true, true, false);
  add3("eta1-plus", "|eta1+>", "W-like 2-bit coding demonstration state",
       pure_state::from_terms(3, {{2, 0.5}, {1, 0.5}, {4, s2}}), false, true, false);
  add3("varpi-plus", "|varpi+>", "separable state suitable for teleportation and 2-bit coding",
       pure_state::from_terms(3, {{3, s2}, {6, s2}}), true, true, false);
  add3("phi-w", "|Phi>", "entangled six-term state with vanishing 3-tangle (W class)",
       pure_state(3, (Eigen::VectorXcd(8) << s6, 0, s6, 0, s6, s6, -s6, s6).finished()),
       false, false, false);

  add3("kappa-1", "|kappa1>", "local rotation of GHZ passing the 3-bit coding conditions",
       pure_state::from_terms(3, {{2, 0.5}, {3, 0.5}, {4, 0.5}, {5, -0.5}}),
       true, true, true);
  add3("kappa-2", "|kappa2>", "local rotation of GHZ passing the 3-bit coding conditions",
       pure_state::from_terms(3, {{2, s2}, {5, s2}}), true, true, true);
  add3("kappa-3", "|kappa3>", "local rotation of GHZ passing the 3-bit coding conditions",
       pure_state::from_terms(3, {{3, s2}, {4, s2}}), true, true, true);

  add3("w-pt-sd", "W-class canonical, teleportation slice",
       "canonical W-class form with the qubit-3 marginal maximally mixed",
       pure_state::from_terms(3, {{0, 0.5}, {5, s2}, {6, 0.5}}), true, false, false);
  add3("w-sdc-sd", "W-class canonical, 2-bit coding slice",
       "canonical W-class form with the qubit-1 marginal maximally mixed",
       pure_state::from_terms(3, {{0, s2}, {5, 0.5}, {6, 0.5}}), false, true, false);

  add3("ghz-1-s", "GHZ-class canonical sample 1", "weight-balanced canonical form with both lambda products zero",
       pure_state::from_terms(3, {{0, s2}, {5, 0.5}, {7, 0.5}}), true, true, false);
  add3("ghz-2-s", "GHZ-class canonical sample 2", "weight-balanced canonical form with both lambda products zero",
       pure_state::from_terms(3, {{0, 0.5}, {4, 0.5}, {7, s2}}), true, false, false);
  {
    // Canonical-form instance with phase pi and equal nonzero lambda
    // products: lambda0, lambda3 fixed, the rest solved from the two
    // teleportation constraints.
    const double l0 = 0.1, l3 = 0.4;
    const double l1 = std::sqrt(0.5 - l0 * l0 - l3 * l3);
    const double l4 = std::sqrt(0.5 * l1 * l1 / (l3 * l3 + l1 * l1));
    const double l2 = l3 * l4 / l1;
    add3("ghz-4-s", "GHZ-class canonical sample 3 (phase pi)",
         "five-term canonical form with equal nonzero lambda products and phase pi",
         pure_state::from_terms(3, {{0, l0}, {4, -l1}, {5, l2}, {6, l3}, {7, l4}}),
         true, false, false);
  }

  add3("a-bc-5", "A-BC sample 1", "qubit 1 separable; suitable for teleportation only",
       pure_state::from_terms(3, {{4, s2}, {7, s2}}), true, false, false);
  add3("a-bc-5-2", "A-BC sample 2", "qubit 1 separable; suitable for teleportation only",
       pure_state::from_terms(3, {{5, s2}, {6, s2}}), true, false, false);
  add3("a-bc-6", "A-BC sample 3", "four-term separable-across-A state suitable for teleportation",
       pure_state::from_terms(3, {{4, -0.5}, {5, 0.5}, {6, 0.5}, {7, 0.5}}),
       true, false, false);
  add3("b-ac-s", "B-AC sample", "qubit 2 separable; suitable for teleportation and 2-bit coding",
       pure_state::from_terms(3, {{0, s2}, {5, s2}}), true, true, false);
  add3("c-ab-s", "C-AB sample", "qubit 3 separable; suitable for 2-bit coding only",
       pure_state::from_terms(3, {{0, s2}, {6, s2}}), false, true, false);
  add3("000", "|000>", "product state; no shared entanglement", pure_state::basis(3, 0),
       false, false, false);

  const double pi3 = std::numbers::pi / 3.0;
  add3("f-0", "F0 sample", "two-term 3-bit coding family on |000>,|111>",
       pure_state::from_terms(3, {{0, s2}, {7, s2 * std::exp(i * pi3)}}), true, true, true);
  add3("f-1", "F1 sample", "two-term 3-bit coding family on |001>,|110>",
       pure_state::from_terms(3, {{1, s2}, {6, -s2}}), true, true, true);
  add3("f-2", "F2 sample", "two-term 3-bit coding family on |010>,|101>",
       pure_state::from_terms(3, {{2, s2 * i}, {5, s2}}), true, true, true);
  add3("f-3", "F3 sample", "two-term 3-bit coding family on |011>,|100>",
       pure_state::from_terms(3, {{3, s2}, {4, -s2 * i}}), true, true, true);
  add3("pi-1", "pi1 sample", "four-term 3-bit coding family on |010>,|011>,|100>,|101>",
       pure_state::from_terms(3, {{2, 0.5}, {3, 0.5}, {4, -0.5}, {5, 0.5}}),
       true, true, true);
  add3("pi-2", "pi2 sample", "four-term 3-bit coding family on |000>,|001>,|110>,|111>",
       pure_state::from_terms(3, {{0, 0.5}, {1, 0.5}, {6, 0.5}, {7, -0.5}}),
       true, true, true);
  add3("pi-3", "pi3 sample", "four-term 3-bit coding family on |001>,|010>,|101>,|110>",
       pure_state::from_terms(3, {{1, 0.5}, {2, 0.5}, {5, -0.5 * i}, {6, 0.5 * i}}),
       true, true, true);
  add3("pi-4", "pi4 sample", "four-term 3-bit coding family on |000>,|011>,|100>,|111>",
       pure_state::from_terms(3, {{0, 0.5}, {3, 0.5}, {4, -0.5 * i}, {7, 0.5 * i}}),
       true, true, true);

  add2("bell", "Bell", "maximally entangled two-qubit pair",
       pure_state::from_terms(2, {{0, s2}, {3, s2}}), true);
  add2("singlet", "singlet", "antisymmetric Bell pair",
       pure_state::from_terms(2, {{1, s2}, {2, -s2}}), true);
  add2("psi-2-s", "psi2 sample", "Bell pair with free phases on both terms",
       pure_state::from_terms(2, {{0, s2 * std::exp(i * std::numbers::pi / 6.0)},
                                  {3, s2 * std::exp(-i * std::numbers::pi / 3.0)}}),
       true);
  add2("psi-3-s", "psi3 sample", "four-term maximal-concurrence state (phase sum pi)",
       pure_state::from_terms(2, {{0, -0.5}, {1, 0.5}, {2, 0.5}, {3, 0.5}}), true);
  add2("nielsen-ent", "circuit contrast, entangled",
       "maximally entangled but mismatched with the fixed-basis circuit",
       pure_state(2, (Eigen::VectorXcd(4) << 0.5, 0.5 * i, 0.5 * i, 0.5).finished()),
       true);
  add2("nielsen-sep", "circuit contrast, separable",
       "product state; carries no shared entanglement",
       pure_state(2, (Eigen::VectorXcd(4) << 0.5, 0.5 * i, -0.5 * i, 0.5).finished()),
       false);

  return entries;
}

}  // namespace detail

inline const std::vector<catalog_entry>& catalog() {
  static const std::vector<catalog_entry> entries = detail::build_catalog();
  return entries;
}

inline const catalog_entry& catalog_find(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("catalog: unknown state name '" + name + "'");
}

inline bool catalog_has(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return true;
  }
  return false;
}

}  // namespace qsuit
