#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qsuit/qsuit.hpp"

using namespace qsuit;
using qsuit::testing::cat;
using Catch::Matchers::WithinAbs;

namespace {
const double s2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("measurement basis for the three-qubit protocol") {
  const ptp_basis basis(cat("ghz"));
  // chi+- = (|000> +- |111>)/sqrt(2), sigma+- = (|100> +- |011>)/sqrt(2) over (a,1,2).
  CHECK_THAT(std::abs(basis.vectors()[0](0) - s2), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(basis.vectors()[0](7) - s2), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(basis.vectors()[1](0) - s2), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(basis.vectors()[1](7) + s2), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(basis.vectors()[2](4) - s2), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(basis.vectors()[2](3) - s2), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(basis.vectors()[3](4) - s2), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(basis.vectors()[3](3) + s2), WithinAbs(0.0, 1e-12));

  // Degenerate resource: both chi vectors collapse onto |000>.
  const ptp_basis degenerate(cat("000"));
  CHECK_THAT(std::abs(degenerate.vectors()[0](0) - 1.0), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(degenerate.vectors()[1](0) - 1.0), WithinAbs(0.0, 1e-12));
  std::vector<Eigen::VectorXcd> vs(degenerate.vectors().begin(),
                                   degenerate.vectors().end());
  CHECK_THAT(gram_offdiag_max(vs), WithinAbs(1.0, 1e-12));

  // Teleportation-suitable W slice: orthonormal basis.
  const ptp_basis wn_basis(cat("w-n-1"));
  std::vector<Eigen::VectorXcd> wn(wn_basis.vectors().begin(),
                                   wn_basis.vectors().end());
  CHECK_THAT(gram_offdiag_max(wn), WithinAbs(0.0, 1e-12));
}

TEST_CASE("basis orthogonality matches the closed-form condition") {
  CHECK(ptp_orthogonality(cat("ghz")));
  CHECK_FALSE(ptp_orthogonality(cat("w")));
  CHECK(ptp_orthogonality(cat("a-bc-5-2")));

  rng_stream rng(201);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto psi = random_state(3, rng);
    CHECK(ptp_orthogonality(psi) == check_ptp3(psi).verdict);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto psi = qsuit::testing::isometry_state(rng, 3);
    CHECK(ptp_orthogonality(psi));
    CHECK(check_ptp3(psi).verdict);
  }
}

TEST_CASE("teleportation simulation on suitable and unsuitable resources") {
  const auto basis_state = simulate_ptp(cat("ghz"), unknown_qubit(1.0, 0.0));
  REQUIRE(basis_state.has_value());
  for (const auto& o : *basis_state) {
    CHECK_THAT(o.probability, WithinAbs(0.25, 1e-12));
    CHECK_THAT(o.bob_fidelity, WithinAbs(1.0, 1e-12));
  }

  rng_stream rng(211);
  const auto outcomes = simulate_ptp(cat("ghz"), random_unknown(rng));
  REQUIRE(outcomes.has_value());
  for (const auto& o : *outcomes) {
    CHECK_THAT(o.probability, WithinAbs(0.25, 1e-12));
    CHECK_THAT(o.bob_fidelity, WithinAbs(1.0, 1e-12));
  }

  CHECK_FALSE(simulate_ptp(cat("w"), random_unknown(rng)).has_value());
}

TEST_CASE("every suitable catalog resource teleports perfectly") {
  rng_stream rng(221);
  for (const auto& entry : catalog()) {
    auto it = entry.expected.find(protocol_kind::ptp);
    if (it == entry.expected.end() || !it->second) continue;
    for (int trial = 0; trial < 20; ++trial) {
      const auto outcomes = simulate_ptp(entry.state, random_unknown(rng));
      REQUIRE(outcomes.has_value());
      for (const auto& o : *outcomes) {
        CHECK_THAT(o.probability, WithinAbs(0.25, 1e-9));
        CHECK_THAT(o.bob_fidelity, WithinAbs(1.0, 1e-9));
      }
    }
  }
}

TEST_CASE("coded sets for superdense coding") {
  const auto ghz_set = sdc_coded_set(cat("ghz"), 2);
  REQUIRE(ghz_set.states().size() == 4);
  const auto expect = [&](int idx, const pure_state& want) {
    CHECK_THAT(fidelity(ghz_set.states()[idx], want), WithinAbs(1.0, 1e-12));
  };
  expect(0, pure_state::from_terms(3, {{0, s2}, {7, s2}}));
  expect(1, pure_state::from_terms(3, {{0, s2}, {7, -s2}}));
  expect(2, pure_state::from_terms(3, {{4, s2}, {3, s2}}));
  expect(3, pure_state::from_terms(3, {{4, -s2}, {3, s2}}));

  const auto varpi_set = sdc_coded_set(cat("varpi-plus"), 2);
  CHECK_THAT(fidelity(varpi_set.states()[2],
                      pure_state::from_terms(3, {{7, s2}, {2, s2}})),
             WithinAbs(1.0, 1e-12));
  CHECK_THAT(gram_offdiag_max(varpi_set.states()), WithinAbs(0.0, 1e-12));

  const auto ghz8 = sdc_coded_set(cat("ghz"), 3);
  REQUIRE(ghz8.states().size() == 8);
  CHECK_THAT(gram_offdiag_max(ghz8.states()), WithinAbs(0.0, 1e-12));
}

TEST_CASE("coded-set orthogonality matches the closed-form conditions") {
  CHECK(sdc_orthogonality(cat("ghz"), 3));
  CHECK_FALSE(sdc_orthogonality(cat("c-state"), 3));
  CHECK_FALSE(sdc_orthogonality(cat("w"), 2));

  // The two colliding coded states for the rotated-GHZ witness coincide up
  // to sign.
  const auto set = sdc_coded_set(cat("c-state"), 3);
  CHECK_THAT(std::abs(overlap(set.states()[4], set.states()[7])),
             WithinAbs(1.0, 1e-12));

  rng_stream rng(231);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto psi = random_state(3, rng);
    CHECK(sdc_orthogonality(psi, 2) == check_psdc2(psi).verdict);
    CHECK(sdc_orthogonality(psi, 3) == check_psdc3(psi).verdict);
  }
}

TEST_CASE("superdense coding round trip") {
  CHECK(simulate_sdc(cat("ghz"), "10") == std::string("10"));
  CHECK(simulate_sdc(cat("ghz"), "111") == std::string("111"));
  CHECK_FALSE(simulate_sdc(cat("w"), "01").has_value());
  CHECK_THROWS_AS(simulate_sdc(cat("ghz"), "2x"), std::invalid_argument);
  CHECK_THROWS_AS(simulate_sdc(cat("ghz"), "1"), std::invalid_argument);

  for (const auto& entry : catalog()) {
    auto two = entry.expected.find(protocol_kind::psdc2);
    if (two != entry.expected.end() && two->second) {
      for (const std::string msg : {"00", "01", "10", "11"}) {
        CHECK(simulate_sdc(entry.state, msg) == msg);
      }
    }
    auto three = entry.expected.find(protocol_kind::psdc3);
    if (three != entry.expected.end() && three->second) {
      for (int m = 0; m < 8; ++m) {
        std::string msg = {char('0' + ((m >> 2) & 1)), char('0' + ((m >> 1) & 1)),
                           char('0' + (m & 1))};
        CHECK(simulate_sdc(entry.state, msg) == msg);
      }
    }
  }
}

TEST_CASE("two-qubit teleportation simulation") {
  rng_stream rng(241);
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = random_unknown(rng);
    for (const char* name : {"singlet", "bell", "psi-3-s", "nielsen-ent"}) {
      const auto outcomes = simulate_bennett(cat(name), phi);
      REQUIRE(outcomes.has_value());
      double total = 0.0;
      for (const auto& o : *outcomes) {
        CHECK_THAT(o.bob_fidelity, WithinAbs(1.0, 1e-9));
        total += o.probability;
      }
      CHECK_THAT(total, WithinAbs(1.0, 1e-9));
    }
  }
  CHECK_FALSE(simulate_bennett(pure_state::basis(2, 0), random_unknown(rng)).has_value());
  CHECK_THROWS_AS(simulate_bennett(cat("ghz"), random_unknown(rng)),
                  std::invalid_argument);
}

TEST_CASE("fixed-circuit teleportation works exactly on the Bell pair") {
  rng_stream rng(251);
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = random_unknown(rng);
    for (const auto& o : simulate_nielsen_circuit(cat("bell"), phi)) {
      CHECK_THAT(o.probability, WithinAbs(0.25, 1e-12));
      CHECK_THAT(o.bob_fidelity, WithinAbs(1.0, 1e-12));
    }
  }
}

TEST_CASE("fixed-circuit teleportation fails on a rotated Bell pair") {
  // For the resource (|00> + i|01> + i|10> + |11>)/2 every outcome applies
  // an effective exp(+-i pi X / 4) to the unknown qubit, so each fidelity is
  // (1 + x^2)/2 with x = <phi|X|phi>.
  rng_stream rng(261);
  for (int trial = 0; trial < 50; ++trial) {
    const auto phi = random_unknown(rng);
    const double x = 2.0 * (std::conj(phi.alpha) * phi.beta).real();
    const double expected = 0.5 * (1.0 + x * x);
    double min_fid = 1.0;
    for (const auto& o : simulate_nielsen_circuit(cat("nielsen-ent"), phi)) {
      CHECK_THAT(o.probability, WithinAbs(0.25, 1e-12));
      CHECK_THAT(o.bob_fidelity, WithinAbs(expected, 1e-12));
      min_fid = std::min(min_fid, o.bob_fidelity);
    }
    CHECK(min_fid < 1.0);
  }
}

TEST_CASE("fixed-circuit teleportation cannot use a product resource") {
  // A product resource never entangles Bob's qubit: his corrected state is
  // (|0> + i|1>)/sqrt(2) or its conjugate regardless of the unknown qubit.
  rng_stream rng(271);
  const auto u2 = pure_state::from_terms(1, {{0, s2}, {1, cplx(0, s2)}});
  const auto u2c = pure_state::from_terms(1, {{0, s2}, {1, cplx(0, -s2)}});
  for (int trial = 0; trial < 50; ++trial) {
    const auto phi = random_unknown(rng);
    const auto phi_state =
        pure_state::from_terms(1, {{0, phi.alpha}, {1, phi.beta}});
    const auto outcomes = simulate_nielsen_circuit(cat("nielsen-sep"), phi);
    const std::vector<double> expected = {
        fidelity(phi_state, u2), fidelity(phi_state, u2c),
        fidelity(phi_state, u2c), fidelity(phi_state, u2)};
    double min_fid = 1.0;
    for (const auto& o : outcomes) {
      CHECK_THAT(o.bob_fidelity, WithinAbs(expected[o.outcome_index], 1e-12));
      min_fid = std::min(min_fid, o.bob_fidelity);
    }
    CHECK(min_fid < 1.0 - 1e-3);
  }
}
