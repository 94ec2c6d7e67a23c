#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qsuit/qsuit.hpp"

using namespace qsuit;
using qsuit::testing::cat;
using Catch::Matchers::WithinAbs;

namespace {

// Reconstruction error: transform the input with the returned unitaries and
// compare against the canonical vector, up to global phase.
double roundtrip_error(const pure_state& psi, const schmidt_decomposition& sd) {
  return phase_aligned_distance(apply_local_unitary(psi, sd.unitaries).amplitudes(),
                                sd.sd_state().amplitudes());
}

}  // namespace

TEST_CASE("closed form for single-excitation states") {
  // gamma|001> + beta|010> + alpha|100> decomposes to (|alpha|, 0, |gamma|, |beta|, 0).
  const cplx alpha = 0.6 * std::exp(cplx(0, 0.3));
  const cplx beta = 0.48 * std::exp(cplx(0, -1.1));
  const cplx gamma = 0.64 * std::exp(cplx(0, 2.2));
  const auto psi = pure_state::from_terms(3, {{1, gamma}, {2, beta}, {4, alpha}});
  const auto sd = schmidt_decompose(psi);
  CHECK_THAT(sd.lambda[0], WithinAbs(0.6, 1e-9));
  CHECK_THAT(sd.lambda[1], WithinAbs(0.0, 1e-9));
  CHECK_THAT(sd.lambda[2], WithinAbs(0.64, 1e-9));
  CHECK_THAT(sd.lambda[3], WithinAbs(0.48, 1e-9));
  CHECK_THAT(sd.lambda[4], WithinAbs(0.0, 1e-9));
  CHECK(roundtrip_error(psi, sd) < 1e-9);
}

TEST_CASE("canonical form of W") {
  const auto sd = schmidt_decompose(cat("w"));
  const double s3 = 1.0 / std::sqrt(3.0);
  CHECK_THAT(sd.lambda[0], WithinAbs(s3, 1e-9));
  CHECK_THAT(sd.lambda[1], WithinAbs(0.0, 1e-9));
  CHECK_THAT(sd.lambda[2], WithinAbs(s3, 1e-9));
  CHECK_THAT(sd.lambda[3], WithinAbs(s3, 1e-9));
  CHECK_THAT(sd.lambda[4], WithinAbs(0.0, 1e-9));
}

TEST_CASE("canonical form of GHZ") {
  const auto sd = schmidt_decompose(cat("ghz"));
  const double s2 = 1.0 / std::sqrt(2.0);
  CHECK_THAT(sd.lambda[0], WithinAbs(s2, 1e-9));
  CHECK_THAT(sd.lambda[4], WithinAbs(s2, 1e-9));
  CHECK_THAT(sd.lambda[1] + sd.lambda[2] + sd.lambda[3], WithinAbs(0.0, 1e-9));
}

TEST_CASE("canonical form of the teleportation W slice") {
  // 1/(sqrt(2)sqrt(n+1)) (|100> + sqrt(n) e^{ig}|010> + sqrt(n+1) e^{id}|001>)
  const int n = 2;
  const double k = 1.0 / (std::sqrt(2.0) * std::sqrt(n + 1.0));
  const auto psi = pure_state::from_terms(
      3, {{4, k},
          {2, std::sqrt(2.0) * k * std::exp(cplx(0, 0.4))},
          {1, std::sqrt(3.0) * k * std::exp(cplx(0, -0.9))}});
  const auto sd = schmidt_decompose(psi);
  CHECK_THAT(sd.lambda[0], WithinAbs(k, 1e-9));
  CHECK_THAT(sd.lambda[2], WithinAbs(1.0 / std::sqrt(2.0), 1e-9));
  CHECK_THAT(sd.lambda[3], WithinAbs(std::sqrt(2.0) * k, 1e-9));
  CHECK_THAT(sd.lambda[1] + sd.lambda[4], WithinAbs(0.0, 1e-9));
}

TEST_CASE("decomposition invariants on random states") {
  rng_stream rng(61);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto psi = random_state(3, rng);
    const auto sd = schmidt_decompose(psi);

    double sq = 0.0;
    for (double l : sd.lambda) {
      CHECK(l >= 0.0);
      sq += l * l;
    }
    CHECK_THAT(sq, WithinAbs(1.0, tol::norm));
    CHECK(sd.phi >= 0.0);
    CHECK(sd.phi < 2.0 * std::numbers::pi);
    CHECK(roundtrip_error(psi, sd) < tol::inv);

    const auto rebuilt = sd.sd_state();
    for (int q = 1; q <= 3; ++q) {
      const double a = von_neumann_entropy(reduced_density(psi, {q}));
      const double b = von_neumann_entropy(reduced_density(rebuilt, {q}));
      CHECK(std::abs(a - b) < tol::inv);
    }
    CHECK(std::abs(three_tangle(psi) - three_tangle(rebuilt)) < tol::inv);
  }
}

TEST_CASE("decomposition handles separable and low-rank states") {
  rng_stream rng(71);
  const std::vector<slocc_class> classes = {slocc_class::w, slocc_class::a_bc,
                                            slocc_class::b_ac, slocc_class::c_ab,
                                            slocc_class::a_b_c};
  for (auto cls : classes) {
    for (int trial = 0; trial < 100; ++trial) {
      auto psi = qsuit::testing::sd_form_sample(cls, rng);
      psi = apply_local_unitary(psi, random_local_unitary(rng.integer(), 3));
      const auto sd = schmidt_decompose(psi);
      CHECK(roundtrip_error(psi, sd) < tol::inv);
      CHECK(sd_class_of(sd) == cls);
    }
  }
}

TEST_CASE("class of a canonical form follows its zero pattern") {
  const auto id = local_unitary::identity(3);
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s3 = 1.0 / std::sqrt(3.0);
  CHECK(sd_class_of({{s2, 0, 0, 0, s2}, 0.0, id}) == slocc_class::ghz);
  CHECK(sd_class_of({{s3, 0, s3, s3, 0}, 0.0, id}) == slocc_class::w);
  CHECK(sd_class_of({{1, 0, 0, 0, 0}, 0.0, id}) == slocc_class::a_b_c);
  CHECK(sd_class_of({{0, s2, 0, 0, s2}, 0.0, id}) == slocc_class::a_bc);
  CHECK(sd_class_of({{s2, 0, s2, 0, 0}, 0.0, id}) == slocc_class::b_ac);
  CHECK(sd_class_of({{s2, 0, 0, s2, 0}, 0.0, id}) == slocc_class::c_ab);
}

TEST_CASE("direct classification of named states") {
  CHECK(classify_slocc(cat("ghz")) == slocc_class::ghz);
  CHECK(classify_slocc(cat("w")) == slocc_class::w);
  CHECK(classify_slocc(cat("a-bc-5-2")) == slocc_class::a_bc);
  CHECK(classify_slocc(cat("b-ac-s")) == slocc_class::b_ac);
  CHECK(classify_slocc(cat("c-ab-s")) == slocc_class::c_ab);
  CHECK(classify_slocc(cat("000")) == slocc_class::a_b_c);
  CHECK(classify_slocc(cat("phi-w")) == slocc_class::w);
}

TEST_CASE("classification is stable under local unitaries and matches the canonical route") {
  rng_stream rng(81);
  for (int trial = 0; trial < 200; ++trial) {
    const auto psi = random_state(3, rng);
    const auto cls = classify_slocc(psi);
    CHECK(cls == sd_class_of(schmidt_decompose(psi)));
    const auto rotated = apply_local_unitary(psi, random_local_unitary(rng.integer(), 3));
    CHECK(classify_slocc(rotated) == cls);
  }
}

TEST_CASE("returned unitaries are unitary") {
  rng_stream rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sd = schmidt_decompose(random_state(3, rng));
    for (const auto& u : sd.unitaries.factors()) {
      CHECK((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <
            1e-10);
    }
  }
}
