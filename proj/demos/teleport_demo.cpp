// Walkthrough: pick a resource, check it, decompose it, and run both
// protocols on it.

#include <cstdio>

#include "qsuit/qsuit.hpp"

int main() {
  using namespace qsuit;

  const auto& resource = catalog_find("w-n-2").state;
  std::printf("resource: w-n (n=2)\n");

  const auto ptp = check_ptp3(resource);
  std::printf("teleportation: %s\n", ptp.verdict ? "suitable" : "not suitable");

  const auto sd = schmidt_decompose(resource);
  std::printf("canonical lambdas: %.6f %.6f %.6f %.6f %.6f\n", sd.lambda[0],
              sd.lambda[1], sd.lambda[2], sd.lambda[3], sd.lambda[4]);
  std::printf("class: %s\n", to_string(classify_slocc(resource)).c_str());

  rng_stream rng(42);
  const auto phi = random_unknown(rng);
  if (auto outcomes = simulate_ptp(resource, phi)) {
    for (const auto& o : *outcomes) {
      std::printf("outcome %d: probability %.4f, fidelity %.9f\n", o.outcome_index,
                  o.probability, o.bob_fidelity);
    }
  }

  const auto sdc2 = check_psdc2(resource);
  std::printf("2-bit coding: %s\n", sdc2.verdict ? "suitable" : "not suitable");
  for (const auto& [label, value] : sdc2.residuals) {
    std::printf("  %-10s %.3e\n", label.c_str(), value);
  }
  return 0;
}
