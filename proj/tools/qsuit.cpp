// Command line surface for the toolkit: suitability checks, canonical
// decomposition, protocol simulation and the named-state catalog.
//
// Exit codes: 0 = command ran (verdicts are data, not failures),
//             2 = usage or input error,
//             3 = protocol undefined for the given resource.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qsuit/qsuit.hpp"

namespace {

using namespace qsuit;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_undefined = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

pure_state load_state(const std::string& name, const std::string& file) {
  if (name.empty() == file.empty()) {
    throw usage_error("provide exactly one of --name or --file");
  }
  if (!name.empty()) {
    if (!catalog_has(name)) throw usage_error("unknown catalog state '" + name + "'");
    return catalog_find(name).state;
  }
  std::ifstream in(file);
  if (!in) throw usage_error("cannot open state file '" + file + "'");
  try {
    return state_from_json(json::parse(in));
  } catch (const std::exception& e) {
    throw usage_error("malformed state file '" + file + "': " + e.what());
  }
}

protocol_kind parse_protocol(const std::string& token) {
  if (token == "ptp") return protocol_kind::ptp;
  if (token == "ptp-n") return protocol_kind::ptp_n;
  if (token == "bennett") return protocol_kind::bennett;
  if (token == "psdc2") return protocol_kind::psdc2;
  if (token == "psdc3") return protocol_kind::psdc3;
  throw usage_error("unknown protocol '" + token + "'");
}

suitability_report run_check(protocol_kind protocol, const pure_state& state,
                             double eps) {
  switch (protocol) {
    case protocol_kind::ptp: return check_ptp3(state, eps);
    case protocol_kind::ptp_n: return check_ptp_n(state, eps);
    case protocol_kind::bennett: return check_bennett2(state, eps);
    case protocol_kind::psdc2: return check_psdc2(state, eps);
    default: return check_psdc3(state, eps);
  }
}

void print_report(const suitability_report& report, double eps) {
  std::printf("protocol: %s\n", to_string(report.protocol).c_str());
  std::printf("verdict: %s\n", report.verdict ? "suitable" : "not suitable");
  std::printf("residuals:\n");
  for (const auto& [label, value] : report.residuals) {
    std::printf("  %-10s %.3e\n", label.c_str(), value);
  }
  const auto failing = report.failing(eps);
  if (!failing.empty()) {
    std::printf("failing:");
    for (const auto& label : failing) std::printf(" %s", label.c_str());
    std::printf("\n");
  }
}

unknown_qubit resolve_unknown(const std::string& alpha, const std::string& beta,
                              bool random, std::uint64_t seed) {
  if (random || (alpha.empty() && beta.empty())) {
    rng_stream rng(seed);
    return random_unknown(rng);
  }
  auto parse_cplx = [](const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return cplx(std::stod(text), 0.0);
    return cplx(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
  };
  try {
    const cplx a = alpha.empty() ? cplx(0, 0) : parse_cplx(alpha);
    const cplx b = beta.empty() ? cplx(0, 0) : parse_cplx(beta);
    return unknown_qubit(a, b);
  } catch (const std::exception& e) {
    throw usage_error(std::string("bad --alpha/--beta value: ") + e.what());
  }
}

void print_outcomes(const std::vector<teleport_outcome>& outcomes, int trials,
                    std::uint64_t seed) {
  std::printf("%-8s %-12s %-12s", "outcome", "probability", "fidelity");
  if (trials > 0) std::printf(" %-8s", "sampled");
  std::printf("\n");
  std::vector<int> counts(outcomes.size(), 0);
  if (trials > 0) {
    rng_stream rng(mix64(seed) ^ 0x5afeu);
    for (int t = 0; t < trials; ++t) {
      double u = rng.uniform();
      for (std::size_t o = 0; o < outcomes.size(); ++o) {
        u -= outcomes[o].probability;
        if (u <= 0 || o + 1 == outcomes.size()) {
          ++counts[o];
          break;
        }
      }
    }
  }
  for (const auto& o : outcomes) {
    std::printf("%-8d %-12.6f %-12.9f", o.outcome_index, o.probability, o.bob_fidelity);
    if (trials > 0) std::printf(" %-8d", counts[o.outcome_index]);
    std::printf("\n");
  }
}

int cmd_check(const std::string& name, const std::string& file,
              const std::string& protocol_token, double eps, bool json_out) {
  const auto state = load_state(name, file);
  const auto protocol = parse_protocol(protocol_token);
  const auto report = run_check(protocol, state, eps);
  if (json_out) {
    std::cout << report_to_json(report).dump() << "\n";
  } else {
    print_report(report, eps);
  }
  return exit_ok;
}

int cmd_analyze(const std::string& name, const std::string& file, double eps,
                bool json_out) {
  const auto state = load_state(name, file);
  if (state.n_qubits() != 3) throw usage_error("analyze expects a three-qubit state");
  const auto sd = schmidt_decompose(state);
  const auto cls = classify_slocc(state);
  const auto inv = lu_invariants(state);
  const auto ptp = check_ptp3(state, eps);
  const auto sdc2 = check_psdc2(state, eps);
  const auto sdc3 = check_psdc3(state, eps);
  if (json_out) {
    json j{{"class", to_string(cls)},
           {"schmidt", sd_to_json(sd)},
           {"entropies", {inv.entropy1, inv.entropy2, inv.entropy3}},
           {"tangle", inv.tangle},
           {"reports",
            {{"ptp", report_to_json(ptp)},
             {"psdc2", report_to_json(sdc2)},
             {"psdc3", report_to_json(sdc3)}}}};
    std::cout << j.dump() << "\n";
    return exit_ok;
  }
  std::printf("class: %s\n", to_string(cls).c_str());
  std::printf("lambda: [%.9f, %.9f, %.9f, %.9f, %.9f]\n", sd.lambda[0], sd.lambda[1],
              sd.lambda[2], sd.lambda[3], sd.lambda[4]);
  std::printf("phi: %.9f\n", sd.phi);
  std::printf("entropies: S1=%.9f S2=%.9f S3=%.9f\n", inv.entropy1, inv.entropy2,
              inv.entropy3);
  std::printf("tangle: %.9f\n", inv.tangle);
  auto verdict_line = [&](const char* label, const suitability_report& r) {
    std::printf("%-8s %s", label, r.verdict ? "suitable" : "not suitable");
    const auto failing = r.failing(eps);
    if (!failing.empty()) {
      std::printf(" (failing:");
      for (const auto& f : failing) std::printf(" %s", f.c_str());
      std::printf(")");
    }
    std::printf("\n");
  };
  verdict_line("ptp:", ptp);
  verdict_line("psdc2:", sdc2);
  verdict_line("psdc3:", sdc3);
  return exit_ok;
}

int cmd_schmidt(const std::string& name, const std::string& file, bool json_out) {
  const auto state = load_state(name, file);
  if (state.n_qubits() != 3) throw usage_error("schmidt expects a three-qubit state");
  const auto sd = schmidt_decompose(state);
  if (json_out) {
    std::cout << sd_to_json(sd).dump() << "\n";
    return exit_ok;
  }
  std::printf("lambda: [%.12f, %.12f, %.12f, %.12f, %.12f]\n", sd.lambda[0],
              sd.lambda[1], sd.lambda[2], sd.lambda[3], sd.lambda[4]);
  std::printf("phi: %.12f\n", sd.phi);
  for (int q = 1; q <= 3; ++q) {
    const auto& u = sd.unitaries.factor(q);
    std::printf("U%d: [[%+.6f%+.6fi, %+.6f%+.6fi], [%+.6f%+.6fi, %+.6f%+.6fi]]\n", q,
                u(0, 0).real(), u(0, 0).imag(), u(0, 1).real(), u(0, 1).imag(),
                u(1, 0).real(), u(1, 0).imag(), u(1, 1).real(), u(1, 1).imag());
  }
  return exit_ok;
}

int cmd_classify(const std::string& name, const std::string& file, bool json_out) {
  const auto state = load_state(name, file);
  if (state.n_qubits() != 3) throw usage_error("classify expects a three-qubit state");
  const auto cls = classify_slocc(state);
  if (json_out) {
    std::cout << json{{"class", to_string(cls)}}.dump() << "\n";
  } else {
    std::printf("class: %s\n", to_string(cls).c_str());
  }
  return exit_ok;
}

int cmd_invariants(const std::string& name, const std::string& file, bool json_out) {
  const auto state = load_state(name, file);
  if (state.n_qubits() != 3) throw usage_error("invariants expects a three-qubit state");
  const auto inv = lu_invariants(state);
  if (json_out) {
    std::cout << json{{"S1", inv.entropy1},
                      {"S2", inv.entropy2},
                      {"S3", inv.entropy3},
                      {"tangle", inv.tangle}}
                     .dump()
              << "\n";
  } else {
    std::printf("S1: %.9f\nS2: %.9f\nS3: %.9f\ntangle: %.9f\n", inv.entropy1,
                inv.entropy2, inv.entropy3, inv.tangle);
  }
  return exit_ok;
}

int cmd_simulate(const std::string& kind, const std::string& name,
                 const std::string& file, const std::string& alpha,
                 const std::string& beta, bool random_unknown_flag,
                 std::uint64_t seed, int trials, int bits, const std::string& message,
                 double eps, bool json_out) {
  const auto state = load_state(name, file);

  if (kind == "sdc") {
    if (state.n_qubits() != 3) throw usage_error("sdc expects a three-qubit resource");
    std::vector<std::string> messages;
    if (!message.empty()) {
      if (bits != 0 && bits != static_cast<int>(message.size())) {
        throw usage_error("--bits contradicts the --message length");
      }
      messages.push_back(message);
    } else {
      const int width = bits == 0 ? 2 : bits;
      if (width != 2 && width != 3) throw usage_error("--bits must be 2 or 3");
      for (int m = 0; m < (1 << width); ++m) {
        std::string msg;
        for (int b = width - 1; b >= 0; --b) msg.push_back('0' + ((m >> b) & 1));
        messages.push_back(msg);
      }
    }
    json results = json::array();
    for (const auto& msg : messages) {
      const auto decoded = simulate_sdc(state, msg, eps);
      if (!decoded) {
        if (json_out) {
          std::cout << json{{"status", "protocol-undefined"}}.dump() << "\n";
        } else {
          std::printf("status: protocol-undefined (coded set is not orthogonal)\n");
        }
        return exit_undefined;
      }
      results.push_back(json{{"message", msg}, {"decoded", *decoded}});
      if (!json_out) std::printf("message: %s  decoded: %s\n", msg.c_str(), decoded->c_str());
    }
    if (json_out) std::cout << results.dump() << "\n";
    return exit_ok;
  }

  const auto phi = resolve_unknown(alpha, beta, random_unknown_flag, seed);
  std::optional<std::vector<teleport_outcome>> outcomes;
  if (kind == "teleport") {
    if (state.n_qubits() != 3) throw usage_error("teleport expects a three-qubit resource");
    outcomes = simulate_ptp(state, phi, eps);
  } else if (kind == "bennett") {
    if (state.n_qubits() != 2) throw usage_error("bennett expects a two-qubit resource");
    outcomes = simulate_bennett(state, phi, eps);
  } else if (kind == "nielsen") {
    if (state.n_qubits() != 2) throw usage_error("nielsen expects a two-qubit resource");
    outcomes = simulate_nielsen_circuit(state, phi);
  } else {
    throw usage_error("unknown simulation kind '" + kind + "'");
  }
  if (!outcomes) {
    if (json_out) {
      std::cout << json{{"status", "protocol-undefined"}}.dump() << "\n";
    } else {
      std::printf("status: protocol-undefined (measurement basis is not orthonormal)\n");
    }
    return exit_undefined;
  }
  if (json_out) {
    std::cout << outcomes_to_json(*outcomes).dump() << "\n";
  } else {
    print_outcomes(*outcomes, trials, seed);
  }
  return exit_ok;
}

int cmd_lu_test(const std::string& protocol_token, const std::string& name,
                const std::string& file, int trials, std::uint64_t seed, bool witness,
                bool dump_witnesses, bool json_out) {
  if (witness) {
    const auto w = psdc3_counterexample();
    const auto report = check_psdc3(w.unsuitable);
    if (json_out) {
      std::cout << json{{"suitable", state_to_json(w.suitable)},
                        {"unsuitable", state_to_json(w.unsuitable)},
                        {"transform", lu_to_json(w.transform)},
                        {"unsuitable_report", report_to_json(report)}}
                       .dump()
                << "\n";
      return exit_ok;
    }
    std::printf("suitable resource: GHZ (passes psdc3)\n");
    std::printf("transform: Hadamard on qubit 1\n");
    std::printf("rotated resource fails psdc3 on:");
    for (const auto& label : report.failing()) std::printf(" %s", label.c_str());
    std::printf("\n");
    return exit_ok;
  }

  const auto protocol = parse_protocol(protocol_token);
  if (protocol == protocol_kind::ptp_n) {
    throw usage_error("lu-test protocols: ptp, bennett, psdc2, psdc3");
  }
  const auto state = load_state(name, file);
  const auto report = lu_invariance_trial(state, {trials, seed, protocol});
  if (json_out) {
    json j = trial_report_to_json(report);
    if (!dump_witnesses) j.erase("witnesses");
    std::cout << j.dump() << "\n";
    return exit_ok;
  }
  std::printf("trials: %d\nagree: %d\ndisagree: %d\n", report.trials, report.agree,
              report.trials - report.agree);
  if (dump_witnesses) {
    for (const auto& w : report.disagree_witnesses) {
      std::printf("witness: %s\n", lu_to_json(w).dump().c_str());
    }
  }
  return exit_ok;
}

int cmd_matrix(double eps, bool json_out) {
  int mismatches = 0;
  json rows = json::array();
  if (!json_out) {
    std::printf("%-12s %-6s %-6s %-6s %-8s %-8s %-6s\n", "state", "ptp", "psdc2",
                "psdc3", "S1=ln2", "S3=ln2", "class");
  }
  for (const auto& entry : catalog()) {
    if (entry.state.n_qubits() != 3) continue;
    const bool ptp = check_ptp3(entry.state, eps).verdict;
    const bool sdc2 = check_psdc2(entry.state, eps).verdict;
    const bool sdc3 = check_psdc3(entry.state, eps).verdict;
    const bool e1 = entropy_criterion(entry.state, protocol_kind::psdc2, eps);
    const bool e3 = entropy_criterion(entry.state, protocol_kind::ptp, eps);
    const auto cls = classify_slocc(entry.state);
    auto expected = [&](protocol_kind p, bool live) {
      auto it = entry.expected.find(p);
      if (it != entry.expected.end() && it->second != live) ++mismatches;
    };
    expected(protocol_kind::ptp, ptp);
    expected(protocol_kind::psdc2, sdc2);
    expected(protocol_kind::psdc3, sdc3);
    if (json_out) {
      rows.push_back(json{{"name", entry.name},
                          {"ptp", ptp},
                          {"psdc2", sdc2},
                          {"psdc3", sdc3},
                          {"one_ebit_alice", e1},
                          {"one_ebit_bob", e3},
                          {"class", to_string(cls)}});
    } else {
      auto mark = [](bool b) { return b ? "yes" : "-"; };
      std::printf("%-12s %-6s %-6s %-6s %-8s %-8s %-6s\n", entry.name.c_str(),
                  mark(ptp), mark(sdc2), mark(sdc3), mark(e1), mark(e3),
                  to_string(cls).c_str());
    }
  }
  if (json_out) {
    std::cout << json{{"rows", rows}, {"mismatches", mismatches}}.dump() << "\n";
  } else {
    std::printf("%d mismatches against stored expectations\n", mismatches);
  }
  return mismatches == 0 ? exit_ok : 1;
}

int cmd_catalog(bool json_out, const std::string& out_file) {
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw usage_error("cannot write '" + out_file + "'");
    out << catalog_to_json().dump(2) << "\n";
    return exit_ok;
  }
  if (json_out) {
    std::cout << catalog_to_json().dump() << "\n";
    return exit_ok;
  }
  std::printf("%-12s %-3s %s\n", "name", "n", "description");
  for (const auto& entry : catalog()) {
    std::printf("%-12s %-3d %s\n", entry.name.c_str(), entry.state.n_qubits(),
                entry.note.c_str());
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for teleportation and superdense-coding resources"};
  app.require_subcommand(1);

  bool json_out = false;
  double tolerance = tol::cond;
  std::uint64_t seed = 1;
  app.add_flag("--json", json_out, "machine-readable output");
  app.add_option("--tolerance", tolerance, "residual tolerance for verdicts");
  app.add_option("--seed", seed, "root seed for randomized commands");

  std::string name, file, protocol_token, kind, alpha, beta, message, out_file;
  bool random_unknown_flag = false, witness = false, dump_witnesses = false;
  int trials = 0, bits = 0;

  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--name,-n", name, "catalog state name");
    cmd->add_option("--file,-f", file, "state file (json)");
  };

  auto* check = app.add_subcommand("check", "evaluate one suitability condition set");
  check->fallthrough();
  add_source(check);
  check->add_option("--protocol,-p", protocol_token, "ptp | ptp-n | bennett | psdc2 | psdc3")
      ->required();

  auto* analyze = app.add_subcommand("analyze", "full report for a three-qubit state");
  analyze->fallthrough();
  add_source(analyze);

  auto* schmidt = app.add_subcommand("schmidt", "canonical decomposition");
  schmidt->fallthrough();
  add_source(schmidt);

  auto* classify = app.add_subcommand("classify", "entanglement class");
  classify->fallthrough();
  add_source(classify);

  auto* invariants = app.add_subcommand("invariants", "marginal entropies and tangle");
  invariants->fallthrough();
  add_source(invariants);

  auto* simulate = app.add_subcommand("simulate", "run a protocol end to end");
  simulate->fallthrough();
  simulate->add_option("kind", kind, "teleport | sdc | bennett | nielsen")->required();
  add_source(simulate);
  simulate->add_option("--alpha", alpha, "unknown qubit amplitude re[,im]");
  simulate->add_option("--beta", beta, "unknown qubit amplitude re[,im]");
  simulate->add_flag("--random-unknown", random_unknown_flag, "draw the unknown qubit from the seed");
  simulate->add_option("--trials", trials, "also sample outcomes this many times");
  simulate->add_option("--bits", bits, "message width for sdc (2 or 3)");
  simulate->add_option("--message", message, "bit string to encode");

  auto* lu_test = app.add_subcommand("lu-test", "verdict stability under random local unitaries");
  lu_test->fallthrough();
  add_source(lu_test);
  lu_test->add_option("--protocol,-p", protocol_token, "ptp | bennett | psdc2 | psdc3");
  lu_test->add_option("--trials", trials, "number of random rotations")->default_val(100);
  lu_test->add_flag("--witness", witness, "print the explicit psdc3 witness pair");
  lu_test->add_flag("--dump-witnesses", dump_witnesses, "include disagreeing rotations");

  auto* matrix = app.add_subcommand("matrix", "suitability matrix over the catalog");
  matrix->fallthrough();
  auto* catalog_cmd = app.add_subcommand("catalog", "list the named states");
  catalog_cmd->fallthrough();
  catalog_cmd->add_option("-o,--out", out_file, "write the catalog as json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (app.got_subcommand(check)) {
      return cmd_check(name, file, protocol_token, tolerance, json_out);
    }
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(name, file, tolerance, json_out);
    }
    if (app.got_subcommand(schmidt)) return cmd_schmidt(name, file, json_out);
    if (app.got_subcommand(classify)) return cmd_classify(name, file, json_out);
    if (app.got_subcommand(invariants)) return cmd_invariants(name, file, json_out);
    if (app.got_subcommand(simulate)) {
      return cmd_simulate(kind, name, file, alpha, beta, random_unknown_flag, seed,
                          trials, bits, message, tolerance, json_out);
    }
    if (app.got_subcommand(lu_test)) {
      if (!witness && protocol_token.empty()) {
        throw usage_error("lu-test needs --protocol or --witness");
      }
      return cmd_lu_test(protocol_token, name, file, trials, seed, witness,
                         dump_witnesses, json_out);
    }
    if (app.got_subcommand(matrix)) return cmd_matrix(tolerance, json_out);
    if (app.got_subcommand(catalog_cmd)) return cmd_catalog(json_out, out_file);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
