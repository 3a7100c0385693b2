#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardy/dsl.hpp"
#include "hardy/errors.hpp"
#include "hardy/harness.hpp"
#include "hardy/na_theory.hpp"
#include "hardy/report.hpp"

using namespace hardy;

namespace {

std::uint64_t default_seed() {
  if (const char* s = std::getenv("HARDY_NA_SEED")) return std::stoull(s);
  return 7;
}

void emit(const std::string& out, const ReportEnvelope& env) {
  std::string text = to_json(env).dump(2) + "\n";
  if (out.empty() || out == "-") std::cout << text;
  else write_atomic(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norm attainment of dual truncated Toeplitz operators"};
  app.require_subcommand(1);
  std::string out;
  bool strict = false;
  app.add_option("--out", out, "Report path (default stdout)");
  app.add_flag("--strict", strict, "Exit 3 on an Undecided verdict");
  app.set_version_flag("--version", tool_version());

  std::string symbol, inner = "z";
  int N = 0;
  auto* decide_cmd = app.add_subcommand("decide", "Decide norm attainment of D_phi on K_u^perp");
  decide_cmd->add_option("--symbol", symbol, "Symbol expression")->required();
  decide_cmd->add_option("--inner", inner, "Inner function expression");
  decide_cmd->add_option("--N", N, "Single truncation size for numeric evidence")->check(CLI::PositiveNumber);

  std::string suite_id;
  std::uint64_t seed = default_seed();
  int count = 20, suite_N = 64;
  auto* suite_cmd = app.add_subcommand("suite", "Run a seeded property suite");
  suite_cmd->add_option("id", suite_id, "Suite id")->required();
  suite_cmd->add_option("--seed", seed, "Seed (default HARDY_NA_SEED or 7)");
  suite_cmd->add_option("--count", count, "Number of cases")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--N", suite_N, "Truncation size")->check(CLI::PositiveNumber);

  std::string example_id;
  double a = 0.5, b = -0.3;
  auto* example_cmd = app.add_subcommand("example", "Reproduce a named example");
  example_cmd->add_option("id", example_id, "Example id")->required();
  example_cmd->add_option("--a", a, "Denominator zero for the nontrivial example");
  example_cmd->add_option("--b", b, "Numerator zero for the nontrivial example");
  example_cmd->add_option("--seed", seed, "Seed for randomized parts");

  std::string spec_symbol, spec_inner = "z";
  std::vector<int> N_list{16, 32, 64, 128};
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Top singular values of D_phi over a truncation sweep");
  spectrum_cmd->add_option("--symbol", spec_symbol, "Symbol expression")->required();
  spectrum_cmd->add_option("--inner", spec_inner, "Inner function expression");
  spectrum_cmd->add_option("--N-list", N_list, "Truncation sizes")->delimiter(',')->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*decide_cmd) {
      SymbolSpec phi = evaluate_symbol(parse_symbol(symbol));
      BlaschkeProduct u = evaluate_inner(parse_symbol(inner));
      NumericConfig cfg;
      if (N > 0) cfg.N_values = {N};
      NAReport rep = decide(phi, u, cfg);
      json config = {{"symbol", symbol}, {"inner", inner}, {"N_values", cfg.N_values}, {"eps", cfg.eps}};
      emit(out, make_envelope("decide", config, "na_report", to_json(rep)));
      std::cerr << "verdict: " << to_string(rep.verdict) << "\n";
      return strict && rep.verdict == Verdict::Undecided ? 3 : 0;
    }
    if (*suite_cmd) {
      auto cases = run_suite(suite_id, seed, count, suite_N);
      json payload = json::array();
      int failed = 0;
      for (const auto& c : cases) {
        payload.push_back(to_json(c));
        failed += !c.pass;
      }
      json config = {{"suite", suite_id}, {"seed", seed}, {"count", count}, {"N", suite_N}};
      emit(out, make_envelope("suite", config, "suite_cases", payload));
      std::cerr << "suite " << suite_id << ": " << cases.size() - failed << "/" << cases.size() << " passed\n";
      return failed ? 1 : 0;
    }
    if (*example_cmd) {
      json config = {{"example", example_id}, {"a", a}, {"b", b}, {"seed", seed}};
      ExampleResult r = reproduce_example(example_id, config);
      json payload = {{"summary", to_json(r.summary)}, {"report", r.report}};
      if (r.trace) payload["trace"] = to_json(*r.trace);
      emit(out, make_envelope("example", config, "example", payload));
      std::cerr << "example " << example_id << ": " << (r.summary.pass ? "pass" : "FAIL") << "\n";
      return r.summary.pass ? 0 : 1;
    }
    if (*spectrum_cmd) {
      SymbolSpec phi = evaluate_symbol(parse_symbol(spec_symbol));
      BlaschkeProduct u = evaluate_inner(parse_symbol(spec_inner));
      NAReport rep = decide(phi, u, NumericConfig{N_list});
      ConvergenceTrace tr;
      for (const auto& ev : rep.numeric_evidence) {
        tr.N_values.push_back(ev.N);
        tr.sigma_max.push_back(ev.sigma_max);
        tr.residual.push_back(ev.membership_residual);
      }
      json config = {{"symbol", spec_symbol}, {"inner", spec_inner}, {"N_list", N_list}};
      emit(out, make_envelope("spectrum", config, "convergence_trace", to_json(tr)));
      for (std::size_t k = 0; k < tr.N_values.size(); ++k)
        std::fprintf(stderr, "N=%d sigma_max=%.17g residual=%.3e\n", tr.N_values[k], tr.sigma_max[k], tr.residual[k]);
      return 0;
    }
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const UnknownExample& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
