#pragma once

// Seeded property suites and named example reproductions.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "hardy/inner.hpp"
#include "hardy/symbol.hpp"

namespace hardy {

struct SuiteCase {
  std::string suite_id;
  std::uint64_t seed = 0;
  int case_index = 0;
  nlohmann::json params = nlohmann::json::object();
  std::map<std::string, double> residuals;
  std::map<std::string, double> thresholds;
  bool pass = false;

  /// pass recomputed from residuals and thresholds.
  bool recompute_pass() const;
  void check(const std::string& name, double residual, double threshold);
};

struct ConvergenceTrace {
  std::vector<int> N_values;
  std::vector<double> sigma_max;
  std::vector<double> residual;
};

/// Case RNG, seeded from (seed, case index).
std::mt19937_64 case_rng(std::uint64_t seed, int case_index);

/// Degree 1..max_degree, zeros uniform by area in |a| <= rmax.
BlaschkeProduct random_blaschke(std::mt19937_64& rng, int max_degree = 4, double rmax = 0.8);
/// Complex Gaussian coefficients on |n| <= B, scaled to grid sup 1.
FourierVector random_bandlimited(std::mt19937_64& rng, int B);
/// Random Laurent polynomial with Gaussian coefficients on [lo, hi].
FourierVector random_laurent(std::mt19937_64& rng, int lo, int hi);
/// exp(i psi) for a random real trigonometric polynomial psi of degree <= 3.
FourierVector random_unimodular_smooth(std::mt19937_64& rng);

const std::vector<std::string>& suite_ids();

std::vector<SuiteCase> suite_cu(std::uint64_t seed, int count, int N);
std::vector<SuiteCase> suite_block_model(std::uint64_t seed, int count, int N);
std::vector<SuiteCase> suite_algebra(std::uint64_t seed, int count, int N);
std::vector<SuiteCase> suite_quad_identity(std::uint64_t seed, int count, int N);
std::vector<SuiteCase> suite_rotation(std::uint64_t seed, int count, int N);
std::vector<SuiteCase> suite_toeplitz_hankel_system(std::uint64_t seed, int count, int N);
std::vector<SuiteCase> suite_du_always_na(std::uint64_t seed, int count, int N);
std::vector<SuiteCase> suite_symbolic(std::uint64_t seed, int count);
std::vector<SuiteCase> suite_routes(std::uint64_t seed, int count);

/// Dispatch by id; throws UnknownSuite.
std::vector<SuiteCase> run_suite(const std::string& id, std::uint64_t seed, int count, int N);

struct ExampleResult {
  SuiteCase summary;
  nlohmann::json report = nlohmann::json::object();
  std::optional<ConvergenceTrace> trace;
};

const std::vector<std::string>& example_ids();
/// Throws UnknownExample.
ExampleResult reproduce_example(const std::string& id, const nlohmann::json& cfg = nlohmann::json::object());

}  // namespace hardy
