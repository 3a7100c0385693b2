#pragma once

// Norm-attainment verdicts for dual truncated Toeplitz operators.

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "hardy/inner.hpp"
#include "hardy/operators.hpp"
#include "hardy/symbol.hpp"

namespace hardy {

enum class UnimodularityClass { UnimodularAE, StrictlyLessAE, Mixed };
enum class Verdict { NA_analytic, NA_coanalytic, NA_both, NA_mixed_evidence_only, NotNA, Undecided };

const char* to_string(UnimodularityClass c);
const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct NAWitnessAnalytic {
  BlaschkeProduct psi_plus;
  BlaschkeProduct chi_plus;
  BlaschkeProduct d;
  BlaschkeProduct u1;
  /// u * psi_plus * u1; extremals are generator * H^2.
  BlaschkeProduct extremal_generator;
  /// max over a 4096-point grid of |phi u psi_plus - chi_plus|.
  double identity_residual = 0.0;
};

struct NAWitnessCoanalytic {
  BlaschkeProduct psi_minus;
  BlaschkeProduct chi_minus;
  BlaschkeProduct u1;
  /// Extremals are conj(extremal_generator_conj) * H^2_-.
  BlaschkeProduct extremal_generator_conj;
  /// max over the grid of |phi - u psi_minus conj(chi_minus)|.
  double identity_residual = 0.0;
};

struct YoshinoPair {
  BlaschkeProduct theta1;
  BlaschkeProduct theta2;
  double norm = 1.0;
};

struct NumericEvidence {
  int N = 0;
  double sigma_max = 0.0;
  double membership_residual = 0.0;
};

struct NotNAProof {
  std::string rule;
  double sup_norm = 0.0;
  double min_modulus = 0.0;
};

enum class Side { A, B, Both, None };
const char* to_string(Side s);

struct DirectSumResult {
  bool na = false;
  Side side = Side::None;
};

struct KernelEstimate {
  int dimension = 0;
  int window_dimension = 0;
  std::vector<Eigen::VectorXcd> basis;
  Eigen::VectorXd singular_values;
};

struct NumericConfig {
  std::vector<int> N_values{16, 32, 64};
  double eps = kDefaultEps;
};

struct NAReport {
  Verdict verdict = Verdict::Undecided;
  std::string symbol_class;
  UnimodularityClass unimodularity = UnimodularityClass::Mixed;
  std::optional<NAWitnessAnalytic> analytic;
  std::optional<NAWitnessCoanalytic> coanalytic;
  std::optional<YoshinoPair> yoshino;
  std::optional<BlaschkeProduct> bridge_generator;
  std::optional<NotNAProof> not_na;
  std::vector<NumericEvidence> numeric_evidence;
  std::vector<std::string> notes;
};

UnimodularityClass unimodularity_class(const SymbolSpec& phi);

NAWitnessAnalytic analytic_na(const SymbolSpec& phi, const BlaschkeProduct& u);
NAWitnessCoanalytic coanalytic_na(const SymbolSpec& phi, const BlaschkeProduct& u);

std::optional<YoshinoPair> yoshino_na(const SymbolSpec& phi);
/// Generator u * theta2 of the extremal family u theta2 H^2.
BlaschkeProduct toeplitz_to_dtto_bridge(const BlaschkeProduct& theta1, const BlaschkeProduct& theta2,
                                        const BlaschkeProduct& u);

std::optional<NotNAProof> non_na_rule(const SymbolSpec& phi);

/// Throws std::invalid_argument for negative norms.
DirectSumResult direct_sum_na(double alpha, double beta, bool na_A, bool na_B);

/// Kernel of h -> P_K(phi u h) on the H^2 window 0..N.
KernelEstimate kernel_Mplus(const SymbolSpec& phi, const BlaschkeProduct& u, int N, double tol = 1e-8);
/// Kernel of g -> P_K(phi g) on the H^2_- window -N..-1.
KernelEstimate kernel_Mminus(const SymbolSpec& phi, const BlaschkeProduct& u, int N, double tol = 1e-8);

/// ||P_K(phi v)|| / (||phi||_inf ||v||); zero exactly when phi v lies in K_u^perp.
double membership_residual(const FourierVector& phi, double phi_sup, const ModelSpace& K, const FourierVector& v);

/// Subarcs used for an arc symbol: the longest arc of E split in half.
std::pair<ArcSet, ArcSet> split_arc_symbol(const ArcSet& E);
/// Laurent section on [-N, N] of chi_E1 - (m(E1) / m(E2)) chi_E2.
FourierVector arc_extremal_section(const ArcSet& E1, const ArcSet& E2, int N);
/// ||D_phi h_N - h_N|| / ||h_N|| for phi = chi_E, u = z.
double arc_extremal_residual(const ArcSet& E, const ArcSet& E1, const ArcSet& E2, int N);

NAReport decide(const SymbolSpec& phi, const BlaschkeProduct& u, const NumericConfig& cfg = {});

}  // namespace hardy
