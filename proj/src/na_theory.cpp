#include "hardy/na_theory.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr int kWitnessGrid = 4096;
constexpr double kWitnessTol = 1e-10;

double grid_residual(const std::function<cplx(cplx)>& f) {
  double m = 0.0;
  for (int k = 0; k < kWitnessGrid; ++k) m = std::max(m, std::abs(f(std::polar(1.0, kTwoPi * k / kWitnessGrid))));
  return m;
}

bool is_z(const BlaschkeProduct& u) { return u.monomial_power() == 1 && u.zeros().empty(); }

std::string describe(const BlaschkeProduct& B) {
  std::ostringstream os;
  os.precision(6);
  os << "deg " << B.degree() << " (z^" << B.monomial_power();
  for (const auto& z : B.zeros()) os << ", " << z.a << "^" << z.multiplicity;
  os << ")";
  return os.str();
}

KernelEstimate kernel_from(const Eigen::MatrixXcd& A, int cols, double tol) {
  KernelEstimate out;
  out.window_dimension = cols;
  if (A.rows() == 0) {
    out.dimension = cols;
    for (int k = 0; k < cols; ++k) out.basis.push_back(Eigen::VectorXcd::Unit(cols, k));
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
  out.singular_values = svd.singularValues();
  int rank = 0;
  while (rank < out.singular_values.size() && out.singular_values(rank) >= tol) ++rank;
  out.dimension = cols - rank;
  for (int k = rank; k < cols; ++k) out.basis.push_back(svd.matrixV().col(k));
  return out;
}

Eigen::MatrixXcd symbol_columns(const FourierVector& phi, int row_hi, const std::vector<int>& cols) {
  Eigen::MatrixXcd C(row_hi + 1, cols.size());
  for (int p = 0; p <= row_hi; ++p)
    for (std::size_t j = 0; j < cols.size(); ++j) C(p, j) = phi[p - cols[j]];
  return C;
}

FourierVector symbol_coeffs_for(const SymbolSpec& phi, int reach, double eps) {
  return phi.is_arc() ? phi.window(reach, eps) : phi.coefficients(eps);
}

NumericEvidence evidence_at(const FourierVector& phi, double sup, const ModelSpace& K, int N,
                            const std::optional<BlaschkeProduct>& generator) {
  NumericEvidence ev;
  ev.N = N;
  OperatorMatrix blk = dtto_block(phi, K.u_coeffs(), N);
  ExtremalSubspace ex = extremal_space(blk);
  ev.sigma_max = ex.sigma_max;
  FourierVector v;
  if (generator) {
    v = coeffs(*generator, K.eps()).restricted({0, N});
  } else {
    v = block_to_function(ex.basis.front(), K.u_coeffs(), N);
  }
  ev.membership_residual = membership_residual(phi, sup, K, v);
  return ev;
}

}  // namespace

const char* to_string(UnimodularityClass c) {
  switch (c) {
    case UnimodularityClass::UnimodularAE: return "UnimodularAE";
    case UnimodularityClass::StrictlyLessAE: return "StrictlyLessAE";
    case UnimodularityClass::Mixed: return "Mixed";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NA_analytic: return "NA_analytic";
    case Verdict::NA_coanalytic: return "NA_coanalytic";
    case Verdict::NA_both: return "NA_both";
    case Verdict::NA_mixed_evidence_only: return "NA_mixed_evidence_only";
    case Verdict::NotNA: return "NotNA";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::NA_analytic, Verdict::NA_coanalytic, Verdict::NA_both, Verdict::NA_mixed_evidence_only,
                    Verdict::NotNA, Verdict::Undecided})
    if (s == to_string(v)) return v;
  throw std::invalid_argument("unknown verdict: " + s);
}

const char* to_string(Side s) {
  switch (s) {
    case Side::A: return "A";
    case Side::B: return "B";
    case Side::Both: return "both";
    case Side::None: return "none";
  }
  return "?";
}

UnimodularityClass unimodularity_class(const SymbolSpec& phi) {
  if (phi.is_unimodular_rational()) return UnimodularityClass::UnimodularAE;
  if (phi.is_arc()) return phi.arc_data().E.is_full_circle() ? UnimodularityClass::UnimodularAE : UnimodularityClass::Mixed;
  const RationalFunction& f = phi.analytic_data().f;
  const int n = 8192;
  double lo = std::abs(f(1.0));
  for (int k = 0; k < n; ++k) lo = std::min(lo, std::abs(f(std::polar(1.0, kTwoPi * k / n))));
  double sup = rational_sup_norm(f);
  // a rational modulus is either constant or meets its max at finitely many points
  if (sup - lo <= 1e-9 * sup) return UnimodularityClass::UnimodularAE;
  return UnimodularityClass::StrictlyLessAE;
}

NAWitnessAnalytic analytic_na(const SymbolSpec& phi, const BlaschkeProduct& u) {
  if (!phi.is_unimodular_rational()) throw UnsupportedCombination("analytic_na needs a unimodular rational symbol");
  const RationalUnimodular& r = phi.unimodular_data();
  NAWitnessAnalytic w;
  BlaschkeProduct g = gcd(u, r.den);
  w.psi_plus = divide(r.den, g);
  BlaschkeProduct chi = multiply(BlaschkeProduct(1.0, r.num.monomial_power(), r.num.zeros()), divide(u, g));
  w.d = gcd(u, chi);
  w.u1 = divide(u, w.d);
  w.extremal_generator = multiply(multiply(u, w.psi_plus), w.u1);
  auto lhs = [&](cplx z) { return r.c * r.num(z) * std::conj(r.den(z)) * u(z) * w.psi_plus(z); };
  const cplx z0 = std::polar(1.0, 0.7);
  cplx c = lhs(z0) / chi(z0);
  w.chi_plus = chi.with_constant(c / std::abs(c));
  w.identity_residual = grid_residual([&](cplx z) { return lhs(z) - w.chi_plus(z); });
  return w;
}

NAWitnessCoanalytic coanalytic_na(const SymbolSpec& phi, const BlaschkeProduct& u) {
  NAWitnessAnalytic a = analytic_na(phi.conj(), u);
  NAWitnessCoanalytic w;
  w.psi_minus = a.psi_plus;
  w.chi_minus = a.chi_plus;
  w.u1 = a.u1;
  w.extremal_generator_conj = multiply(w.psi_minus, w.u1);
  const RationalUnimodular& r = phi.unimodular_data();
  w.identity_residual = grid_residual([&](cplx z) {
    return r.c * r.num(z) * std::conj(r.den(z)) - u(z) * w.psi_minus(z) * std::conj(w.chi_minus(z));
  });
  return w;
}

std::optional<YoshinoPair> yoshino_na(const SymbolSpec& phi) {
  if (phi.is_unimodular_rational()) {
    const RationalUnimodular& r = phi.unimodular_data();
    return YoshinoPair{r.num.with_constant(r.c * r.num.constant()), r.den, 1.0};
  }
  if (phi.is_analytic_rational()) {
    const RationalFunction& f = phi.analytic_data().f;
    double s = rational_sup_norm(f);
    if (s == 0.0) return std::nullopt;
    InnerTest t = is_inner_rational(f * RationalFunction(Polynomial::constant(1.0 / s)), 1e-9);
    if (!t.is_inner) return std::nullopt;
    return YoshinoPair{*t.witness, BlaschkeProduct::unit(), s};
  }
  return std::nullopt;
}

BlaschkeProduct toeplitz_to_dtto_bridge(const BlaschkeProduct&, const BlaschkeProduct& theta2, const BlaschkeProduct& u) {
  return multiply(u, theta2);
}

std::optional<NotNAProof> non_na_rule(const SymbolSpec& phi) {
  if (unimodularity_class(phi) != UnimodularityClass::StrictlyLessAE) return std::nullopt;
  const RationalFunction& f = phi.analytic_data().f;
  NotNAProof p;
  p.rule = "|phi| < ||phi||_inf almost everywhere, so ||D_phi h|| <= ||phi h|| < ||phi||_inf ||h|| for h != 0";
  p.sup_norm = rational_sup_norm(f);
  double lo = p.sup_norm;
  for (int k = 0; k < 8192; ++k) lo = std::min(lo, std::abs(f(std::polar(1.0, kTwoPi * k / 8192))));
  p.min_modulus = lo;
  return p;
}

DirectSumResult direct_sum_na(double alpha, double beta, bool na_A, bool na_B) {
  if (alpha < 0.0 || beta < 0.0) throw std::invalid_argument("direct_sum_na: norms must be nonnegative");
  if (alpha > beta) return {na_A, na_A ? Side::A : Side::None};
  if (beta > alpha) return {na_B, na_B ? Side::B : Side::None};
  if (na_A && na_B) return {true, Side::Both};
  if (na_A) return {true, Side::A};
  if (na_B) return {true, Side::B};
  return {false, Side::None};
}

KernelEstimate kernel_Mplus(const SymbolSpec& phi, const BlaschkeProduct& u, int N, double tol) {
  ModelSpace K(u);
  const int M = N + K.tail();
  FourierVector pu = convolve(symbol_coeffs_for(phi, M + N, K.eps()), K.u_coeffs());
  std::vector<int> cols;
  for (int k = 0; k <= N; ++k) cols.push_back(k);
  Eigen::MatrixXcd A = K.basis_matrix(M).adjoint() * symbol_columns(pu, M, cols);
  return kernel_from(A, N + 1, tol);
}

KernelEstimate kernel_Mminus(const SymbolSpec& phi, const BlaschkeProduct& u, int N, double tol) {
  ModelSpace K(u);
  const int M = N + K.tail();
  FourierVector p = symbol_coeffs_for(phi, M + N, K.eps());
  std::vector<int> cols;
  for (int k = -N; k <= -1; ++k) cols.push_back(k);
  Eigen::MatrixXcd A = K.basis_matrix(M).adjoint() * symbol_columns(p, M, cols);
  return kernel_from(A, N, tol);
}

double membership_residual(const FourierVector& phi, double phi_sup, const ModelSpace& K, const FourierVector& v) {
  double nv = v.norm();
  if (nv == 0.0) return 0.0;
  return K.project_Ku(convolve(phi, v)).norm() / (phi_sup * nv);
}

std::pair<ArcSet, ArcSet> split_arc_symbol(const ArcSet& E) {
  if (E.arcs().empty()) throw std::invalid_argument("split_arc_symbol: empty set");
  auto it = std::max_element(E.arcs().begin(), E.arcs().end(),
                             [](const auto& a, const auto& b) { return a.second - a.first < b.second - b.first; });
  double mid = 0.5 * (it->first + it->second);
  return {ArcSet({{it->first, mid}}), ArcSet({{mid, it->second}})};
}

FourierVector arc_extremal_section(const ArcSet& E1, const ArcSet& E2, int N) {
  double ratio = E1.measure() / E2.measure();
  return arc_indicator_coeffs(E1, N) - ratio * arc_indicator_coeffs(E2, N);
}

double arc_extremal_residual(const ArcSet& E, const ArcSet& E1, const ArcSet& E2, int N) {
  FourierVector h = arc_extremal_section(E1, E2, N);
  FourierVector c = arc_indicator_coeffs(E.complement(), 2 * N);
  // ||chi_{E^c} h_N||^2 - |<chi_{E^c} h_N, 1>|^2
  double q = 0.0;
  cplx w0 = 0.0;
  for (int j = -N; j <= N; ++j) {
    cplx row = 0.0;
    for (int k = -N; k <= N; ++k) row += c[j - k] * h[k];
    q += std::real(std::conj(h[j]) * row);
    w0 += c[-j] * h[j];
  }
  double r2 = std::max(0.0, q - std::norm(w0));
  return std::sqrt(r2) / h.norm();
}

NAReport decide(const SymbolSpec& phi_in, const BlaschkeProduct& u, const NumericConfig& cfg) {
  NAReport rep;
  rep.symbol_class = phi_in.class_name();
  rep.unimodularity = unimodularity_class(phi_in);
  ModelSpace K(u, cfg.eps);
  SymbolSpec phi = phi_in;

  if (auto proof = non_na_rule(phi)) {
    rep.verdict = Verdict::NotNA;
    rep.not_na = proof;
    FourierVector pc = phi.coefficients(cfg.eps);
    for (int N : cfg.N_values) rep.numeric_evidence.push_back(evidence_at(pc, proof->sup_norm, K, N, std::nullopt));
    rep.notes.push_back("sigma_max(N) approaches ||phi||_inf from below; no vector attains it");
    return rep;
  }

  if (phi.is_analytic_rational() && rep.unimodularity == UnimodularityClass::UnimodularAE) {
    auto y = yoshino_na(phi);
    if (y) {
      phi = SymbolSpec::unimodular(y->theta1);
      if (std::abs(y->norm - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "symbol is " << y->norm << " times an inner function; verdict applies to the normalized symbol";
        rep.notes.push_back(os.str());
      }
    }
  }
  if (phi.is_arc() && phi.arc_data().E.is_full_circle()) {
    phi = SymbolSpec::unimodular(BlaschkeProduct::unit());
    rep.notes.push_back("arc set is the full circle, so phi = 1");
  }

  if (phi.is_unimodular_rational()) {
    rep.analytic = analytic_na(phi, u);
    rep.coanalytic = coanalytic_na(phi, u);
    rep.yoshino = yoshino_na(phi);
    if (rep.yoshino) {
      rep.bridge_generator = toeplitz_to_dtto_bridge(rep.yoshino->theta1, rep.yoshino->theta2, u);
      bool agree = equal_up_to_phase(*rep.bridge_generator, rep.analytic->extremal_generator);
      rep.notes.push_back(agree ? "Toeplitz bridge generator u*theta2 agrees with the analytic generator up to phase"
                                : "Toeplitz bridge generator differs from the analytic generator");
    }
    FourierVector pc = phi.coefficients(cfg.eps);
    for (int N : cfg.N_values)
      rep.numeric_evidence.push_back(evidence_at(pc, 1.0, K, N, rep.analytic->extremal_generator));
    bool a_ok = rep.analytic->identity_residual < kWitnessTol;
    bool c_ok = rep.coanalytic->identity_residual < kWitnessTol;
    if (a_ok && c_ok) rep.verdict = Verdict::NA_both;
    else if (a_ok) rep.verdict = Verdict::NA_analytic;
    else if (c_ok) rep.verdict = Verdict::NA_coanalytic;
    else rep.verdict = Verdict::Undecided;
    rep.notes.push_back("analytic extremals: generator * H^2 with generator " + describe(rep.analytic->extremal_generator));
    rep.notes.push_back("coanalytic extremals: conj(" + describe(rep.coanalytic->extremal_generator_conj) + ") * H^2_-");
    rep.notes.push_back("informational: the closed-span containment for M_+ is not checked numerically");
    return rep;
  }

  if (phi.is_arc()) {
    try {
      if (!is_z(u)) throw UnsupportedCombination("arc construction needs u = z");
      auto [E1, E2] = split_arc_symbol(phi.arc_data().E);
      for (int N : cfg.N_values) {
        NumericEvidence ev;
        ev.N = N;
        ev.sigma_max = operator_norm(dtto_block(phi.window(2 * N + 2), K.u_coeffs(), N));
        ev.membership_residual = arc_extremal_residual(phi.arc_data().E, E1, E2, N);
        rep.numeric_evidence.push_back(ev);
      }
      std::ostringstream os;
      os.precision(17);
      os << "extremal h = chi_E1 - (m(E1)/m(E2)) chi_E2 with E1 = [" << E1.arcs()[0].first << ", " << E1.arcs()[0].second
         << "], E2 = [" << E2.arcs()[0].first << ", " << E2.arcs()[0].second << "]";
      rep.notes.push_back(os.str());
      rep.verdict = Verdict::NA_mixed_evidence_only;
      return rep;
    } catch (const UnsupportedCombination& e) {
      rep.notes.push_back(e.what());
    }
  }

  rep.verdict = Verdict::Undecided;
  double sup = phi.sup_norm();
  for (int N : cfg.N_values) {
    FourierVector pc = symbol_coeffs_for(phi, 2 * N + K.tail() + 2, cfg.eps);
    rep.numeric_evidence.push_back(evidence_at(pc, sup, K, N, std::nullopt));
  }
  rep.notes.push_back("no symbolic rule applies; numeric evidence only");
  return rep;
}

}  // namespace hardy
