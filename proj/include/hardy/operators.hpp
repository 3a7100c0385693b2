#pragma once

// Finite-section matrix models of Toeplitz, Hankel, dual Toeplitz, truncated
// Toeplitz and dual truncated Toeplitz operators, plus vector-level versions
// that are exact up to the coefficient tail of u.

#include <Eigen/Dense>
#include <vector>

#include "hardy/fourier.hpp"
#include "hardy/inner.hpp"

namespace hardy {

enum class BasisKind {
  Hplus,        // frequencies 0..N
  Hminus,       // frequencies -N..-1
  Ku,           // orthonormal basis of the model space, dimension deg(u)
  KuPerpBlock,  // H^2 slots 0..N then H^2_- slots -N..-1
  Full          // frequencies -N..N
};

struct BasisTag {
  BasisKind kind = BasisKind::Full;
  int N = 0;
  int ku_dim = 0;

  static BasisTag hplus(int N) { return {BasisKind::Hplus, N, 0}; }
  static BasisTag hminus(int N) { return {BasisKind::Hminus, N, 0}; }
  static BasisTag ku(int N, int dim) { return {BasisKind::Ku, N, dim}; }
  static BasisTag ku_perp_block(int N) { return {BasisKind::KuPerpBlock, N, 0}; }
  static BasisTag full(int N) { return {BasisKind::Full, N, 0}; }

  int dimension() const;
  /// Frequency carried by each slot; throws for Ku.
  std::vector<int> frequencies() const;
  friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

const char* to_string(BasisKind kind);

struct OperatorMatrix {
  BasisTag rows;
  BasisTag cols;
  Eigen::MatrixXcd entries;

  OperatorMatrix() = default;
  OperatorMatrix(BasisTag r, BasisTag c, Eigen::MatrixXcd m);

  OperatorMatrix adjoint() const { return {cols, rows, entries.adjoint()}; }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return entries * v; }
};

/// Coordinates of f in a frequency basis; frequencies outside are dropped.
Eigen::VectorXcd to_coords(const FourierVector& f, const BasisTag& tag);
FourierVector from_coords(const Eigen::VectorXcd& v, const BasisTag& tag);

OperatorMatrix toeplitz(const FourierVector& phi, int N);
OperatorMatrix hankel(const FourierVector& phi, int N);
OperatorMatrix dual_toeplitz(const FourierVector& phi, int N);
/// Multiplication by phi on the full window [-N, N].
OperatorMatrix laurent(const FourierVector& phi, int N);

/// Model space K_u with the coefficient data needed by every builder.
class ModelSpace {
 public:
  explicit ModelSpace(BlaschkeProduct u, double eps = kDefaultEps);

  const BlaschkeProduct& inner() const { return u_; }
  const FourierVector& u_coeffs() const { return uc_; }
  double eps() const { return eps_; }
  int dimension() const { return u_.degree(); }
  /// Length beyond which all basis and u coefficients are below eps.
  int tail() const { return tail_; }

  /// Takenaka-Malmquist-Walsh orthonormal basis of K_u.
  const std::vector<FourierVector>& basis() const { return basis_; }
  /// Basis as columns over the H^2 window 0..N.
  Eigen::MatrixXcd basis_matrix(int N) const;

  FourierVector project_uH2(const FourierVector& f) const;
  FourierVector project_Ku(const FourierVector& f) const;
  FourierVector project_Ku_perp(const FourierVector& f) const;
  FourierVector conjugate(const FourierVector& f) const;
  /// D_phi h = (I - P+)(phi h) + u P+(conj(u) phi h).
  FourierVector apply_dtto(const FourierVector& phi, const FourierVector& h) const;

 private:
  BlaschkeProduct u_;
  double eps_;
  FourierVector uc_;
  FourierVector ubar_;
  int tail_ = 0;
  std::vector<FourierVector> basis_;
};

/// I - T_u T_u^* on the H^2 window 0..N.
OperatorMatrix model_projection(const BlaschkeProduct& u, int N, double eps = kDefaultEps);
OperatorMatrix model_projection(const ModelSpace& K, int N);

/// A_phi in the orthonormal K_u basis; basis truncated at N.
OperatorMatrix tto(const FourierVector& phi, const ModelSpace& K, int N);
/// B_phi = (I - P_K) M_phi restricted to K_u: rows Full(N), cols Ku.
OperatorMatrix truncated_hankel_B(const FourierVector& phi, const ModelSpace& K, int N);
/// D_phi acting on the full window [-N, N] (zero on K_u).
OperatorMatrix dtto_matrix(const FourierVector& phi, const ModelSpace& K, int N);
/// P_{K_u^perp} as a Full(N) matrix.
OperatorMatrix perp_projection(const ModelSpace& K, int N);

/// U^* D_phi U = [T_phi, H^*_{u conj(phi)}; H_{u phi}, S_phi] on KuPerpBlock(N).
OperatorMatrix dtto_block(const FourierVector& phi, const FourierVector& u_coeffs, int N);
/// D_phi h by the explicit formula, using growing windows.
FourierVector dtto_direct(const FourierVector& phi, const FourierVector& u_coeffs, const FourierVector& h);
/// U applied to block coordinates: (f, g) -> u f + g.
FourierVector block_to_function(const Eigen::VectorXcd& v, const FourierVector& u_coeffs, int N);

struct ExtremalSubspace {
  double sigma_max = 0.0;
  std::vector<Eigen::VectorXcd> basis;
  double gap = 0.0;
  BasisTag tag;
};

double operator_norm(const OperatorMatrix& M);
/// Right singular vectors with sigma >= sigma_max - tol; tol <= 0 selects 1e-8 * sigma_max.
ExtremalSubspace extremal_space(const OperatorMatrix& M, double tol = 0.0);
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& M);

}  // namespace hardy
