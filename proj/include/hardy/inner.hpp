#pragma once

// Finite Blaschke products: c * z^m * prod ((z - a) / (1 - conj(a) z))^k.

#include <optional>
#include <utility>
#include <vector>

#include "hardy/fourier.hpp"
#include "hardy/polynomial.hpp"

namespace hardy {

/// Zero-matching tolerance for gcd / divide / multiply.
inline constexpr double kTauZero = 1e-9;
/// Zeros with |a| above this are rejected.
inline constexpr double kBoundaryReject = 1.0 - 1e-12;
/// Default tail budget for coefficient expansions.
inline constexpr double kDefaultEps = 1e-14;

struct BlaschkeZero {
  cplx a;
  int multiplicity = 1;
};

class BlaschkeProduct {
 public:
  /// The unit element.
  BlaschkeProduct() = default;
  /// Zeros within kTauZero are merged; zeros within kTauZero of 0 fold into
  /// the monomial power. Throws InvalidBlaschke for |c| != 1 or |a| too large.
  BlaschkeProduct(cplx constant, int monomial_power, std::vector<BlaschkeZero> zeros);

  static BlaschkeProduct unit() { return {}; }
  static BlaschkeProduct z_power(int m) { return BlaschkeProduct(1.0, m, {}); }
  /// B_a(z) = (z - a) / (1 - conj(a) z).
  static BlaschkeProduct factor(cplx a) { return BlaschkeProduct(1.0, 0, {{a, 1}}); }

  cplx constant() const { return constant_; }
  int monomial_power() const { return power_; }
  const std::vector<BlaschkeZero>& zeros() const { return zeros_; }
  int degree() const;
  bool is_unit_up_to_phase() const { return degree() == 0; }
  /// Largest |a| over zeros (0 for a monomial).
  double max_modulus() const;

  cplx operator()(cplx z) const;
  BlaschkeProduct with_constant(cplx c) const { return BlaschkeProduct(c, power_, zeros_); }
  /// Zeros expanded by multiplicity, monomial zeros included.
  std::vector<cplx> zero_list() const;

  RationalFunction to_rational() const;

 private:
  cplx constant_ = 1.0;
  int power_ = 0;
  std::vector<BlaschkeZero> zeros_;
};

BlaschkeProduct multiply(const BlaschkeProduct& A, const BlaschkeProduct& B);
/// Constant 1; shared zeros with minimal multiplicity.
BlaschkeProduct gcd(const BlaschkeProduct& A, const BlaschkeProduct& B);
/// Constant 1; throws NotDivisible if D does not divide A.
BlaschkeProduct divide(const BlaschkeProduct& A, const BlaschkeProduct& D);
bool divides(const BlaschkeProduct& D, const BlaschkeProduct& A);

/// Same zero multiset (within tol); constants ignored.
bool equal_up_to_phase(const BlaschkeProduct& A, const BlaschkeProduct& B, double tol = kTauZero);
/// Same zero multiset and same constant.
bool equal_exact(const BlaschkeProduct& A, const BlaschkeProduct& B, double tol = kTauZero);

/// Length N such that sum_{n > N} |c_n| < eps (Cauchy bound, optimized radius).
int tail_length(const BlaschkeProduct& B, double eps);
/// Taylor coefficients on [0, tail_length(B, eps)], by exact factor recurrence.
FourierVector coeffs(const BlaschkeProduct& B, double eps = kDefaultEps);

struct InnerOuterPair {
  BlaschkeProduct inner;
  RationalFunction outer;
};

/// Throws PoleInDisk, ZeroFunction.
InnerOuterPair inner_outer(const RationalFunction& f);

struct InnerTest {
  bool is_inner = false;
  std::optional<BlaschkeProduct> witness;
};

InnerTest is_inner_rational(const RationalFunction& f, double tau = 1e-9);

}  // namespace hardy
