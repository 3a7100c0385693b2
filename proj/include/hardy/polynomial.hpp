#pragma once

#include <complex>
#include <vector>

#include "hardy/fourier.hpp"

namespace hardy {

/// Dense complex polynomial, coefficients in ascending order.
class Polynomial {
 public:
  Polynomial() : c_{cplx(0.0)} {}
  explicit Polynomial(std::vector<cplx> coeffs);

  static Polynomial constant(cplx c) { return Polynomial({c}); }
  static Polynomial monomial(int k, cplx c = 1.0);
  /// lead * prod (z - r).
  static Polynomial from_roots(const std::vector<cplx>& roots, cplx lead = 1.0);

  const std::vector<cplx>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  cplx leading() const { return c_.back(); }
  bool is_zero() const { return c_.size() == 1 && c_[0] == cplx(0.0); }

  cplx operator()(cplx z) const;
  Polynomial derivative() const;

  /// Companion-matrix eigenvalues, each polished with one Newton step.
  std::vector<cplx> roots() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(cplx s) const;

  FourierVector to_fourier() const { return FourierVector(0, c_); }

 private:
  std::vector<cplx> c_;
};

/// Drops trailing coefficients with |c| <= tol * max|c|.
std::vector<cplx> trim_trailing(std::vector<cplx> c, double tol = 1e-14);

/// p / q with roots matched and cancelled on construction.
class RationalFunction {
 public:
  /// Root-matching tolerance used by reduction.
  static constexpr double kMatchTol = 1e-7;

  RationalFunction() : num_(Polynomial::constant(0.0)), den_(Polynomial::constant(1.0)) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial p) : RationalFunction(std::move(p), Polynomial::constant(1.0)) {}

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  cplx operator()(cplx z) const { return num_(z) / den_(z); }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  /// Smallest |root| of the denominator, +inf for a constant denominator.
  double pole_radius() const;

  /// Taylor coefficients about 0 on [0, n].
  FourierVector taylor(int n) const;
  /// Taylor coefficients until the geometric tail drops below eps.
  FourierVector taylor_eps(double eps) const;

  /// max |f| on an n-point circle grid.
  double grid_sup(int n = 8192) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace hardy
