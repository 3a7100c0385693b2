#pragma once

#include <string>
#include <variant>

#include "hardy/fourier.hpp"
#include "hardy/inner.hpp"
#include "hardy/polynomial.hpp"

namespace hardy {

/// c * num * conj(den) on the circle, num and den coprime with constant 1.
struct RationalUnimodular {
  cplx c = 1.0;
  BlaschkeProduct num;
  BlaschkeProduct den;
};

/// p / q with every pole outside the closed disk.
struct RationalAnalytic {
  RationalFunction f;
};

struct ArcIndicator {
  ArcSet E;
};

class SymbolSpec {
 public:
  using Variant = std::variant<RationalUnimodular, RationalAnalytic, ArcIndicator>;

  /// Cancels gcd(num, den) and folds all constants into c.
  static SymbolSpec unimodular(cplx c, const BlaschkeProduct& num, const BlaschkeProduct& den);
  static SymbolSpec unimodular(const BlaschkeProduct& B) { return unimodular(1.0, B, BlaschkeProduct::unit()); }
  /// Throws PoleInDisk when a pole lies in the closed disk.
  static SymbolSpec analytic(const RationalFunction& f);
  /// Throws std::invalid_argument for an empty arc set.
  static SymbolSpec arc(const ArcSet& E);

  const Variant& variant() const { return v_; }
  bool is_unimodular_rational() const { return std::holds_alternative<RationalUnimodular>(v_); }
  bool is_analytic_rational() const { return std::holds_alternative<RationalAnalytic>(v_); }
  bool is_arc() const { return std::holds_alternative<ArcIndicator>(v_); }
  const RationalUnimodular& unimodular_data() const { return std::get<RationalUnimodular>(v_); }
  const RationalAnalytic& analytic_data() const { return std::get<RationalAnalytic>(v_); }
  const ArcIndicator& arc_data() const { return std::get<ArcIndicator>(v_); }

  cplx evaluate(double t) const;
  /// Coefficient window carrying all mass above eps; arcs use [-arc_N, arc_N].
  FourierVector coefficients(double eps = kDefaultEps, int arc_N = 512) const;
  /// Coefficients on exactly [-N, N].
  FourierVector window(int N, double eps = kDefaultEps) const;
  /// ||phi||_inf (grid max with golden-section refinement for rational analytic).
  double sup_norm() const;
  /// Pointwise conjugate; only defined for RationalUnimodular.
  SymbolSpec conj() const;

  std::string class_name() const;

 private:
  explicit SymbolSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// max of |f| on the circle: 8192-point grid plus golden-section polish.
double rational_sup_norm(const RationalFunction& f, double* argmax = nullptr);

}  // namespace hardy
