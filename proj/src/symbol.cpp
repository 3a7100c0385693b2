#include "hardy/symbol.hpp"

#include <cmath>
#include <stdexcept>

#include "hardy/errors.hpp"

namespace hardy {

SymbolSpec SymbolSpec::unimodular(cplx c, const BlaschkeProduct& num, const BlaschkeProduct& den) {
  if (std::abs(std::abs(c) - 1.0) > 1e-12) throw InvalidBlaschke("unimodular symbol needs |c| = 1");
  BlaschkeProduct g = gcd(num, den);
  BlaschkeProduct n = divide(num, g), d = divide(den, g);
  RationalUnimodular r;
  r.c = c * num.constant() * std::conj(den.constant());
  r.num = n;
  r.den = d;
  return SymbolSpec(r);
}

SymbolSpec SymbolSpec::analytic(const RationalFunction& f) {
  if (f.pole_radius() <= 1.0 + 1e-12) throw PoleInDisk("rational symbol has a pole in the closed disk");
  return SymbolSpec(RationalAnalytic{f});
}

SymbolSpec SymbolSpec::arc(const ArcSet& E) {
  if (E.arcs().empty()) throw std::invalid_argument("arc symbol needs at least one arc");
  return SymbolSpec(ArcIndicator{E});
}

cplx SymbolSpec::evaluate(double t) const {
  const cplx z = std::polar(1.0, t);
  if (auto* r = std::get_if<RationalUnimodular>(&v_)) return r->c * r->num(z) * std::conj(r->den(z));
  if (auto* a = std::get_if<RationalAnalytic>(&v_)) return a->f(z);
  return std::get<ArcIndicator>(v_).E.contains(t) ? 1.0 : 0.0;
}

FourierVector SymbolSpec::coefficients(double eps, int arc_N) const {
  if (auto* r = std::get_if<RationalUnimodular>(&v_)) {
    FourierVector n = coeffs(r->num, eps);
    FourierVector d = coeffs(r->den, eps);
    return r->c * convolve(n, d.conj_function());
  }
  if (auto* a = std::get_if<RationalAnalytic>(&v_)) return a->f.taylor_eps(eps);
  return arc_indicator_coeffs(std::get<ArcIndicator>(v_).E, arc_N);
}

FourierVector SymbolSpec::window(int N, double eps) const {
  if (is_arc()) return arc_indicator_coeffs(arc_data().E, N);
  return coefficients(eps).restricted({-N, N});
}

double rational_sup_norm(const RationalFunction& f, double* argmax) {
  const int n = 8192;
  int best = 0;
  double m = -1.0;
  for (int k = 0; k < n; ++k) {
    double v = std::abs(f(std::polar(1.0, kTwoPi * k / n)));
    if (v > m) {
      m = v;
      best = k;
    }
  }
  auto g = [&](double t) { return std::abs(f(std::polar(1.0, t))); };
  double a = kTwoPi * (best - 1) / n, b = kTwoPi * (best + 1) / n;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = g(x2);
    }
  }
  double t = 0.5 * (a + b);
  double v = g(t);
  if (v < m) {
    v = m;
    t = kTwoPi * best / n;
  }
  if (argmax) *argmax = t;
  return v;
}

double SymbolSpec::sup_norm() const {
  if (is_unimodular_rational()) return 1.0;
  if (auto* a = std::get_if<RationalAnalytic>(&v_)) return rational_sup_norm(a->f);
  return 1.0;
}

SymbolSpec SymbolSpec::conj() const {
  auto* r = std::get_if<RationalUnimodular>(&v_);
  if (!r) throw UnsupportedCombination("conj is defined only for unimodular rational symbols");
  RationalUnimodular out;
  out.c = std::conj(r->c);
  out.num = r->den;
  out.den = r->num;
  return SymbolSpec(out);
}

std::string SymbolSpec::class_name() const {
  if (is_unimodular_rational()) return "RationalUnimodular";
  if (is_analytic_rational()) return "RationalAnalytic";
  return "ArcIndicator";
}

}  // namespace hardy
