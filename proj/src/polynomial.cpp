#include "hardy/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy {

std::vector<cplx> trim_trailing(std::vector<cplx> c, double tol) {
  double scale = 0.0;
  for (const auto& x : c) scale = std::max(scale, std::abs(x));
  while (c.size() > 1 && std::abs(c.back()) <= tol * scale) c.pop_back();
  if (c.empty()) c.push_back(0.0);
  if (scale == 0.0) c.assign(1, 0.0);
  return c;
}

Polynomial::Polynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(0.0);
  while (c_.size() > 1 && c_.back() == cplx(0.0)) c_.pop_back();
}

Polynomial Polynomial::monomial(int k, cplx c) {
  std::vector<cplx> v(k + 1, cplx(0.0));
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots, cplx lead) {
  std::vector<cplx> c{lead};
  for (const auto& r : roots) {
    std::vector<cplx> next(c.size() + 1, cplx(0.0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

cplx Polynomial::operator()(cplx z) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() == 1) return Polynomial();
  std::vector<cplx> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Polynomial(std::move(d));
}

std::vector<cplx> Polynomial::roots() const {
  std::vector<cplx> out;
  std::size_t shift = 0;
  while (shift + 1 < c_.size() && c_[shift] == cplx(0.0)) ++shift;
  out.assign(shift, cplx(0.0));
  std::vector<cplx> c(c_.begin() + shift, c_.end());
  int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(-c[0] / c[1]);
    return out;
  }
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) comp(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) comp(k, n - 1) = -c[k] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  Polynomial p(c);
  Polynomial dp = p.derivative();
  for (int k = 0; k < n; ++k) {
    cplx r = es.eigenvalues()[k];
    cplx d = dp(r);
    if (std::abs(d) > 0.0) {
      cplx step = p(r) / d;
      if (std::isfinite(step.real()) && std::isfinite(step.imag()) && std::abs(step) < 1e-3 * (1.0 + std::abs(r))) r -= step;
    }
    out.push_back(r);
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<cplx> c(a.c_.size() + b.c_.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<cplx> c(std::max(a.c_.size(), b.c_.size()), cplx(0.0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(cplx s) const {
  std::vector<cplx> c = c_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(Polynomial(trim_trailing(num.coeffs()))), den_(Polynomial(trim_trailing(den.coeffs()))) {
  if (den_.is_zero()) throw HardyError("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1.0);
    return;
  }
  if (den_.degree() == 0 || num_.degree() == 0) return;
  std::vector<cplx> nr = num_.roots(), dr = den_.roots();
  std::vector<bool> used(nr.size(), false);
  std::vector<cplx> keep_d;
  bool cancelled = false;
  for (const auto& r : dr) {
    std::size_t best = nr.size();
    double best_dist = kMatchTol * (1.0 + std::abs(r));
    for (std::size_t k = 0; k < nr.size(); ++k) {
      if (used[k]) continue;
      double dist = std::abs(nr[k] - r);
      if (dist <= best_dist) {
        best_dist = dist;
        best = k;
      }
    }
    if (best < nr.size()) {
      used[best] = true;
      cancelled = true;
    } else {
      keep_d.push_back(r);
    }
  }
  if (!cancelled) return;
  std::vector<cplx> keep_n;
  for (std::size_t k = 0; k < nr.size(); ++k)
    if (!used[k]) keep_n.push_back(nr[k]);
  num_ = Polynomial::from_roots(keep_n, num_.leading());
  den_ = Polynomial::from_roots(keep_d, den_.leading());
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ZeroFunction("RationalFunction: division by zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

double RationalFunction::pole_radius() const {
  double r = std::numeric_limits<double>::infinity();
  for (const auto& p : den_.roots()) r = std::min(r, std::abs(p));
  return r;
}

FourierVector RationalFunction::taylor(int n) const {
  const auto& p = num_.coeffs();
  const auto& q = den_.coeffs();
  if (q[0] == cplx(0.0)) throw PoleInDisk("RationalFunction: pole at 0");
  std::vector<cplx> c(n + 1, cplx(0.0));
  for (int k = 0; k <= n; ++k) {
    cplx s = k < static_cast<int>(p.size()) ? p[k] : cplx(0.0);
    int top = std::min<int>(k, static_cast<int>(q.size()) - 1);
    for (int j = 1; j <= top; ++j) s -= q[j] * c[k - j];
    c[k] = s / q[0];
  }
  return FourierVector(0, std::move(c));
}

FourierVector RationalFunction::taylor_eps(double eps) const {
  double rho = pole_radius();
  if (std::isinf(rho)) return taylor(num_.degree()).trimmed(0.0);
  if (rho <= 1.0 + 1e-12) throw PoleInDisk("RationalFunction: pole in closed disk");
  const double q = 1.0 / rho;
  const int min_len = num_.degree() + 8 * den_.degree() + 8;
  int n = std::max(64, min_len);
  const int cap = 200000;
  while (true) {
    FourierVector c = taylor(n);
    // tail estimate: last block bounds the geometric continuation
    double last = 0.0;
    for (int k = n - 7; k <= n; ++k) last = std::max(last, std::abs(c[k]));
    if (last * q / (1.0 - q) < 0.1 * eps && n >= min_len) {
      int len = n;
      while (len > 0 && std::abs(c[len]) < 1e-3 * eps * (1.0 - q)) --len;
      return c.restricted({0, std::max(len, 0)});
    }
    if (n >= cap) return c;
    n = std::min(cap, 2 * n);
  }
}

double RationalFunction::grid_sup(int n) const {
  double m = 0.0;
  for (int k = 0; k < n; ++k) m = std::max(m, std::abs((*this)(std::polar(1.0, kTwoPi * k / n))));
  return m;
}

}  // namespace hardy
