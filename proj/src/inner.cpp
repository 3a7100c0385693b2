#include "hardy/inner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

void merge_zero(std::vector<BlaschkeZero>& zs, cplx a, int mult) {
  for (auto& z : zs) {
    if (std::abs(z.a - a) <= kTauZero) {
      z.multiplicity += mult;
      return;
    }
  }
  zs.push_back({a, mult});
}

// index of the zero in zs matching a, or -1
int find_zero(const std::vector<BlaschkeZero>& zs, cplx a, double tol = kTauZero) {
  for (std::size_t k = 0; k < zs.size(); ++k)
    if (std::abs(zs[k].a - a) <= tol) return static_cast<int>(k);
  return -1;
}

bool same_zero_multiset(const BlaschkeProduct& A, const BlaschkeProduct& B, double tol) {
  if (A.monomial_power() != B.monomial_power()) return false;
  if (A.zeros().size() != B.zeros().size()) return false;
  for (const auto& z : A.zeros()) {
    int k = find_zero(B.zeros(), z.a, tol);
    if (k < 0 || B.zeros()[k].multiplicity != z.multiplicity) return false;
  }
  return true;
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(cplx constant, int monomial_power, std::vector<BlaschkeZero> zeros)
    : constant_(constant), power_(monomial_power) {
  if (std::abs(std::abs(constant) - 1.0) > 1e-12) throw InvalidBlaschke("Blaschke constant must be unimodular");
  if (monomial_power < 0) throw InvalidBlaschke("negative monomial power");
  for (const auto& z : zeros) {
    if (z.multiplicity <= 0) throw InvalidBlaschke("zero multiplicity must be positive");
    double r = std::abs(z.a);
    if (!(r < kBoundaryReject)) throw InvalidBlaschke("Blaschke zero too close to the unit circle");
    if (r <= kTauZero) {
      power_ += z.multiplicity;
      continue;
    }
    merge_zero(zeros_, z.a, z.multiplicity);
  }
}

int BlaschkeProduct::degree() const {
  int d = power_;
  for (const auto& z : zeros_) d += z.multiplicity;
  return d;
}

double BlaschkeProduct::max_modulus() const {
  double r = 0.0;
  for (const auto& z : zeros_) r = std::max(r, std::abs(z.a));
  return r;
}

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx v = constant_ * std::pow(z, power_);
  for (const auto& zr : zeros_) {
    cplx f = (z - zr.a) / (1.0 - std::conj(zr.a) * z);
    for (int k = 0; k < zr.multiplicity; ++k) v *= f;
  }
  return v;
}

std::vector<cplx> BlaschkeProduct::zero_list() const {
  std::vector<cplx> out(power_, cplx(0.0));
  for (const auto& z : zeros_)
    for (int k = 0; k < z.multiplicity; ++k) out.push_back(z.a);
  return out;
}

RationalFunction BlaschkeProduct::to_rational() const {
  std::vector<cplx> nr = zero_list();
  std::vector<cplx> dr;
  cplx dlead = 1.0;
  for (const auto& z : zeros_) {
    for (int k = 0; k < z.multiplicity; ++k) {
      dr.push_back(1.0 / std::conj(z.a));
      dlead *= -std::conj(z.a);
    }
  }
  return RationalFunction(Polynomial::from_roots(nr, constant_), Polynomial::from_roots(dr, dlead));
}

BlaschkeProduct multiply(const BlaschkeProduct& A, const BlaschkeProduct& B) {
  std::vector<BlaschkeZero> zs = A.zeros();
  zs.insert(zs.end(), B.zeros().begin(), B.zeros().end());
  return BlaschkeProduct(A.constant() * B.constant(), A.monomial_power() + B.monomial_power(), std::move(zs));
}

BlaschkeProduct gcd(const BlaschkeProduct& A, const BlaschkeProduct& B) {
  std::vector<BlaschkeZero> zs;
  for (const auto& z : A.zeros()) {
    int k = find_zero(B.zeros(), z.a);
    if (k >= 0) zs.push_back({z.a, std::min(z.multiplicity, B.zeros()[k].multiplicity)});
  }
  return BlaschkeProduct(1.0, std::min(A.monomial_power(), B.monomial_power()), std::move(zs));
}

bool divides(const BlaschkeProduct& D, const BlaschkeProduct& A) {
  if (D.monomial_power() > A.monomial_power()) return false;
  for (const auto& z : D.zeros()) {
    int k = find_zero(A.zeros(), z.a);
    if (k < 0 || A.zeros()[k].multiplicity < z.multiplicity) return false;
  }
  return true;
}

BlaschkeProduct divide(const BlaschkeProduct& A, const BlaschkeProduct& D) {
  if (!divides(D, A)) throw NotDivisible("divide: divisor is not a factor");
  std::vector<BlaschkeZero> zs = A.zeros();
  for (const auto& z : D.zeros()) {
    int k = find_zero(zs, z.a);
    zs[k].multiplicity -= z.multiplicity;
  }
  std::erase_if(zs, [](const BlaschkeZero& z) { return z.multiplicity == 0; });
  return BlaschkeProduct(1.0, A.monomial_power() - D.monomial_power(), std::move(zs));
}

bool equal_up_to_phase(const BlaschkeProduct& A, const BlaschkeProduct& B, double tol) {
  return same_zero_multiset(A, B, tol);
}

bool equal_exact(const BlaschkeProduct& A, const BlaschkeProduct& B, double tol) {
  return same_zero_multiset(A, B, tol) && std::abs(A.constant() - B.constant()) <= 1e-12;
}

int tail_length(const BlaschkeProduct& B, double eps) {
  const int m = B.monomial_power();
  const double r = B.max_modulus();
  if (B.zeros().empty()) return m;
  const int K = 400;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= K; ++k) {
    double R = 1.0 + (1.0 / r - 1.0) * k / (K + 1.0);
    double logM = m * std::log(R);
    for (const auto& z : B.zeros()) {
      double s = std::abs(z.a);
      logM += z.multiplicity * std::log((R + s) / (1.0 - s * R));
    }
    double n = (logM - std::log(R - 1.0) - std::log(eps)) / std::log(R);
    best = std::min(best, n);
  }
  int n = static_cast<int>(std::ceil(best));
  return std::max(n, B.degree());
}

FourierVector coeffs(const BlaschkeProduct& B, double eps) {
  const int L = tail_length(B, eps);
  std::vector<cplx> x(L + 1, cplx(0.0));
  x[0] = 1.0;
  for (const auto& z : B.zeros()) {
    const cplx a = z.a, ab = std::conj(z.a);
    for (int k = 0; k < z.multiplicity; ++k) {
      std::vector<cplx> y(L + 1);
      y[0] = -a * x[0];
      for (int n = 1; n <= L; ++n) y[n] = ab * y[n - 1] + x[n - 1] - a * x[n];
      x = std::move(y);
    }
  }
  const int m = B.monomial_power();
  std::vector<cplx> out(L + 1, cplx(0.0));
  for (int n = 0; n + m <= L; ++n) out[n + m] = B.constant() * x[n];
  return FourierVector(0, std::move(out));
}

InnerOuterPair inner_outer(const RationalFunction& f) {
  if (f.is_zero()) throw ZeroFunction("inner_outer: zero function");
  for (const auto& p : f.denominator().roots())
    if (std::abs(p) <= 1.0 + 1e-12) throw PoleInDisk("inner_outer: pole in closed unit disk");
  std::vector<BlaschkeZero> inside;
  std::vector<cplx> outer_roots;
  cplx lead = f.numerator().leading();
  int power = 0;
  for (const auto& r : f.numerator().roots()) {
    double s = std::abs(r);
    if (s <= kTauZero) {
      ++power;
    } else if (s < kBoundaryReject) {
      inside.push_back({r, 1});
      // 1 - conj(a) z = -conj(a) (z - 1/conj(a))
      outer_roots.push_back(1.0 / std::conj(r));
      lead *= -std::conj(r);
    } else {
      outer_roots.push_back(r);
    }
  }
  BlaschkeProduct inner(1.0, power, std::move(inside));
  RationalFunction outer(Polynomial::from_roots(outer_roots, lead), f.denominator());
  return {inner, outer};
}

InnerTest is_inner_rational(const RationalFunction& f, double tau) {
  InnerTest res;
  if (f.is_zero()) return res;
  const int grid = 4096;
  for (int k = 0; k < grid; ++k) {
    if (std::abs(std::abs(f(std::polar(1.0, kTwoPi * k / grid))) - 1.0) > tau) return res;
  }
  std::vector<cplx> nr = f.numerator().roots();
  std::vector<cplx> dr = f.denominator().roots();
  std::vector<bool> used(dr.size(), false);
  std::vector<BlaschkeZero> zs;
  int power = 0;
  for (const auto& a : nr) {
    double s = std::abs(a);
    if (!(s < kBoundaryReject)) return res;
    if (s <= kTauZero) {
      ++power;
      continue;
    }
    cplx refl = 1.0 / std::conj(a);
    bool found = false;
    for (std::size_t k = 0; k < dr.size(); ++k) {
      if (!used[k] && std::abs(dr[k] - refl) <= RationalFunction::kMatchTol * std::abs(refl)) {
        used[k] = found = true;
        break;
      }
    }
    if (!found) return res;
    zs.push_back({a, 1});
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return res;
  BlaschkeProduct shape(1.0, power, std::move(zs));
  const cplx z0 = std::polar(1.0, 0.7);
  cplx c = f(z0) / shape(z0);
  c /= std::abs(c);
  res.is_inner = true;
  res.witness = shape.with_constant(c);
  return res;
}

}  // namespace hardy
