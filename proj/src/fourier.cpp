#include "hardy/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardy {

FrequencyBand::FrequencyBand(int lo, int hi) : n_min(lo), n_max(hi) {
  if (lo > hi) throw std::invalid_argument("FrequencyBand: n_min > n_max");
}

FrequencyBand interior_band(int N, int bandwidth, int multiplications) {
  int shrink = bandwidth * multiplications;
  if (shrink > N) throw std::invalid_argument("interior_band: window too small for bandwidth");
  return {-N + shrink, N - shrink};
}

FourierVector::FourierVector() : lo_(0), coeffs_(1, cplx(0.0)) {}

FourierVector::FourierVector(int lo, std::vector<cplx> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, cplx(0.0));
}

FourierVector FourierVector::basis(int n, cplx value) { return FourierVector(n, {value}); }

FourierVector FourierVector::zeros(FrequencyBand band) {
  return FourierVector(band.n_min, std::vector<cplx>(band.size(), cplx(0.0)));
}

cplx FourierVector::operator[](int n) const {
  if (n < lo_ || n > hi()) return 0.0;
  return coeffs_[n - lo_];
}

cplx& FourierVector::at(int n) {
  if (n < lo_) {
    coeffs_.insert(coeffs_.begin(), lo_ - n, cplx(0.0));
    lo_ = n;
  } else if (n > hi()) {
    coeffs_.resize(n - lo_ + 1, cplx(0.0));
  }
  return coeffs_[n - lo_];
}

double FourierVector::norm_squared() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

double FourierVector::norm() const { return std::sqrt(norm_squared()); }

double FourierVector::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool FourierVector::is_zero(double tol) const { return max_abs() <= tol; }

FourierVector FourierVector::trimmed(double tol) const {
  std::size_t first = 0, last = coeffs_.size();
  while (first < last && std::abs(coeffs_[first]) <= tol) ++first;
  while (last > first && std::abs(coeffs_[last - 1]) <= tol) --last;
  if (first == last) return FourierVector();
  return FourierVector(lo_ + static_cast<int>(first),
                       std::vector<cplx>(coeffs_.begin() + first, coeffs_.begin() + last));
}

FourierVector FourierVector::restricted(FrequencyBand band) const {
  std::vector<cplx> out(band.size());
  for (int n = band.n_min; n <= band.n_max; ++n) out[n - band.n_min] = (*this)[n];
  return FourierVector(band.n_min, std::move(out));
}

FourierVector FourierVector::conj_function() const {
  std::vector<cplx> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[coeffs_.size() - 1 - k] = std::conj(coeffs_[k]);
  return FourierVector(-hi(), std::move(out));
}

FourierVector FourierVector::shifted(int k) const { return FourierVector(lo_ + k, coeffs_); }

cplx FourierVector::evaluate(double t) const {
  // Horner in e^{it}, then scale by e^{i lo t}.
  cplx w = std::polar(1.0, t);
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
  return acc * std::polar(1.0, lo_ * t);
}

FourierVector& FourierVector::operator+=(const FourierVector& other) {
  at(other.lo());
  at(other.hi());
  for (int n = other.lo(); n <= other.hi(); ++n) coeffs_[n - lo_] += other[n];
  return *this;
}

FourierVector& FourierVector::operator-=(const FourierVector& other) {
  at(other.lo());
  at(other.hi());
  for (int n = other.lo(); n <= other.hi(); ++n) coeffs_[n - lo_] -= other[n];
  return *this;
}

FourierVector& FourierVector::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const FourierVector& a, const FourierVector& b) {
  FourierVector ta = a.trimmed(), tb = b.trimmed();
  return ta.lo_ == tb.lo_ && ta.coeffs_ == tb.coeffs_;
}

FourierVector operator+(FourierVector a, const FourierVector& b) { return a += b; }
FourierVector operator-(FourierVector a, const FourierVector& b) { return a -= b; }
FourierVector operator*(cplx s, FourierVector f) { return f *= s; }
FourierVector operator*(FourierVector f, cplx s) { return f *= s; }

cplx inner(const FourierVector& f, const FourierVector& g) {
  int lo = std::max(f.lo(), g.lo()), hi = std::min(f.hi(), g.hi());
  cplx s = 0.0;
  for (int n = lo; n <= hi; ++n) s += f[n] * std::conj(g[n]);
  return s;
}

double max_abs_diff(const FourierVector& f, const FourierVector& g, FrequencyBand band) {
  double m = 0.0;
  for (int n = band.n_min; n <= band.n_max; ++n) m = std::max(m, std::abs(f[n] - g[n]));
  return m;
}

double max_abs_diff(const FourierVector& f, const FourierVector& g) {
  return max_abs_diff(f, g, {std::min(f.lo(), g.lo()), std::max(f.hi(), g.hi())});
}

double diff_norm(const FourierVector& f, const FourierVector& g, FrequencyBand band) {
  double s = 0.0;
  for (int n = band.n_min; n <= band.n_max; ++n) s += std::norm(f[n] - g[n]);
  return std::sqrt(s);
}

FourierVector convolve(const FourierVector& f, const FourierVector& g) {
  auto fc = f.coeffs();
  auto gc = g.coeffs();
  std::vector<cplx> out(fc.size() + gc.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i] == cplx(0.0)) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) out[i + j] += fc[i] * gc[j];
  }
  return FourierVector(f.lo() + g.lo(), std::move(out));
}

FourierVector project_plus(const FourierVector& f) {
  if (f.hi() < 0) return FourierVector();
  return f.restricted({std::max(0, f.lo()), f.hi()});
}

FourierVector project_minus(const FourierVector& f) {
  if (f.lo() > -1) return FourierVector(-1, {0.0});
  return f.restricted({f.lo(), std::min(-1, f.hi())});
}

FourierVector flip_V(const FourierVector& f) {
  // conj(z) conj(f): conj_function then shift by -1.
  return f.conj_function().shifted(-1);
}

FourierVector conjugate_Cu(const FourierVector& f, const FourierVector& u_coeffs) {
  return convolve(u_coeffs, flip_V(f));
}

ArcSet::ArcSet(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  for (const auto& [s, e] : arcs_) {
    if (!(s >= 0.0 && e <= kTwoPi + 1e-12 && s < e)) throw std::invalid_argument("ArcSet: need 0 <= t_start < t_end <= 2pi");
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t k = 1; k < arcs_.size(); ++k) {
    if (arcs_[k].first < arcs_[k - 1].second) throw std::invalid_argument("ArcSet: overlapping arcs");
  }
}

double ArcSet::measure() const {
  double m = 0.0;
  for (const auto& [s, e] : arcs_) m += e - s;
  return m / kTwoPi;
}

bool ArcSet::is_full_circle(double tol) const { return std::abs(measure() - 1.0) <= tol; }

bool ArcSet::contains(double t) const {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  for (const auto& [s, e] : arcs_) {
    if (t >= s && t <= e) return true;
  }
  return false;
}

ArcSet ArcSet::complement() const {
  std::vector<Arc> out;
  double cursor = 0.0;
  for (const auto& [s, e] : arcs_) {
    if (s > cursor) out.emplace_back(cursor, s);
    cursor = e;
  }
  if (cursor < kTwoPi) out.emplace_back(cursor, kTwoPi);
  return ArcSet(std::move(out));
}

FourierVector arc_indicator_coeffs(const ArcSet& E, int N) {
  if (N < 0) throw std::invalid_argument("arc_indicator_coeffs: N < 0");
  std::vector<cplx> c(2 * N + 1);
  const cplx I(0.0, 1.0);
  for (int n = -N; n <= N; ++n) {
    cplx s = 0.0;
    if (n == 0) {
      s = E.measure();
    } else {
      for (const auto& [a, b] : E.arcs()) s += std::polar(1.0, -n * a) - std::polar(1.0, -n * b);
      s /= kTwoPi * I * static_cast<double>(n);
    }
    c[n + N] = s;
  }
  return FourierVector(-N, std::move(c));
}

}  // namespace hardy
