#pragma once

// Laurent coefficient arithmetic on the unit circle.
//
// A FourierVector is a finite window of coefficients c_n of an L^2 function
// f(e^{it}) = sum_n c_n e^{int}.  Every operator model in this library is
// built from these windows.

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Absolute threshold for canonical end trimming.
inline constexpr double kTrimTolerance = 1e-15;

struct FrequencyBand {
  int n_min = 0;
  int n_max = 0;

  FrequencyBand() = default;
  FrequencyBand(int lo, int hi);

  bool contains(int n) const { return n >= n_min && n <= n_max; }
  int size() const { return n_max - n_min + 1; }
};

/// Frequencies on which a finite-section identity with `multiplications`
/// symbol products of bandwidth `bandwidth` is exact inside the window [-N, N].
FrequencyBand interior_band(int N, int bandwidth, int multiplications);

class FourierVector {
 public:
  FourierVector();
  FourierVector(int lo, std::vector<cplx> coeffs);

  static FourierVector basis(int n, cplx value = 1.0);
  /// All-zero window covering `band`.
  static FourierVector zeros(FrequencyBand band);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  FrequencyBand window() const { return {lo(), hi()}; }
  std::span<const cplx> coeffs() const { return coeffs_; }

  /// Coefficient at frequency n; zero outside the window.
  cplx operator[](int n) const;
  cplx& at(int n);

  double norm() const;
  double norm_squared() const;
  double max_abs() const;
  bool is_zero(double tol = kTrimTolerance) const;

  FourierVector trimmed(double tol = kTrimTolerance) const;
  /// Window becomes exactly `band`; coefficients outside are dropped.
  FourierVector restricted(FrequencyBand band) const;
  /// Coefficients of the pointwise conjugate: (conj f)^(n) = conj(f^(-n)).
  FourierVector conj_function() const;
  /// Coefficients of z^k f.
  FourierVector shifted(int k) const;

  cplx evaluate(double t) const;

  FourierVector& operator+=(const FourierVector& other);
  FourierVector& operator-=(const FourierVector& other);
  FourierVector& operator*=(cplx s);

  /// Structural equality after canonical trimming.
  friend bool operator==(const FourierVector& a, const FourierVector& b);

 private:
  int lo_;
  std::vector<cplx> coeffs_;
};

FourierVector operator+(FourierVector a, const FourierVector& b);
FourierVector operator-(FourierVector a, const FourierVector& b);
FourierVector operator*(cplx s, FourierVector f);
FourierVector operator*(FourierVector f, cplx s);

/// L^2 inner product <f, g> = sum f_n conj(g_n).
cplx inner(const FourierVector& f, const FourierVector& g);

/// max_n |f_n - g_n| over `band`.
double max_abs_diff(const FourierVector& f, const FourierVector& g, FrequencyBand band);
double max_abs_diff(const FourierVector& f, const FourierVector& g);
/// || (f - g) restricted to band ||.
double diff_norm(const FourierVector& f, const FourierVector& g, FrequencyBand band);

/// Full untruncated convolution: window [f.lo + g.lo, f.hi + g.hi].
FourierVector convolve(const FourierVector& f, const FourierVector& g);

/// Keeps frequencies n >= 0.
FourierVector project_plus(const FourierVector& f);
/// Keeps frequencies n <= -1.
FourierVector project_minus(const FourierVector& f);

/// (Vf)^(n) = conj(f^(-n-1)), i.e. Vf = conj(z) conj(f).
FourierVector flip_V(const FourierVector& f);

/// C_u f = u conj(z) conj(f); antilinear.
FourierVector conjugate_Cu(const FourierVector& f, const FourierVector& u_coeffs);

/// Disjoint union of closed arcs [t_start, t_end] inside [0, 2 pi].
class ArcSet {
 public:
  using Arc = std::pair<double, double>;

  ArcSet() = default;
  /// Sorts arcs; throws std::invalid_argument on bad bounds or overlap.
  explicit ArcSet(std::vector<Arc> arcs);

  static ArcSet full_circle() { return ArcSet({{0.0, kTwoPi}}); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Normalized measure sum (t_end - t_start) / (2 pi).
  double measure() const;
  bool is_full_circle(double tol = 1e-12) const;
  bool contains(double t) const;
  ArcSet complement() const;

 private:
  std::vector<Arc> arcs_;
};

/// Coefficients of the indicator of E on the window [-N, N].
FourierVector arc_indicator_coeffs(const ArcSet& E, int N);

}  // namespace hardy
