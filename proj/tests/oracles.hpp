#pragma once

// Independent reference computations used only by the tests.

#include <complex>
#include <functional>
#include <vector>

#include "hardy/fourier.hpp"

namespace oracle {

using hardy::cplx;

/// Fourier coefficients on [lo, hi] by an n-point rectangle rule.
inline hardy::FourierVector grid_coeffs(const std::function<cplx(cplx)>& f, int lo, int hi, int n = 4096) {
  std::vector<cplx> samples(n);
  for (int j = 0; j < n; ++j) samples[j] = f(std::polar(1.0, hardy::kTwoPi * j / n));
  std::vector<cplx> c(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) s += samples[j] * std::polar(1.0, -hardy::kTwoPi * double(k) * j / n);
    c[k - lo] = s / double(n);
  }
  return hardy::FourierVector(lo, std::move(c));
}

inline cplx blaschke(const std::vector<cplx>& zeros, cplx z) {
  cplx v = 1.0;
  for (auto a : zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

/// Indicator of [a, b]: c_0 = (b - a) / 2pi, c_n = (e^{-ina} - e^{-inb}) / (2 pi i n).
inline cplx arc_coeff(double a, double b, int n) {
  if (n == 0) return (b - a) / hardy::kTwoPi;
  const cplx I(0.0, 1.0);
  return (std::exp(-I * double(n) * a) - std::exp(-I * double(n) * b)) / (hardy::kTwoPi * I * double(n));
}

}  // namespace oracle
