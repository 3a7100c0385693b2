#include <random>

#include "doctest.h"
#include "hardy/fourier.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

FourierVector rnd(std::mt19937_64& g, int lo, int hi) {
  std::normal_distribution<double> N(0, 1);
  std::vector<cplx> c(hi - lo + 1);
  for (auto& x : c) x = {N(g), N(g)};
  return FourierVector(lo, c);
}

}  // namespace

TEST_SUITE("fourier") {
  TEST_CASE("window access and growth") {
    FourierVector f(-2, {1.0, 2.0, 3.0});
    CHECK(f.hi() == 0);
    CHECK(f[-2] == cplx(1.0));
    CHECK(f[5] == cplx(0.0));
    f.at(3) = 4.0;
    CHECK(f.hi() == 3);
    CHECK(f[3] == cplx(4.0));
    CHECK(f[1] == cplx(0.0));
    CHECK(f.norm_squared() == doctest::Approx(30.0));
  }

  TEST_CASE("trimmed equality ignores zero padding") {
    FourierVector a(-3, {0.0, 0.0, 1.0, 2.0, 0.0});
    FourierVector b(-1, {1.0, 2.0});
    CHECK(a == b);
    CHECK_THROWS_AS(FrequencyBand(3, 1), std::invalid_argument);
  }

  TEST_CASE("interior band") {
    FrequencyBand b = interior_band(64, 8, 2);
    CHECK(b.n_min == -48);
    CHECK(b.n_max == 48);
  }

  TEST_CASE("convolution matches pointwise product") {
    std::mt19937_64 g(1);
    for (int k = 0; k < 10; ++k) {
      FourierVector f = rnd(g, -3, 4), h = rnd(g, -5, 2);
      FourierVector p = convolve(f, h);
      for (double t : {0.1, 1.3, 2.9, 5.0}) CHECK(std::abs(p.evaluate(t) - f.evaluate(t) * h.evaluate(t)) < 1e-12);
    }
  }

  TEST_CASE("projections split orthogonally") {
    std::mt19937_64 g(2);
    FourierVector f = rnd(g, -6, 6);
    FourierVector p = project_plus(f), m = project_minus(f);
    CHECK(p.lo() >= 0);
    CHECK(m.hi() <= -1);
    CHECK(std::abs(inner(p, m)) < 1e-15);
    CHECK((p + m - f).norm() < 1e-15);
    CHECK(project_minus(FourierVector(0, {1.0})).is_zero());
  }

  TEST_CASE("flip V is an antiunitary involution swapping H2 and H2_minus") {
    std::mt19937_64 g(3);
    for (int k = 0; k < 5; ++k) {
      FourierVector f = rnd(g, -5, 7);
      CHECK(flip_V(flip_V(f)) == f);
      CHECK(std::abs(flip_V(f).norm() - f.norm()) < 1e-13);
      CHECK(flip_V(project_plus(f)).hi() <= -1);
      for (double t : {0.4, 2.2}) {
        cplx z = std::polar(1.0, t);
        CHECK(std::abs(flip_V(f).evaluate(t) - std::conj(z) * std::conj(f.evaluate(t))) < 1e-12);
      }
    }
  }

  TEST_CASE("conjugation C_u with u = z^2") {
    FourierVector u(0, {0.0, 0.0, 1.0});
    FourierVector f = FourierVector::basis(3);
    // u zbar conj(z^3) = z^{-2}
    CHECK(conjugate_Cu(f, u) == FourierVector::basis(-2));
    CHECK(conjugate_Cu(FourierVector::basis(-1), u) == FourierVector::basis(2));
  }

  TEST_CASE("arc sets") {
    ArcSet E({{kPi, 1.5 * kPi}, {0.0, 0.5 * kPi}});
    CHECK(E.arcs().front().first == 0.0);
    CHECK(E.measure() == doctest::Approx(0.5));
    CHECK(E.contains(0.25 * kPi));
    CHECK_FALSE(E.contains(0.75 * kPi));
    CHECK(E.complement().measure() == doctest::Approx(0.5));
    CHECK(ArcSet::full_circle().is_full_circle());
    CHECK_THROWS(ArcSet({{0.0, 2.0}, {1.0, 3.0}}));
    CHECK_THROWS(ArcSet({{2.0, 1.0}}));
  }

  TEST_CASE("arc indicator coefficients match the closed form and quadrature") {
    ArcSet E({{0.3, 1.7}, {2.5, 4.0}});
    FourierVector c = arc_indicator_coeffs(E, 40);
    CHECK(c.lo() == -40);
    CHECK(c.hi() == 40);
    double worst = 0.0;
    for (int n = -40; n <= 40; ++n) {
      cplx ref = oracle::arc_coeff(0.3, 1.7, n) + oracle::arc_coeff(2.5, 4.0, n);
      worst = std::max(worst, std::abs(c[n] - ref));
    }
    CHECK(worst < 1e-15);
    FourierVector q = oracle::grid_coeffs([&](cplx z) { return E.contains(std::arg(z) < 0 ? std::arg(z) + kTwoPi : std::arg(z)) ? 1.0 : 0.0; }, -5, 5, 1 << 16);
    CHECK(max_abs_diff(q, c, {-5, 5}) < 1e-4);
  }
}
