#include <algorithm>
#include <random>

#include "doctest.h"
#include "hardy/errors.hpp"
#include "hardy/polynomial.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

bool root_sets_match(std::vector<cplx> a, std::vector<cplx> b, double tol) {
  if (a.size() != b.size()) return false;
  for (auto r : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](cplx x, cplx y) { return std::abs(x - r) < std::abs(y - r); });
    if (std::abs(*it - r) > tol) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("evaluation and derivative") {
    Polynomial p({1.0, -3.0, 2.0});
    CHECK(p(2.0) == cplx(3.0));
    CHECK(p.derivative()(1.0) == cplx(1.0));
    CHECK(p.degree() == 2);
    CHECK(Polynomial({1.0, 0.0, 0.0}).degree() == 0);
  }

  TEST_CASE("roots of random polynomials round trip") {
    std::mt19937_64 g(5);
    std::uniform_real_distribution<double> U(-1.5, 1.5);
    for (int k = 0; k < 30; ++k) {
      std::vector<cplx> r;
      int d = 1 + k % 7;
      for (int j = 0; j < d; ++j) r.push_back({U(g), U(g)});
      Polynomial p = Polynomial::from_roots(r, cplx(0.7, -0.2));
      CHECK(root_sets_match(p.roots(), r, 1e-8));
    }
  }

  TEST_CASE("zero roots are exact") {
    Polynomial p = Polynomial::from_roots({0.0, 0.0, 0.5});
    auto r = p.roots();
    CHECK(std::count(r.begin(), r.end(), cplx(0.0)) == 2);
  }

  TEST_CASE("rational functions cancel common roots") {
    Polynomial a = Polynomial::from_roots({0.5, 2.0});
    Polynomial b = Polynomial::from_roots({0.5, -3.0});
    RationalFunction f(a, b);
    CHECK(f.numerator().degree() == 1);
    CHECK(f.denominator().degree() == 1);
    CHECK(std::abs(f(0.3) - a(0.3) / b(0.3)) < 1e-13);
    CHECK(f.pole_radius() == doctest::Approx(3.0));
  }

  TEST_CASE("taylor coefficients match quadrature") {
    RationalFunction f(Polynomial({1.0, 2.0}), Polynomial::from_roots({cplx(1.5, 0.5), -2.0}));
    FourierVector t = f.taylor(30);
    FourierVector ref = oracle::grid_coeffs([&](cplx z) { return f(z); }, 0, 30);
    CHECK(max_abs_diff(t, ref, {0, 30}) < 1e-12);
    FourierVector te = f.taylor_eps(1e-14);
    double tail = 0.0;
    for (int n = te.hi() + 1; n < te.hi() + 200; ++n) tail += std::abs(f.taylor(n)[n]);
    CHECK(tail < 1e-13);
  }

  TEST_CASE("poles in the disk are rejected") {
    RationalFunction f(Polynomial({1.0}), Polynomial::from_roots({0.9}));
    CHECK_THROWS_AS(f.taylor_eps(1e-14), PoleInDisk);
    RationalFunction g(Polynomial({1.0}), Polynomial({0.0, 1.0}));
    CHECK_THROWS_AS(g.taylor(4), PoleInDisk);
  }
}
