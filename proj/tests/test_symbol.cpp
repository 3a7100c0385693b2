#include "doctest.h"
#include "hardy/errors.hpp"
#include "hardy/symbol.hpp"
#include "oracles.hpp"

using namespace hardy;

TEST_SUITE("symbol") {
  TEST_CASE("unimodular quotients reduce and fold constants") {
    BlaschkeProduct a(cplx(0, 1), 0, {{0.5, 1}, {0.2, 1}});
    BlaschkeProduct b(1.0, 0, {{0.5, 1}});
    SymbolSpec s = SymbolSpec::unimodular(1.0, a, b);
    const auto& r = s.unimodular_data();
    CHECK(r.num.degree() == 1);
    CHECK(r.den.degree() == 0);
    CHECK(std::abs(r.c - cplx(0, 1)) < 1e-15);
    for (double t : {0.3, 2.0}) CHECK(std::abs(s.evaluate(t) - a(std::polar(1.0, t)) / b(std::polar(1.0, t))) < 1e-14);
    CHECK_THROWS_AS(SymbolSpec::unimodular(2.0, a, b), InvalidBlaschke);
  }

  TEST_CASE("coefficients match quadrature for each class") {
    SymbolSpec u = SymbolSpec::unimodular(1.0, BlaschkeProduct::factor(-0.3), BlaschkeProduct::factor(0.5));
    FourierVector c = u.coefficients();
    FourierVector ref = oracle::grid_coeffs([&](cplx z) { return u.evaluate(std::arg(z)); }, -30, 30);
    CHECK(max_abs_diff(c, ref, {-30, 30}) < 1e-12);
    SymbolSpec a = SymbolSpec::analytic(RationalFunction(Polynomial({1.0}), Polynomial({1.0, -0.4})));
    FourierVector ca = a.coefficients();
    CHECK(ca.lo() == 0);
    CHECK(std::abs(ca[3] - 0.064) < 1e-15);
    SymbolSpec e = SymbolSpec::arc(ArcSet({{0.0, kPi}}));
    CHECK(e.window(8).lo() == -8);
    CHECK(std::abs(e.window(8)[1] - oracle::arc_coeff(0.0, kPi, 1)) < 1e-15);
  }

  TEST_CASE("sup norm and conjugation") {
    SymbolSpec a = SymbolSpec::analytic(RationalFunction(Polynomial({0.5, 0.5})));
    double arg = 0.0;
    CHECK(rational_sup_norm(a.analytic_data().f, &arg) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(std::remainder(arg, kTwoPi)) < 1e-6);
    CHECK_THROWS_AS(a.conj(), UnsupportedCombination);
    SymbolSpec u = SymbolSpec::unimodular(cplx(0, 1), BlaschkeProduct::factor(0.2), BlaschkeProduct::z_power(1));
    for (double t : {0.1, 1.9}) CHECK(std::abs(u.conj().evaluate(t) - std::conj(u.evaluate(t))) < 1e-14);
    CHECK_THROWS_AS(SymbolSpec::analytic(RationalFunction(Polynomial({1.0}), Polynomial({1.0, -1.0}))), PoleInDisk);
    CHECK(u.class_name() == "RationalUnimodular");
  }
}
