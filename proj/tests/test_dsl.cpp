#include <random>

#include "doctest.h"
#include "hardy/dsl.hpp"
#include "hardy/errors.hpp"

using namespace hardy;

namespace {

std::size_t syntax_offset(const std::string& s) {
  try {
    parse_symbol(s);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

std::size_t semantic_offset(const std::string& s) {
  try {
    evaluate_symbol(parse_symbol(s));
  } catch (const SemanticError& e) {
    return e.offset();
  }
  return std::string::npos;
}

cplx rc(std::mt19937_64& g) {
  std::uniform_real_distribution<double> U(-0.6, 0.6);
  double re = U(g), im = (g() % 2) ? U(g) : 0.0;
  return {re, im};
}

std::shared_ptr<const SymbolExpr> random_expr(std::mt19937_64& g, int depth) {
  SymbolExpr e;
  int pick = depth <= 0 ? static_cast<int>(g() % 4) : static_cast<int>(g() % 7);
  switch (pick) {
    case 0:
      e.kind = SymbolExpr::Kind::BlaschkeLit;
      for (int k = static_cast<int>(g() % 3); k > 0; --k) e.zeros.push_back(rc(g));
      e.power = static_cast<int>(g() % 3);
      if (g() % 2) e.constant = std::polar(1.0, 0.1 * static_cast<double>(g() % 60));
      break;
    case 1:
      e.kind = SymbolExpr::Kind::Poly;
      for (int k = 1 + static_cast<int>(g() % 3); k > 0; --k) e.coeffs.push_back(rc(g));
      break;
    case 2:
      e.kind = SymbolExpr::Kind::RationalLit;
      e.coeffs = {rc(g), rc(g)};
      e.den_coeffs = {1.0, rc(g)};
      break;
    case 3:
      e.kind = SymbolExpr::Kind::ArcLit;
      e.arcs = {{0.25 * static_cast<double>(g() % 4), 1.5}, {2.0, 2.0 + 0.1 * static_cast<double>(1 + g() % 9)}};
      break;
    case 4:
      e.kind = SymbolExpr::Kind::Conj;
      e.children = {random_expr(g, depth - 1)};
      break;
    default:
      e.kind = pick == 5 ? SymbolExpr::Kind::Product : SymbolExpr::Kind::Quotient;
      e.children = {random_expr(g, depth - 1), random_expr(g, depth - 1)};
      break;
  }
  return std::make_shared<const SymbolExpr>(e);
}

}  // namespace

TEST_SUITE("dsl") {
  TEST_CASE("blaschke literal") {
    SymbolExpr e = parse_symbol("B{zeros=[0.5]}");
    CHECK(e.kind == SymbolExpr::Kind::BlaschkeLit);
    REQUIRE(e.zeros.size() == 1);
    CHECK(e.zeros[0] == cplx(0.5));
    SymbolExpr f = parse_symbol(" B{ c = -i , pow=2, zeros=[0.1+0.2i, -3e-1-0.5i, i] } ");
    CHECK(f.constant == cplx(0, -1));
    CHECK(f.power == 2);
    CHECK(f.zeros[1] == cplx(-0.3, -0.5));
    CHECK(f.zeros[2] == cplx(0, 1));
  }

  TEST_CASE("quotient of blaschke literals") {
    SymbolExpr e = parse_symbol("B{zeros=[-0.3]}/B{zeros=[0.5]}");
    CHECK(e.kind == SymbolExpr::Kind::Quotient);
    SymbolSpec s = evaluate_symbol(e);
    REQUIRE(s.is_unimodular_rational());
    CHECK(equal_up_to_phase(s.unimodular_data().num, BlaschkeProduct::factor(-0.3)));
    CHECK(equal_up_to_phase(s.unimodular_data().den, BlaschkeProduct::factor(0.5)));
  }

  TEST_CASE("poly literal") {
    SymbolSpec s = evaluate_symbol(parse_symbol("poly(0.5,0.5)"));
    REQUIRE(s.is_analytic_rational());
    CHECK(std::abs(s.analytic_data().f(1.0) - 1.0) < 1e-15);
    CHECK(std::abs(s.analytic_data().f(-1.0)) < 1e-15);
  }

  TEST_CASE("other forms") {
    SymbolSpec a = evaluate_symbol(parse_symbol("conj(z)"));
    REQUIRE(a.is_unimodular_rational());
    CHECK(a.unimodular_data().den.degree() == 1);
    CHECK(evaluate_symbol(parse_symbol("arc([0, pi])")).is_arc());
    CHECK(evaluate_symbol(parse_symbol("arc([0,0.5pi],[pi, 1.5pi])")).arc_data().E.measure() == doctest::Approx(0.5));
    CHECK(evaluate_symbol(parse_symbol("rat([1],[1,-0.5])")).is_analytic_rational());
    CHECK(evaluate_symbol(parse_symbol("2*z")).is_analytic_rational());
    CHECK(evaluate_symbol(parse_symbol("(z*z)/B{zeros=[0.2]}")).is_unimodular_rational());
    CHECK(evaluate_inner(parse_symbol("z*B{zeros=[0.5]}")).degree() == 2);
    CHECK(evaluate_inner(parse_symbol("i")).degree() == 0);
  }

  TEST_CASE("syntax errors carry byte offsets") {
    CHECK(syntax_offset("B{zeros=[0.5}") == 12);
    CHECK(syntax_offset("poly()") == 5);
    CHECK(syntax_offset("z + z") == 2);
    CHECK(syntax_offset("") == 0);
    CHECK(syntax_offset("B{foo=1}") == 2);
    CHECK(syntax_offset("conj(z") == 6);
    CHECK(syntax_offset("B{pow=1,pow=2}") == 8);
  }

  TEST_CASE("semantic errors") {
    CHECK(semantic_offset("B{zeros=[1.5]}") == 0);
    CHECK(semantic_offset("z*arc([0,1],[0.5,2])") == 2);
    CHECK(semantic_offset("z*arc([0,1])") == 1);
    CHECK(semantic_offset("rat([1],[0.5,-1])") == 0);
    CHECK(semantic_offset("conj(poly(1,1))") == 0);
    CHECK(semantic_offset("B{c=2}") == 0);
    CHECK_THROWS_AS(evaluate_inner(parse_symbol("poly(0.5,0.5)")), SemanticError);
    CHECK_THROWS_AS(evaluate_inner(parse_symbol("conj(z)")), SemanticError);
  }

  TEST_CASE("property: print then parse is the identity on ASTs") {
    std::mt19937_64 g(41);
    for (int k = 0; k < 300; ++k) {
      auto e = random_expr(g, 3);
      std::string text = print_symbol(*e);
      SymbolExpr back = parse_symbol(text);
      CHECK_MESSAGE(back == *e, text);
      CHECK(print_symbol(back) == text);
    }
  }
}
