#include "hardy/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hardy/errors.hpp"

namespace hardy {

bool operator==(const SymbolExpr& a, const SymbolExpr& b) {
  if (a.kind != b.kind || a.constant != b.constant || a.power != b.power || a.zeros != b.zeros ||
      a.coeffs != b.coeffs || a.den_coeffs != b.den_coeffs || a.arcs != b.arcs ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t k = 0; k < a.children.size(); ++k)
    if (!(*a.children[k] == *b.children[k])) return false;
  return true;
}

const char* to_string(SymbolExpr::Kind k) {
  switch (k) {
    case SymbolExpr::Kind::BlaschkeLit: return "BlaschkeLit";
    case SymbolExpr::Kind::Quotient: return "Quotient";
    case SymbolExpr::Kind::Poly: return "Poly";
    case SymbolExpr::Kind::RationalLit: return "RationalLit";
    case SymbolExpr::Kind::ArcLit: return "ArcLit";
    case SymbolExpr::Kind::Conj: return "Conj";
    case SymbolExpr::Kind::Product: return "Product";
  }
  return "?";
}

namespace {

using Ptr = std::shared_ptr<const SymbolExpr>;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  SymbolExpr parse() {
    SymbolExpr e = expr();
    ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "'*', '/' or end of input");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(const char* tok) {
    ws();
    std::size_t n = std::char_traits<char>::length(tok);
    if (s_.compare(pos_, n, tok) == 0) {
      pos_ += n;
      return true;
    }
    return false;
  }
  void expect(const char* tok) {
    if (!accept(tok)) throw SyntaxError(pos_, std::string("'") + tok + "'");
  }

  SymbolExpr expr() {
    SymbolExpr lhs = term();
    for (;;) {
      std::size_t at = (ws(), pos_);
      SymbolExpr::Kind k;
      if (accept("*")) k = SymbolExpr::Kind::Product;
      else if (accept("/")) k = SymbolExpr::Kind::Quotient;
      else return lhs;
      SymbolExpr rhs = term();
      SymbolExpr node;
      node.kind = k;
      node.offset = at;
      node.children = {std::make_shared<const SymbolExpr>(std::move(lhs)), std::make_shared<const SymbolExpr>(std::move(rhs))};
      lhs = std::move(node);
    }
  }

  SymbolExpr term() {
    ws();
    SymbolExpr e;
    e.offset = pos_;
    if (accept("B{")) {
      e.kind = SymbolExpr::Kind::BlaschkeLit;
      blaschke_fields(e);
      expect("}");
    } else if (accept("poly(")) {
      e.kind = SymbolExpr::Kind::Poly;
      e.coeffs = clist(')');
      if (e.coeffs.empty()) throw SyntaxError(pos_, "complex literal");
      expect(")");
    } else if (accept("rat(")) {
      e.kind = SymbolExpr::Kind::RationalLit;
      expect("[");
      e.coeffs = clist(']');
      expect("]");
      expect(",");
      expect("[");
      e.den_coeffs = clist(']');
      expect("]");
      expect(")");
      if (e.coeffs.empty() || e.den_coeffs.empty()) throw SyntaxError(pos_, "nonempty coefficient lists");
    } else if (accept("arc(")) {
      e.kind = SymbolExpr::Kind::ArcLit;
      do {
        expect("[");
        double a = real();
        expect(",");
        double b = real();
        expect("]");
        e.arcs.emplace_back(a, b);
      } while (accept(","));
      expect(")");
    } else if (accept("conj(")) {
      e.kind = SymbolExpr::Kind::Conj;
      e.children = {std::make_shared<const SymbolExpr>(expr())};
      expect(")");
    } else if (accept("(")) {
      e = expr();
      expect(")");
    } else if (peek() == 'z') {
      ++pos_;
      e.kind = SymbolExpr::Kind::BlaschkeLit;
      e.power = 1;
    } else if (starts_number()) {
      e.kind = SymbolExpr::Kind::Poly;
      e.coeffs = {complex()};
    } else {
      throw SyntaxError(pos_, "symbol term (B{...}, poly(...), rat(...), arc(...), conj(...), z, number or '(')");
    }
    return e;
  }

  void blaschke_fields(SymbolExpr& e) {
    bool seen_z = false, seen_p = false, seen_c = false;
    if (peek() == '}') return;
    do {
      std::size_t at = (ws(), pos_);
      if (accept("zeros")) {
        expect("=");
        if (seen_z) throw SyntaxError(at, "field not already given");
        seen_z = true;
        expect("[");
        e.zeros = clist(']');
        expect("]");
      } else if (accept("pow")) {
        expect("=");
        if (seen_p) throw SyntaxError(at, "field not already given");
        seen_p = true;
        e.power = integer();
      } else if (accept("c")) {
        expect("=");
        if (seen_c) throw SyntaxError(at, "field not already given");
        seen_c = true;
        e.constant = complex();
      } else {
        throw SyntaxError(at, "'zeros=', 'pow=' or 'c='");
      }
    } while (accept(","));
  }

  std::vector<cplx> clist(char close) {
    std::vector<cplx> out;
    if (peek() == close) return out;
    do out.push_back(complex());
    while (accept(","));
    return out;
  }

  bool starts_number() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-' || c == 'i';
  }

  int integer() {
    ws();
    int v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) throw SyntaxError(pos_, "integer");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }

  // Unsigned decimal literal; no whitespace skipping.
  bool try_unsigned(double& v) {
    std::size_t q = pos_;
    while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
    if (q < s_.size() && s_[q] == '.') {
      ++q;
      while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
    }
    if (q == pos_ || (q == pos_ + 1 && s_[pos_] == '.')) return false;
    if (q < s_.size() && (s_[q] == 'e' || s_[q] == 'E')) {
      std::size_t r = q + 1;
      if (r < s_.size() && (s_[r] == '+' || s_[r] == '-')) ++r;
      std::size_t d = r;
      while (r < s_.size() && std::isdigit(static_cast<unsigned char>(s_[r]))) ++r;
      if (r > d) q = r;
    }
    auto res = std::from_chars(s_.data() + pos_, s_.data() + q, v);
    if (res.ec != std::errc()) return false;
    pos_ = q;
    return true;
  }

  double real() {
    ws();
    double sign = 1.0;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) sign = s_[pos_++] == '-' ? -1.0 : 1.0;
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      return sign * kPi;
    }
    double v;
    if (!try_unsigned(v)) throw SyntaxError(pos_, "real literal");
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      v *= kPi;
    }
    return sign * v;
  }

  cplx complex() {
    ws();
    double sign = 1.0;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) sign = s_[pos_++] == '-' ? -1.0 : 1.0;
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return {0.0, sign};
    }
    double v;
    if (!try_unsigned(v)) throw SyntaxError(pos_, "complex literal");
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return {0.0, sign * v};
    }
    double re = sign * v;
    std::size_t save = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      double s2 = s_[pos_++] == '-' ? -1.0 : 1.0;
      double w = 1.0;
      bool digits = try_unsigned(w);
      if (pos_ < s_.size() && s_[pos_] == 'i') {
        ++pos_;
        return {re, s2 * (digits ? w : 1.0)};
      }
      pos_ = save;
    }
    return {re, 0.0};
  }
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string cnum(cplx c) {
  if (c.imag() == 0.0) return num(c.real());
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

std::string clist_str(const std::vector<cplx>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + cnum(v[k]);
  return s;
}

struct Value {
  enum class K { Inner, Unimod, Rational, Arc } k;
  BlaschkeProduct b;
  cplx c = 1.0;
  BlaschkeProduct num, den;
  RationalFunction r;
  ArcSet E;
};

bool is_const(const RationalFunction& r) { return r.numerator().degree() == 0 && r.denominator().degree() == 0; }
cplx const_value(const RationalFunction& r) { return r.numerator().coeffs()[0] / r.denominator().coeffs()[0]; }

bool unimod_like(const Value& v) {
  if (v.k == Value::K::Inner || v.k == Value::K::Unimod) return true;
  return v.k == Value::K::Rational && is_const(v.r) && std::abs(std::abs(const_value(v.r)) - 1.0) <= 1e-12;
}

// (c, num, den) with num, den of constant 1
Value as_unimod(const Value& v) {
  Value o;
  o.k = Value::K::Unimod;
  if (v.k == Value::K::Unimod) return v;
  if (v.k == Value::K::Inner) {
    o.c = v.b.constant();
    o.num = v.b.with_constant(1.0);
  } else {
    o.c = const_value(v.r);
  }
  return o;
}

bool rational_like(const Value& v) {
  return v.k == Value::K::Inner || v.k == Value::K::Rational ||
         (v.k == Value::K::Unimod && v.den.degree() == 0);
}

RationalFunction as_rational(const Value& v) {
  if (v.k == Value::K::Rational) return v.r;
  if (v.k == Value::K::Inner) return v.b.to_rational();
  RationalFunction n = v.num.to_rational();
  return RationalFunction(n.numerator().scaled(v.c), n.denominator());
}

Value combine(const Value& a, const Value& b, bool quotient, std::size_t at) {
  if (a.k == Value::K::Arc || b.k == Value::K::Arc)
    throw SemanticError(at, "arc indicators cannot be multiplied or divided");
  if (!quotient && a.k == Value::K::Inner && b.k == Value::K::Inner) {
    Value o;
    o.k = Value::K::Inner;
    o.b = multiply(a.b, b.b);
    return o;
  }
  bool any_fun = a.k != Value::K::Rational || b.k != Value::K::Rational;
  if (any_fun && unimod_like(a) && unimod_like(b)) {
    Value x = as_unimod(a), y = as_unimod(b), o;
    o.k = Value::K::Unimod;
    if (quotient) {
      o.c = x.c * std::conj(y.c);
      o.num = multiply(x.num, y.den);
      o.den = multiply(x.den, y.num);
    } else {
      o.c = x.c * y.c;
      o.num = multiply(x.num, y.num);
      o.den = multiply(x.den, y.den);
    }
    if (o.den.degree() == 0) {
      o.k = Value::K::Inner;
      o.b = o.num.with_constant(o.c);
    }
    return o;
  }
  if (rational_like(a) && rational_like(b)) {
    RationalFunction x = as_rational(a), y = as_rational(b);
    Value o;
    o.k = Value::K::Rational;
    if (quotient) {
      if (y.is_zero()) throw SemanticError(at, "division by zero");
      o.r = x / y;
    } else {
      o.r = x * y;
    }
    return o;
  }
  throw SemanticError(at, "product of a coanalytic unimodular symbol and a non-unimodular function has no symbol class");
}

Value eval(const SymbolExpr& e) {
  Value v;
  switch (e.kind) {
    case SymbolExpr::Kind::BlaschkeLit: {
      if (std::abs(std::abs(e.constant) - 1.0) > 1e-12) throw SemanticError(e.offset, "Blaschke constant must be unimodular");
      if (e.power < 0) throw SemanticError(e.offset, "Blaschke power must be nonnegative");
      std::vector<BlaschkeZero> zs;
      for (auto a : e.zeros) {
        if (!(std::abs(a) < kBoundaryReject)) throw SemanticError(e.offset, "Blaschke zero outside the open disk");
        zs.push_back({a, 1});
      }
      v.k = Value::K::Inner;
      v.b = BlaschkeProduct(e.constant, e.power, std::move(zs));
      return v;
    }
    case SymbolExpr::Kind::Poly:
      v.k = Value::K::Rational;
      v.r = RationalFunction(Polynomial(e.coeffs));
      return v;
    case SymbolExpr::Kind::RationalLit: {
      Polynomial q(e.den_coeffs);
      if (q.is_zero() || std::all_of(e.den_coeffs.begin(), e.den_coeffs.end(), [](cplx c) { return c == 0.0; }))
        throw SemanticError(e.offset, "zero denominator");
      v.k = Value::K::Rational;
      v.r = RationalFunction(Polynomial(e.coeffs), q);
      return v;
    }
    case SymbolExpr::Kind::ArcLit:
      try {
        v.k = Value::K::Arc;
        v.E = ArcSet(e.arcs);
      } catch (const std::invalid_argument& ex) {
        throw SemanticError(e.offset, ex.what());
      }
      if (v.E.arcs().empty()) throw SemanticError(e.offset, "empty arc set");
      return v;
    case SymbolExpr::Kind::Conj: {
      Value x = eval(*e.children[0]);
      if (x.k == Value::K::Arc) return x;
      if (x.k == Value::K::Rational && is_const(x.r)) {
        x.r = RationalFunction(Polynomial::constant(std::conj(const_value(x.r))));
        return x;
      }
      if (!unimod_like(x)) throw SemanticError(e.offset, "conjugate of a non-unimodular rational function has no symbol class");
      Value u = as_unimod(x);
      std::swap(u.num, u.den);
      u.c = std::conj(u.c);
      if (u.den.degree() == 0) {
        u.k = Value::K::Inner;
        u.b = u.num.with_constant(u.c);
      }
      return u;
    }
    case SymbolExpr::Kind::Product:
    case SymbolExpr::Kind::Quotient:
      return combine(eval(*e.children[0]), eval(*e.children[1]), e.kind == SymbolExpr::Kind::Quotient, e.offset);
  }
  throw SemanticError(e.offset, "unknown node");
}

}  // namespace

SymbolExpr parse_symbol(const std::string& text) { return Parser(text).parse(); }

std::string print_symbol(const SymbolExpr& e) {
  switch (e.kind) {
    case SymbolExpr::Kind::BlaschkeLit: {
      std::string s = "B{zeros=[" + clist_str(e.zeros) + "]";
      if (e.power != 0) s += ",pow=" + std::to_string(e.power);
      if (e.constant != cplx(1.0)) s += ",c=" + cnum(e.constant);
      return s + "}";
    }
    case SymbolExpr::Kind::Poly: return "poly(" + clist_str(e.coeffs) + ")";
    case SymbolExpr::Kind::RationalLit: return "rat([" + clist_str(e.coeffs) + "],[" + clist_str(e.den_coeffs) + "])";
    case SymbolExpr::Kind::ArcLit: {
      std::string s = "arc(";
      for (std::size_t k = 0; k < e.arcs.size(); ++k)
        s += (k ? ",[" : "[") + num(e.arcs[k].first) + "," + num(e.arcs[k].second) + "]";
      return s + ")";
    }
    case SymbolExpr::Kind::Conj: return "conj(" + print_symbol(*e.children[0]) + ")";
    case SymbolExpr::Kind::Product:
    case SymbolExpr::Kind::Quotient: {
      const SymbolExpr& r = *e.children[1];
      std::string rhs = print_symbol(r);
      if (r.kind == SymbolExpr::Kind::Product || r.kind == SymbolExpr::Kind::Quotient) rhs = "(" + rhs + ")";
      return print_symbol(*e.children[0]) + (e.kind == SymbolExpr::Kind::Product ? "*" : "/") + rhs;
    }
  }
  return "";
}

SymbolSpec evaluate_symbol(const SymbolExpr& e) {
  Value v = eval(e);
  switch (v.k) {
    case Value::K::Inner: return SymbolSpec::unimodular(v.b);
    case Value::K::Unimod: return SymbolSpec::unimodular(v.c, v.num, v.den);
    case Value::K::Arc: return SymbolSpec::arc(v.E);
    case Value::K::Rational:
      if (v.r.is_zero()) throw SemanticError(e.offset, "zero symbol");
      try {
        return SymbolSpec::analytic(v.r);
      } catch (const PoleInDisk& ex) {
        throw SemanticError(e.offset, ex.what());
      }
  }
  throw SemanticError(e.offset, "unknown symbol class");
}

BlaschkeProduct evaluate_inner(const SymbolExpr& e) {
  Value v = eval(e);
  if (v.k == Value::K::Inner) return v.b;
  if (v.k == Value::K::Rational && unimod_like(v)) return BlaschkeProduct(const_value(v.r), 0, {});
  throw SemanticError(e.offset, "inner argument must be a finite Blaschke product");
}

}  // namespace hardy
