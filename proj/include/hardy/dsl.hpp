#pragma once

// Symbol language:
//   expr  := term (('*' | '/') term)*
//   term  := 'B{' field (',' field)* '}' | 'poly(' complex (',' complex)* ')'
//          | 'rat([' clist '],[' clist '])' | 'arc(' '[' real ',' real ']' (',' ...)* ')'
//          | 'conj(' expr ')' | 'z' | complex | '(' expr ')'
//   field := 'zeros=[' clist? ']' | 'pow=' int | 'c=' complex
// Complex literals look like 0.5, -i, 1-2i, 0.3+0.1i; reals also accept pi and 0.5pi.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hardy/inner.hpp"
#include "hardy/symbol.hpp"

namespace hardy {

struct SymbolExpr {
  enum class Kind { BlaschkeLit, Quotient, Poly, RationalLit, ArcLit, Conj, Product };

  Kind kind = Kind::Poly;
  std::size_t offset = 0;
  cplx constant = 1.0;
  int power = 0;
  std::vector<cplx> zeros;
  /// Poly coefficients, or the numerator of a RationalLit.
  std::vector<cplx> coeffs;
  std::vector<cplx> den_coeffs;
  std::vector<std::pair<double, double>> arcs;
  std::vector<std::shared_ptr<const SymbolExpr>> children;

  /// Structural equality; offsets are ignored.
  friend bool operator==(const SymbolExpr& a, const SymbolExpr& b);
};

const char* to_string(SymbolExpr::Kind k);

/// Throws SyntaxError with the byte offset of the failure.
SymbolExpr parse_symbol(const std::string& text);
std::string print_symbol(const SymbolExpr& e);

/// Throws SemanticError for zeros outside the disk, overlapping arcs, poles in
/// the disk, and combinations with no symbol class.
SymbolSpec evaluate_symbol(const SymbolExpr& e);
/// Throws SemanticError unless the expression is a finite Blaschke product.
BlaschkeProduct evaluate_inner(const SymbolExpr& e);

}  // namespace hardy
