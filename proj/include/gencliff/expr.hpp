#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gencliff/groups.hpp"

namespace gencliff {

enum class TokenKind {
  Generator,  // e1, e2, ... (also bare 'e' for the identity)
  Number,
  ImaginaryLiteral,  // 2i, 0.5i
  ImaginaryUnit,     // i
  Omega,             // omega or w
  Identifier,        // function names
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  Comma,
  End,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position = 0;
  double number = 0.0;  // Number / ImaginaryLiteral payload
  int generator = 0;    // Generator subscript; 0 means the identity 'e'
};

/// Total on any byte string: returns tokens or throws ParseError.
std::vector<Token> lex(std::string_view input);

struct AstNode;
using AstPtr = std::unique_ptr<AstNode>;

/// expr := term (('+'|'-') term)*; term := unary ('*' unary)*;
/// unary := '-' unary | factor; factor := atom ('^' uint)?;
/// atom := generator | 'omega' | 'i' | number | '(' expr ')' | ident '(' args ')'.
struct AstNode {
  enum class Kind { Scalar, Generator, Identity, Omega, Add, Sub, Mul, Neg, Pow, Call };

  Kind kind;
  std::size_t position = 0;
  Complex scalar;                // Scalar
  int generator = 0;             // Generator
  unsigned exponent = 0;         // Pow
  std::string name;              // Call
  std::vector<AstPtr> children;  // operands / arguments
};

/// Parses and validates against the context (generator range, arities).
AstPtr parse(std::string_view input, const AlgebraContext& ctx);

using Value = std::variant<Complex, AlgebraElement, ComplexMatrix, CharPolyResult>;

/// Functions: herm, inv, adj, det, trace, norm, underline (1 element arg);
/// grade, modgrade, auto (element, integer); charpoly, rep.
/// Scalars entering element arithmetic are promoted to scalar*e.
Value evaluate(const AstNode& node, const AlgebraContext& ctx);

/// 12-significant-digit "a+bi" form that re-parses to the same value.
std::string format_complex(Complex c);

/// "e" for the identity, else "e1^2*e2" style.
std::string monomial_text(const AlgebraContext& ctx, long index);

/// Canonical text: nonzero terms in linear-index order, "(a+bi)*mono"
/// joined with " + "; the zero element prints "0".
std::string element_text(const AlgebraElement& u);

std::string value_text(const Value& value);

}  // namespace gencliff
