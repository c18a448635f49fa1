#include "gencliff/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>

namespace gencliff {

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> lex(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  const std::size_t n = input.size();

  auto push = [&](TokenKind kind, std::size_t start, std::size_t len) -> Token& {
    tokens.push_back(Token{kind, std::string(input.substr(start, len)), start});
    return tokens.back();
  };

  while (pos < n) {
    const char c = input[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    switch (c) {
      case '+': push(TokenKind::Plus, pos, 1); ++pos; continue;
      case '-': push(TokenKind::Minus, pos, 1); ++pos; continue;
      case '*': push(TokenKind::Star, pos, 1); ++pos; continue;
      case '^': push(TokenKind::Caret, pos, 1); ++pos; continue;
      case '(': push(TokenKind::LParen, pos, 1); ++pos; continue;
      case ')': push(TokenKind::RParen, pos, 1); ++pos; continue;
      case ',': push(TokenKind::Comma, pos, 1); ++pos; continue;
      default: break;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos;
      while (pos < n && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
      if (pos < n && input[pos] == '.') {
        ++pos;
        while (pos < n && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
      }
      if (pos < n && (input[pos] == 'e' || input[pos] == 'E')) {
        std::size_t k = pos + 1;
        if (k < n && (input[k] == '+' || input[k] == '-')) ++k;
        if (k < n && std::isdigit(static_cast<unsigned char>(input[k]))) {
          pos = k;
          while (pos < n && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
        }
      }
      const std::string text(input.substr(start, pos - start));
      double value = 0.0;
      try {
        value = std::stod(text);
      } catch (const std::exception&) {
        throw ParseError("malformed number '" + text + "'", start);
      }
      // Imaginary suffix: 2i, 1.5e-3i.
      if (pos < n && input[pos] == 'i' && (pos + 1 >= n || !word_char(input[pos + 1]))) {
        ++pos;
        Token& t = push(TokenKind::ImaginaryLiteral, start, pos - start);
        t.number = value;
      } else {
        Token& t = push(TokenKind::Number, start, pos - start);
        t.number = value;
      }
      continue;
    }

    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos;
      if (c == 'e' && pos + 1 < n && std::isdigit(static_cast<unsigned char>(input[pos + 1]))) {
        ++pos;
        long index = 0;
        while (pos < n && std::isdigit(static_cast<unsigned char>(input[pos]))) {
          index = index * 10 + (input[pos] - '0');
          if (index > 1000000) throw ParseError("generator subscript too large", start);
          ++pos;
        }
        Token& t = push(TokenKind::Generator, start, pos - start);
        t.generator = static_cast<int>(index);
        continue;
      }
      while (pos < n && std::isalpha(static_cast<unsigned char>(input[pos]))) ++pos;
      const std::string word(input.substr(start, pos - start));
      if (word == "omega" || word == "w") {
        push(TokenKind::Omega, start, pos - start);
      } else if (word == "i") {
        push(TokenKind::ImaginaryUnit, start, pos - start);
      } else if (word == "e") {
        Token& t = push(TokenKind::Generator, start, pos - start);
        t.generator = 0;  // identity element
      } else {
        push(TokenKind::Identifier, start, pos - start);
      }
      continue;
    }

    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  push(TokenKind::End, n, 0);
  return tokens;
}

namespace {

const std::map<std::string, int>& function_arities() {
  static const std::map<std::string, int> table = {
      {"herm", 1},  {"inv", 1},      {"adj", 1},      {"det", 1},
      {"trace", 1}, {"norm", 1},     {"underline", 1}, {"grade", 2},
      {"modgrade", 2}, {"auto", 2},  {"charpoly", 1}, {"rep", 1},
  };
  return table;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, const AlgebraContext& ctx)
      : tokens_(std::move(tokens)), ctx_(ctx) {}

  AstPtr run() {
    AstPtr root = parse_expr();
    if (peek().kind != TokenKind::End)
      throw ParseError("unexpected trailing input", peek().position);
    return root;
  }

private:
  const Token& peek() const { return tokens_[cursor_]; }
  const Token& advance() { return tokens_[cursor_++]; }

  bool match(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++cursor_;
    return true;
  }

  void expect(TokenKind kind, const char* what) {
    if (!match(kind)) throw ParseError(std::string("expected ") + what, peek().position);
  }

  static AstPtr make(AstNode::Kind kind, std::size_t position) {
    auto node = std::make_unique<AstNode>();
    node->kind = kind;
    node->position = position;
    return node;
  }

  AstPtr parse_expr() {
    AstPtr left = parse_term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const Token op = advance();
      AstPtr node = make(op.kind == TokenKind::Plus ? AstNode::Kind::Add : AstNode::Kind::Sub,
                         op.position);
      node->children.push_back(std::move(left));
      node->children.push_back(parse_term());
      left = std::move(node);
    }
    return left;
  }

  AstPtr parse_term() {
    AstPtr left = parse_unary();
    while (peek().kind == TokenKind::Star) {
      const Token op = advance();
      AstPtr node = make(AstNode::Kind::Mul, op.position);
      node->children.push_back(std::move(left));
      node->children.push_back(parse_unary());
      left = std::move(node);
    }
    return left;
  }

  AstPtr parse_unary() {
    if (peek().kind == TokenKind::Minus) {
      const Token op = advance();
      AstPtr node = make(AstNode::Kind::Neg, op.position);
      node->children.push_back(parse_unary());
      return node;
    }
    return parse_factor();
  }

  AstPtr parse_factor() {
    AstPtr atom = parse_atom();
    if (peek().kind == TokenKind::Caret) {
      const Token op = advance();
      const Token& exponent = peek();
      if (exponent.kind != TokenKind::Number ||
          exponent.lexeme.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("exponent must be a nonnegative integer", exponent.position);
      advance();
      AstPtr node = make(AstNode::Kind::Pow, op.position);
      node->exponent = static_cast<unsigned>(exponent.number);
      node->children.push_back(std::move(atom));
      return node;
    }
    return atom;
  }

  AstPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number: {
        advance();
        AstPtr node = make(AstNode::Kind::Scalar, t.position);
        node->scalar = Complex(t.number, 0.0);
        return node;
      }
      case TokenKind::ImaginaryLiteral: {
        advance();
        AstPtr node = make(AstNode::Kind::Scalar, t.position);
        node->scalar = Complex(0.0, t.number);
        return node;
      }
      case TokenKind::ImaginaryUnit: {
        advance();
        AstPtr node = make(AstNode::Kind::Scalar, t.position);
        node->scalar = Complex(0.0, 1.0);
        return node;
      }
      case TokenKind::Omega: {
        advance();
        return make(AstNode::Kind::Omega, t.position);
      }
      case TokenKind::Generator: {
        advance();
        if (t.generator == 0) return make(AstNode::Kind::Identity, t.position);
        if (t.generator > ctx_.d())
          throw ParseError("generator index out of range [1, " +
                               std::to_string(ctx_.d()) + "]",
                           t.position);
        AstPtr node = make(AstNode::Kind::Generator, t.position);
        node->generator = t.generator;
        return node;
      }
      case TokenKind::LParen: {
        advance();
        AstPtr inner = parse_expr();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      case TokenKind::Identifier: {
        advance();
        const auto it = function_arities().find(t.lexeme);
        if (it == function_arities().end())
          throw ParseError("unknown function '" + t.lexeme + "'", t.position);
        expect(TokenKind::LParen, "'(' after function name");
        AstPtr node = make(AstNode::Kind::Call, t.position);
        node->name = t.lexeme;
        if (peek().kind != TokenKind::RParen) {
          node->children.push_back(parse_expr());
          while (match(TokenKind::Comma)) node->children.push_back(parse_expr());
        }
        expect(TokenKind::RParen, "')'");
        if (static_cast<int>(node->children.size()) != it->second)
          throw ParseError("function '" + t.lexeme + "' expects " +
                               std::to_string(it->second) + " argument(s)",
                           t.position);
        return node;
      }
      default:
        throw ParseError("expected an operand", t.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  const AlgebraContext& ctx_;
};

AlgebraElement as_element(const Value& value, const AlgebraContext& ctx) {
  if (const auto* scalar = std::get_if<Complex>(&value))
    return scalar_element(ctx, *scalar);
  if (const auto* element = std::get_if<AlgebraElement>(&value)) return *element;
  throw std::invalid_argument("matrix or charpoly values cannot enter arithmetic");
}

long as_integer(const Value& value) {
  const auto* scalar = std::get_if<Complex>(&value);
  if (scalar == nullptr) throw std::invalid_argument("expected an integer argument");
  const double rounded = std::round(scalar->real());
  if (std::abs(scalar->imag()) > 1e-9 || std::abs(scalar->real() - rounded) > 1e-9)
    throw std::invalid_argument("expected an integer argument");
  return static_cast<long>(rounded);
}

Value eval_call(const AstNode& node, const AlgebraContext& ctx) {
  std::vector<Value> args;
  args.reserve(node.children.size());
  for (const AstPtr& child : node.children) args.push_back(evaluate(*child, ctx));

  const std::string& name = node.name;
  if (name == "herm") return hermitian_conjugate(as_element(args[0], ctx));
  if (name == "inv") return inverse(as_element(args[0], ctx));
  if (name == "adj") return adjugate(as_element(args[0], ctx));
  if (name == "det") return determinant(as_element(args[0], ctx));
  if (name == "trace") return trace_op(as_element(args[0], ctx));
  if (name == "norm") return Complex(norm(as_element(args[0], ctx)), 0.0);
  if (name == "underline") return underline(as_element(args[0], ctx));
  if (name == "grade")
    return grade_project(as_element(args[0], ctx), static_cast<int>(as_integer(args[1])));
  if (name == "modgrade")
    return mod_grade_project(as_element(args[0], ctx), static_cast<int>(as_integer(args[1])));
  if (name == "auto")
    return grade_automorphism(as_element(args[0], ctx), static_cast<int>(as_integer(args[1])));
  if (name == "charpoly") return faddeev_leverrier(as_element(args[0], ctx));
  if (name == "rep") return represent(as_element(args[0], ctx));
  throw std::invalid_argument("unknown function '" + name + "'");
}

}  // namespace

AstPtr parse(std::string_view input, const AlgebraContext& ctx) {
  return Parser(lex(input), ctx).run();
}

Value evaluate(const AstNode& node, const AlgebraContext& ctx) {
  switch (node.kind) {
    case AstNode::Kind::Scalar: return node.scalar;
    case AstNode::Kind::Omega: return ctx.omega();
    case AstNode::Kind::Identity: return identity(ctx);
    case AstNode::Kind::Generator: return generator(ctx, node.generator);
    case AstNode::Kind::Neg: {
      const Value inner = evaluate(*node.children[0], ctx);
      if (const auto* scalar = std::get_if<Complex>(&inner)) return -*scalar;
      if (const auto* element = std::get_if<AlgebraElement>(&inner)) return -*element;
      throw std::invalid_argument("matrix or charpoly values cannot be negated");
    }
    case AstNode::Kind::Add:
    case AstNode::Kind::Sub: {
      const Value lhs = evaluate(*node.children[0], ctx);
      const Value rhs = evaluate(*node.children[1], ctx);
      const bool add = node.kind == AstNode::Kind::Add;
      if (std::holds_alternative<Complex>(lhs) && std::holds_alternative<Complex>(rhs)) {
        const Complex a = std::get<Complex>(lhs);
        const Complex b = std::get<Complex>(rhs);
        return add ? a + b : a - b;
      }
      const AlgebraElement a = as_element(lhs, ctx);
      const AlgebraElement b = as_element(rhs, ctx);
      return add ? a + b : a - b;
    }
    case AstNode::Kind::Mul: {
      const Value lhs = evaluate(*node.children[0], ctx);
      const Value rhs = evaluate(*node.children[1], ctx);
      if (std::holds_alternative<Complex>(lhs) && std::holds_alternative<Complex>(rhs))
        return std::get<Complex>(lhs) * std::get<Complex>(rhs);
      if (const auto* scalar = std::get_if<Complex>(&lhs))
        return *scalar * as_element(rhs, ctx);
      if (const auto* scalar = std::get_if<Complex>(&rhs))
        return as_element(lhs, ctx) * *scalar;
      return multiply(as_element(lhs, ctx), as_element(rhs, ctx));
    }
    case AstNode::Kind::Pow: {
      const Value base = evaluate(*node.children[0], ctx);
      if (const auto* scalar = std::get_if<Complex>(&base)) {
        Complex acc(1.0, 0.0);
        Complex b = *scalar;
        unsigned n = node.exponent;
        while (n > 0) {
          if (n & 1u) acc *= b;
          n >>= 1u;
          if (n > 0) b *= b;
        }
        return acc;
      }
      return pow(as_element(base, ctx), node.exponent);
    }
    case AstNode::Kind::Call: return eval_call(node, ctx);
  }
  throw std::invalid_argument("malformed syntax tree");
}

std::string format_complex(Complex c) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", c.real());
  std::string out = buffer;
  std::snprintf(buffer, sizeof buffer, "%.12g", std::abs(c.imag()));
  out += std::signbit(c.imag()) ? '-' : '+';
  out += buffer;
  out += 'i';
  return out;
}

std::string monomial_text(const AlgebraContext& ctx, long index) {
  if (index == 0) return "e";
  const ExponentTuple t = ctx.tuple_of(index);
  std::string out;
  for (int a = 0; a < ctx.d(); ++a) {
    const int j = t.exponents[a];
    if (j == 0) continue;
    if (!out.empty()) out += '*';
    out += 'e';
    out += std::to_string(a + 1);
    if (j > 1) {
      out += '^';
      out += std::to_string(j);
    }
  }
  return out;
}

std::string element_text(const AlgebraElement& u) {
  const AlgebraContext& ctx = u.context();
  std::string out;
  for (long i = 0; i < ctx.dim(); ++i) {
    const Complex c = u.coeffs()(i);
    if (c == Complex(0.0, 0.0)) continue;
    if (!out.empty()) out += " + ";
    out += '(';
    out += format_complex(c);
    out += ")*";
    out += monomial_text(ctx, i);
  }
  return out.empty() ? "0" : out;
}

std::string value_text(const Value& value) {
  if (const auto* scalar = std::get_if<Complex>(&value)) return format_complex(*scalar);
  if (const auto* element = std::get_if<AlgebraElement>(&value)) return element_text(*element);
  if (const auto* matrix = std::get_if<ComplexMatrix>(&value)) {
    std::string out;
    for (Eigen::Index r = 0; r < matrix->rows(); ++r) {
      for (Eigen::Index c = 0; c < matrix->cols(); ++c) {
        if (c > 0) out += "  ";
        out += format_complex((*matrix)(r, c));
      }
      if (r + 1 < matrix->rows()) out += '\n';
    }
    return out;
  }
  const auto& result = std::get<CharPolyResult>(value);
  std::string out = "N = " + std::to_string(result.context.rep_size());
  for (std::size_t k = 0; k < result.coefficients.size(); ++k)
    out += "\nC" + std::to_string(k + 1) + " = " + format_complex(result.coefficients[k]);
  out += "\ndet = " + format_complex(determinant(result));
  return out;
}

}  // namespace gencliff
