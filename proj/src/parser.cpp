#include "contact_tensor/parser.hpp"

#include <cctype>
#include <climits>
#include <string>

#include "contact_tensor/errors.hpp"

namespace ctensor {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols) : text_(text), symbols_(symbols) {}

  Expr parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    Expr e = expr();
    skip_space();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Expr term() {
    Expr value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else {
        if (!accept('/')) return value;
        skip_space();
        const std::size_t operand = pos_;
        Expr divisor = unary();
        if (divisor.is_zero()) throw ParseError(operand, "division by zero");
        value /= divisor;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    skip_space();
    const std::size_t base_pos = pos_;
    Expr base = primary();
    if (!accept('^')) return base;
    const long n = exponent();
    if (n < 0 && base.is_zero()) throw ParseError(base_pos, "zero raised to a negative power");
    return base.pow(n);
  }

  long exponent() {
    skip_space();
    const bool paren = accept('(');
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip_space();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(pos_, "exponent must be an integer");
    const std::size_t start = pos_;
    long n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (n > (LONG_MAX - 9) / 10) throw ParseError(start, "exponent too large");
      n = n * 10 + (text_[pos_++] - '0');
    }
    if (n > 1000) throw ParseError(start, "exponent too large");
    if (paren && !accept(')')) throw ParseError(pos_, "expected ')'");
    return negative ? -n : n;
  }

  Expr primary() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "unexpected end of expression");
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_++;
      Expr inner = expr();
      if (!accept(')')) throw ParseError(at_end() ? open : pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Expr(Rational(std::string(text_.substr(start, pos_ - start)), 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const Symbol* s = symbols_.find(name);
      if (s == nullptr) throw ParseError(start, "unknown symbol '" + name + "'");
      return Expr(*s);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, const SymbolTable& symbols) {
  return Parser(text, symbols).parse();
}

}  // namespace ctensor
