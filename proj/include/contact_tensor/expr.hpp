#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contact_tensor/errors.hpp"
#include "contact_tensor/polynomial.hpp"

namespace ctensor {

enum class SymbolKind { coordinate, parameter };

std::string_view to_string(SymbolKind kind);

/// A named scalar: a chart coordinate (differentiable) or a free parameter
/// (constant along the manifold).
class Symbol {
 public:
  Symbol(std::string_view name, SymbolKind kind) : var_(Var::intern(name)), kind_(kind) {}

  const std::string& name() const { return var_.name(); }
  Var var() const { return var_; }
  SymbolKind kind() const { return kind_; }
  bool is_coordinate() const { return kind_ == SymbolKind::coordinate; }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.var_ == b.var_ && a.kind_ == b.kind_;
  }

 private:
  Var var_;
  SymbolKind kind_;
};

/// Ordered set of uniquely named symbols. Declaration order is preserved for
/// serialization; coordinates() returns the chart coordinates in that order.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::initializer_list<Symbol> symbols);

  /// Throws Error on a duplicate name.
  const Symbol& add(std::string_view name, SymbolKind kind);
  const Symbol* find(std::string_view name) const;
  /// Throws UnknownSymbol.
  const Symbol& at(std::string_view name) const;
  bool is_coordinate(Var v) const;

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::vector<Symbol> coordinates() const;
  std::vector<Symbol> parameters() const;

  friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

 private:
  std::vector<Symbol> symbols_;
};

using Bindings = std::map<Var, Rational>;

/// Exact rational function with rational coefficients, always held in
/// canonical form: numerator and denominator coprime, denominator monic under
/// graded-lex order, zero represented as 0/1. Two Exprs are equal exactly when
/// their canonical forms coincide.
class Expr {
 public:
  Expr() : num_(), den_(1) {}
  Expr(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Expr(int value) : Expr(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Expr(const Rational& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Expr(const Symbol& s) : num_(Poly::variable(s.var())), den_(1) {}
  static Expr variable(Var v);
  /// Canonicalizes num/den; throws DivisionByZero when den is zero.
  static Expr fraction(const Poly& num, const Poly& den);
  static Expr rational(long p, long q) { return Expr(Rational(p, q)); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value when the expression is a constant.
  std::optional<Rational> constant_value() const;
  /// Sorted set of variables that occur in numerator or denominator.
  std::vector<Var> variables() const;
  /// True when no coordinate of `symbols` occurs.
  bool is_parameter_only(const SymbolTable& symbols) const;

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  /// Throws DivisionByZero when b is zero.
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr& operator+=(const Expr& b) { return *this = *this + b; }
  Expr& operator-=(const Expr& b) { return *this = *this - b; }
  Expr& operator*=(const Expr& b) { return *this = *this * b; }
  Expr& operator/=(const Expr& b) { return *this = *this / b; }
  /// Integer power; negative exponents invert (throws on zero base).
  Expr pow(long n) const;

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Canonical text, re-parseable by parse_expr.
  std::string to_string() const;

 private:
  Expr(Poly num, Poly den, bool /*canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

inline bool is_zero(const Expr& e) { return e.is_zero(); }

/// Partial derivative; parameters differentiate to zero.
Expr diff(const Expr& e, const Symbol& s);

/// Exact value at a binding. Throws UnboundSymbol or PoleError.
Rational eval(const Expr& e, const Bindings& bindings);

/// Simultaneous capture-free substitution followed by canonicalization.
/// Throws PoleError when the substituted denominator vanishes identically.
Expr substitute(const Expr& e, const std::map<Var, Expr>& replacements);
Expr substitute(const Expr& e, const Symbol& s, const Expr& replacement);

}  // namespace ctensor
