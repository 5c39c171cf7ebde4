#include "contact_tensor/expr.hpp"

#include <algorithm>

#include "contact_tensor/errors.hpp"

namespace ctensor {

std::string_view to_string(SymbolKind kind) {
  return kind == SymbolKind::coordinate ? "coordinate" : "parameter";
}

// ---------------------------------------------------------------------------
// SymbolTable

SymbolTable::SymbolTable(std::initializer_list<Symbol> symbols) {
  for (const auto& s : symbols) add(s.name(), s.kind());
}

const Symbol& SymbolTable::add(std::string_view name, SymbolKind kind) {
  if (find(name) != nullptr) throw Error("duplicate symbol '" + std::string(name) + "'");
  symbols_.emplace_back(name, kind);
  return symbols_.back();
}

const Symbol* SymbolTable::find(std::string_view name) const {
  for (const auto& s : symbols_)
    if (s.name() == name) return &s;
  return nullptr;
}

const Symbol& SymbolTable::at(std::string_view name) const {
  const Symbol* s = find(name);
  if (s == nullptr) throw UnknownSymbol(std::string(name));
  return *s;
}

bool SymbolTable::is_coordinate(Var v) const {
  for (const auto& s : symbols_)
    if (s.var() == v) return s.is_coordinate();
  return false;
}

std::vector<Symbol> SymbolTable::coordinates() const {
  std::vector<Symbol> out;
  for (const auto& s : symbols_)
    if (s.is_coordinate()) out.push_back(s);
  return out;
}

std::vector<Symbol> SymbolTable::parameters() const {
  std::vector<Symbol> out;
  for (const auto& s : symbols_)
    if (!s.is_coordinate()) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Expr

Expr Expr::variable(Var v) { return Expr(Poly::variable(v), Poly(1), true); }

Expr Expr::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return Expr();
  if (den.is_constant()) {
    return Expr(num.scaled(1 / den.leading_coeff()), Poly(1), true);
  }
  const Poly g = gcd(num, den);
  Poly n = g.is_constant() ? num : exact_divide(num, g);
  Poly d = g.is_constant() ? den : exact_divide(den, g);
  const Rational lc = d.leading_coeff();
  if (lc != 1) {
    n = n.scaled(1 / lc);
    d = d.scaled(1 / lc);
  }
  return Expr(std::move(n), std::move(d), true);
}

std::optional<Rational> Expr::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_value();
}

std::vector<Var> Expr::variables() const {
  std::vector<Var> vars = num_.variables();
  for (Var v : den_.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  return vars;
}

bool Expr::is_parameter_only(const SymbolTable& symbols) const {
  for (Var v : variables())
    if (symbols.is_coordinate(v)) return false;
  return true;
}

Expr Expr::operator-() const { return Expr(-num_, den_, true); }

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.is_polynomial()) return Expr(a.num_ + b.num_, a.den_, true);
    return Expr::fraction(a.num_ + b.num_, a.den_);
  }
  return Expr::fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr();
  if (a.is_polynomial() && b.is_polynomial()) return Expr(a.num_ * b.num_, Poly(1), true);
  return Expr::fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return Expr();
  return Expr::fraction(a.num_ * b.den_, a.den_ * b.num_);
}

Expr Expr::pow(long n) const {
  if (n < 0) {
    if (is_zero()) throw DivisionByZero();
    return Expr(1) / pow(-n);
  }
  auto k = static_cast<unsigned>(n);
  // Powers of coprime polynomials stay coprime and a monic denominator stays monic.
  return Expr(num_.pow(k), den_.pow(k), true);
}

namespace {

bool needs_parens_as_denominator(const Poly& p) {
  if (p.terms().size() != 1) return true;
  return p.leading().mono.factors().size() > 1;
}

}  // namespace

std::string Expr::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  std::string num = num_.to_string();
  if (num_.terms().size() > 1) num = "(" + num + ")";
  std::string den = den_.to_string();
  if (needs_parens_as_denominator(den_)) den = "(" + den + ")";
  return num + "/" + den;
}

Expr diff(const Expr& e, const Symbol& s) {
  if (!s.is_coordinate()) return Expr();
  const Var v = s.var();
  const Poly dn = e.numerator().derivative(v);
  if (e.is_polynomial()) return Expr::fraction(dn, e.denominator());
  const Poly dd = e.denominator().derivative(v);
  return Expr::fraction(dn * e.denominator() - e.numerator() * dd,
                        e.denominator() * e.denominator());
}

Rational eval(const Expr& e, const Bindings& bindings) {
  const Rational den = e.denominator().evaluate(bindings);
  if (den == 0) throw PoleError("pole at binding: denominator " + e.denominator().to_string() + " vanishes");
  return e.numerator().evaluate(bindings) / den;
}

namespace {

Expr substitute_poly(const Poly& p, const std::map<Var, Expr>& replacements) {
  Expr sum;
  for (const auto& t : p.terms()) {
    Expr term(t.coeff);
    for (const auto& [var, e] : t.mono.factors()) {
      auto it = replacements.find(var);
      term *= (it == replacements.end() ? Expr::variable(var) : it->second).pow(e);
    }
    sum += term;
  }
  return sum;
}

}  // namespace

Expr substitute(const Expr& e, const std::map<Var, Expr>& replacements) {
  const Expr num = substitute_poly(e.numerator(), replacements);
  const Expr den = substitute_poly(e.denominator(), replacements);
  if (den.is_zero())
    throw PoleError("substitution makes the denominator " + e.denominator().to_string() +
                    " vanish identically");
  return num / den;
}

Expr substitute(const Expr& e, const Symbol& s, const Expr& replacement) {
  return substitute(e, std::map<Var, Expr>{{s.var(), replacement}});
}

}  // namespace ctensor
