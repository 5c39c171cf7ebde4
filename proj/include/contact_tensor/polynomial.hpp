#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ctensor {

using Rational = mpq_class;

/// Interned variable name.
///
/// Equality is identity of the interned string. Ordering compares the names
/// themselves, so term order (and therefore every printed expression) does not
/// depend on the order in which names were first seen.
class Var {
 public:
  static Var intern(std::string_view name);

  const std::string& name() const { return *name_; }

  friend bool operator==(Var a, Var b) { return a.name_ == b.name_; }
  friend bool operator<(Var a, Var b) {
    return a.name_ != b.name_ && *a.name_ < *b.name_;
  }

 private:
  explicit Var(const std::string* name) : name_(name) {}
  const std::string* name_;
};

/// Power product of variables. Factors are kept sorted by variable name with
/// strictly positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Var, unsigned>;

  Monomial() = default;
  static Monomial of(Var v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent(Var v) const;

  bool divides(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  /// Drops the factor of v.
  Monomial without(Var v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order; variables earlier by name rank higher.
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

/// Sparse distributed polynomial with rational coefficients. Terms are stored
/// in strictly decreasing graded-lex order with nonzero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& value);  // NOLINT(google-explicit-constructor)
  static Poly variable(Var v);
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term when is_constant(), zero otherwise.
  Rational constant_value() const;
  const Term& leading() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  unsigned total_degree() const;

  std::vector<Var> variables() const;
  bool contains(Var v) const;
  unsigned degree_in(Var v) const;
  /// Coefficient of v^d, as a polynomial free of v.
  Poly coeff_in(Var v, unsigned d) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly times(const Monomial& m) const;
  Poly pow(unsigned n) const;
  Poly derivative(Var v) const;

  /// Evaluates with every variable bound; throws UnboundSymbol otherwise.
  Rational evaluate(const std::map<Var, Rational>& bindings) const;

  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Quotient a / b, throwing Error if b does not divide a exactly.
Poly exact_divide(const Poly& a, const Poly& b);

/// Scales p so that its leading coefficient is one. Zero stays zero.
Poly monic(const Poly& p);

/// Greatest common divisor over Q[vars], normalized to be monic.
/// gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

/// Pseudo-remainder of a by b viewed as univariate polynomials in v.
Poly pseudo_remainder(const Poly& a, const Poly& b, Var v);

/// Monic gcd of the coefficients of p with respect to v.
Poly content_in(const Poly& p, Var v);

}  // namespace ctensor
