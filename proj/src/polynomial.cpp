#include "contact_tensor/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "contact_tensor/errors.hpp"

namespace ctensor {

Var Var::intern(std::string_view name) {
  static std::mutex mutex;
  static std::set<std::string, std::less<>> names;
  std::lock_guard lock(mutex);
  auto it = names.find(name);
  if (it == names.end()) it = names.emplace(name).first;
  return Var(&*it);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(v, exponent);
    m.degree_ = exponent;
  }
  return m;
}

unsigned Monomial::exponent(Var v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  std::size_t j = 0;
  for (const auto& [var, e] : factors_) {
    while (j < other.factors_.size() && other.factors_[j].first < var) ++j;
    if (j == other.factors_.size() || !(other.factors_[j].first == var) ||
        other.factors_[j].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  std::size_t j = 0;
  for (const auto& [var, e] : factors_) {
    unsigned d = 0;
    if (j < divisor.factors_.size() && divisor.factors_[j].first == var) {
      d = divisor.factors_[j].second;
      ++j;
    }
    if (e > d) out.factors_.emplace_back(var, e - d);
  }
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::without(Var v) const {
  Monomial out;
  for (const auto& f : factors_)
    if (!(f.first == v)) out.factors_.push_back(f);
  out.degree_ = degree_ - exponent(v);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() ||
        (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
      out.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || b.factors_[j].first < a.factors_[i].first) {
      out.factors_.push_back(b.factors_[j++]);
    } else {
      out.factors_.emplace_back(a.factors_[i].first,
                                a.factors_[i].second + b.factors_[j].second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [var, e] : factors_) {
    if (!out.empty()) out += '*';
    out += var.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second <=> fb[j].second;
      ++i;
      ++j;
    } else if (fa[i].first < fb[j].first) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i < fa.size()) return std::strong_ordering::greater;
  if (j < fb.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Poly

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) {
  return grlex(a.mono, b.mono) == std::strong_ordering::greater;
}

}  // namespace

Poly::Poly(long value) : Poly(Rational(value)) {}

Poly::Poly(const Rational& value) {
  if (value != 0) terms_.push_back({Monomial(), value});
}

Poly Poly::variable(Var v) {
  Poly p;
  p.terms_.push_back({Monomial::of(v), Rational(1)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Poly::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

std::vector<Var> Poly::variables() const {
  std::vector<Var> vars;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors())
      if (std::find(vars.begin(), vars.end(), f.first) == vars.end()) vars.push_back(f.first);
  std::sort(vars.begin(), vars.end());
  return vars;
}

bool Poly::contains(Var v) const {
  for (const auto& t : terms_)
    if (t.mono.exponent(v) > 0) return true;
  return false;
}

unsigned Poly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

Poly Poly::coeff_in(Var v, unsigned d) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.exponent(v) == d) out.push_back({t.mono.without(v), t.coeff});
  return from_terms(std::move(out));
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    auto c = grlex(a.terms_[i].mono, b.terms_[j].mono);
    if (c == std::strong_ordering::greater) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (s != 0) out.terms_.push_back({a.terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
  if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
  std::vector<Poly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(std::move(products));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::times(const Monomial& m) const {
  Poly p = *this;
  for (auto& t : p.terms_) t.mono = t.mono * m;
  return p;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(v);
    if (e == 0) continue;
    Monomial m = t.mono.without(v) * Monomial::of(v, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return from_terms(std::move(out));
}

Rational Poly::evaluate(const std::map<Var, Rational>& bindings) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational value = t.coeff;
    for (const auto& [var, e] : t.mono.factors()) {
      auto it = bindings.find(var);
      if (it == bindings.end()) throw UnboundSymbol(var.name());
      Rational p = 1;
      for (unsigned k = 0; k < e; ++k) p *= it->second;
      value *= p;
    }
    sum += value;
  }
  return sum;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string piece;
    if (t.mono.is_one()) {
      piece = t.coeff.get_str();
    } else if (t.coeff == 1) {
      piece = t.mono.to_string();
    } else if (t.coeff == -1) {
      piece = "-" + t.mono.to_string();
    } else {
      piece = t.coeff.get_str() + "*" + t.mono.to_string();
    }
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division and gcd

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_constant()) return a.scaled(1 / b.leading_coeff());
  const auto& lb = b.leading();
  std::vector<Poly::Term> quotient;
  Poly r = a;
  while (!r.is_zero()) {
    const auto& lr = r.leading();
    if (!lb.mono.divides(lr.mono))
      throw Error("polynomial division is not exact: " + a.to_string() + " / " + b.to_string());
    Monomial m = lr.mono.quotient(lb.mono);
    Rational c = lr.coeff / lb.coeff;
    r = r - b.times(m).scaled(c);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(std::move(quotient));
}

Poly monic(const Poly& p) {
  if (p.is_zero() || p.leading_coeff() == 1) return p;
  return p.scaled(1 / p.leading_coeff());
}

Poly pseudo_remainder(const Poly& a, const Poly& b, Var v) {
  const unsigned n = b.degree_in(v);
  const Poly lb = b.coeff_in(v, n);
  Poly r = a;
  while (!r.is_zero()) {
    const unsigned m = r.degree_in(v);
    if (m < n) break;
    const Poly lr = r.coeff_in(v, m);
    r = r * lb - (lr * b).times(Monomial::of(v, m - n));
  }
  return r;
}

Poly content_in(const Poly& p, Var v) {
  if (p.is_zero()) return Poly();
  const unsigned d = p.degree_in(v);
  Poly c;
  for (unsigned k = 0; k <= d; ++k) {
    Poly coeff = p.coeff_in(v, k);
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_constant()) return Poly(1);
  }
  return c;
}

namespace {

/// Largest monomial dividing every term of p.
Monomial monomial_content(const Poly& p) {
  Monomial m = p.terms().front().mono;
  for (const auto& t : p.terms()) {
    Monomial next;
    for (const auto& [var, e] : m.factors()) {
      unsigned f = std::min(e, t.mono.exponent(var));
      if (f > 0) next = next * Monomial::of(var, f);
    }
    m = std::move(next);
    if (m.is_one()) break;
  }
  return m;
}

Poly primitive_in(const Poly& p, Var v) { return monic(exact_divide(p, content_in(p, v))); }

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return monic(a);
  if (a.terms().size() == 1 || b.terms().size() == 1) {
    // A single-term polynomial only has monomial divisors.
    const bool a_single = a.terms().size() == 1;
    const Monomial m = monomial_content(a_single ? b : a);
    const Monomial& single = (a_single ? a : b).leading().mono;
    Monomial common;
    for (const auto& [var, e] : single.factors()) {
      unsigned f = std::min(e, m.exponent(var));
      if (f > 0) common = common * Monomial::of(var, f);
    }
    return Poly::from_terms({{common, Rational(1)}});
  }

  std::vector<Var> vars = a.variables();
  for (Var v : b.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  const Var v = *std::min_element(vars.begin(), vars.end());

  if (!a.contains(v)) return gcd(a, content_in(b, v));
  if (!b.contains(v)) return gcd(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  Poly pa = monic(exact_divide(a, ca));
  Poly pb = monic(exact_divide(b, cb));
  const Poly c = gcd(ca, cb);

  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (!r.contains(v)) return c;  // primitive parts are coprime
    pb = primitive_in(r, v);
  }
  return monic(c * primitive_in(pa, v));
}

}  // namespace ctensor
