#include <random>

#include "../oracle/tree_eval.hpp"
#include "contact_tensor/matrix.hpp"
#include "support.hpp"

using namespace ctensor;
using namespace testing;

namespace {

SymbolTable xyz() {
  SymbolTable s;
  s.add("x", SymbolKind::coordinate);
  s.add("y", SymbolKind::coordinate);
  s.add("z", SymbolKind::coordinate);
  s.add("lambda", SymbolKind::parameter);
  s.add("mu", SymbolKind::parameter);
  return s;
}

/// Random expression text over x, y, lambda with small integer literals.
std::string random_text(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  const int k = pick(rng);
  if (depth == 0 || k < 3) {
    static const char* leaves[] = {"x", "y", "lambda", "1", "2", "3", "-1", "1/2", "x", "y"};
    return leaves[pick(rng)];
  }
  const std::string a = random_text(rng, depth - 1), b = random_text(rng, depth - 1);
  switch (k) {
    case 3: case 4: return "(" + a + ")+(" + b + ")";
    case 5: return "(" + a + ")-(" + b + ")";
    case 6: case 7: return "(" + a + ")*(" + b + ")";
    case 8: return "(" + a + ")/(" + b + ")";
    default: return "(" + a + ")^2";
  }
}

oracle::Env random_env(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  oracle::Env env;
  for (const char* v : {"x", "y", "lambda", "mu", "z"}) env[v] = oracle::Q(num(rng), den(rng));
  for (auto& [k, v] : env) v.canonicalize();
  return env;
}

Bindings to_bindings(const oracle::Env& env) {
  Bindings b;
  for (const auto& [k, v] : env) b[Var::intern(k)] = v;
  return b;
}

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("arithmetic normalizes") {
    const auto s = xyz();
    CHECK(px("(x+y)+(x-y)", s) == px("2*x", s));
    CHECK(px("(x^2-1)/(x-1)", s) == px("x+1", s));
    CHECK(px("(2/x)*x", s) == Expr(2));
    CHECK(px("010", s) == Expr(10));
    CHECK(px("x/(2*x)", s) == Expr::rational(1, 2));
    CHECK(px("(x^2-y^2)/(x+y)", s).to_string() == "x-y");
  }

  TEST_CASE("canonical denominators are monic and sign-normalized") {
    const auto s = xyz();
    CHECK(px("1/(-x)", s) == px("-1/x", s));
    CHECK(px("3/(2*x)", s).to_string() == "3/2/x");
    CHECK(px("2/x", s).to_string() == "2/x");
  }

  TEST_CASE("diff") {
    const auto s = xyz();
    CHECK(diff(px("2/x", s), s.at("x")) == px("-2/x^2", s));
    CHECK(diff(px("x*y", s), s.at("y")) == px("x", s));
    CHECK(diff(px("lambda*x", s), s.at("lambda")).is_zero());
  }

  TEST_CASE("is_zero") {
    const auto s = xyz();
    CHECK(is_zero(px("(x+y)^2-x^2-2*x*y-y^2", s)));
    CHECK_FALSE(is_zero(px("x-y", s)));
    // consistency of the (kappa,mu) curvature coefficient with kappa + mu
    SymbolTable p = kmu_symbols();
    const Expr lambda(p.at("lambda")), mu(p.at("mu"));
    const Expr c2 = Expr(1) - lambda - mu / Expr(2);
    const Expr c3 = Expr(1) + lambda - mu / Expr(2);
    const Expr kappa = Expr(1) - lambda * lambda;
    CHECK(is_zero(Expr::rational(1, 4) * (Expr(12) - Expr(4) * (c2 + c3) - (c2 - c3).pow(2)) - (kappa + mu)));
  }

  TEST_CASE("eval") {
    const auto s = xyz();
    const Var x = s.at("x").var();
    CHECK(eval(px("2/x", s), {{x, Rational(2)}}) == 1);
    CHECK(eval(px("-4/x", s), {{x, Rational(4)}}) == -1);
    // canonical form first: the removable singularity is gone before evaluation
    CHECK(eval(px("(x^2-1)/(x-1)", s), {{x, Rational(1)}}) == 2);
    CHECK_THROWS_AS(eval(px("1/x", s), {{x, Rational(0)}}), PoleError);
    CHECK_THROWS_AS(eval(px("x*y", s), {{x, Rational(1)}}), UnboundSymbol);
  }

  TEST_CASE("substitute") {
    const auto s = kmu_symbols();
    SymbolTable t = s;
    const Symbol& c2 = t.add("c2", SymbolKind::parameter);
    const Symbol& kappa = t.add("kappa", SymbolKind::parameter);
    const Expr repl = px("1-lambda-mu/2", s);
    CHECK(substitute(Expr(c2), c2, repl) == repl);

    SymbolTable u = xyz();
    CHECK(substitute(px("x^2", u), u.at("x"), Expr(0)).is_zero());

    Expr e = px("kappa+mu*lambda", t);
    e = substitute(e, t.at("lambda"), Expr(1));
    e = substitute(e, t.at("mu"), Expr(0));
    e = substitute(e, kappa, Expr(0));
    CHECK(e.is_zero());
    CHECK_THROWS_AS(substitute(px("1/x", u), u.at("x"), Expr(0)), PoleError);
  }

  TEST_CASE("parse errors carry the column") {
    const auto s = xyz();
    try {
      parse_expr("2/w", s);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
      CHECK(std::string(e.what()).find("column 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expr("x+", s), ParseError);
    CHECK_THROWS_AS(parse_expr("(x", s), ParseError);
    CHECK_THROWS_AS(parse_expr("x^y", s), ParseError);
    CHECK_THROWS_AS(parse_expr("1/0", s), ParseError);
  }

  TEST_CASE("property: ring axioms") {
    const auto s = xyz();
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
      const Expr a = px(random_text(rng, 2), s), b = px(random_text(rng, 2), s), c = px(random_text(rng, 2), s);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK(a / a == Expr(1));
    }
  }

  TEST_CASE("property: diff is a derivation") {
    const auto s = xyz();
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      const Expr a = px(random_text(rng, 2), s), b = px(random_text(rng, 2), s);
      for (const char* v : {"x", "y"}) {
        const Symbol& sym = s.at(v);
        CHECK(diff(a * b, sym) == diff(a, sym) * b + a * diff(b, sym));
        CHECK(diff(a + b, sym) == diff(a, sym) + diff(b, sym));
        if (!b.is_zero())
          CHECK(diff(a / b, sym) == (diff(a, sym) * b - a * diff(b, sym)) / (b * b));
      }
    }
  }

  TEST_CASE("property: canonical text round-trips and evaluates like the source") {
    const auto s = xyz();
    std::mt19937 rng(7);
    int compared = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const std::string text = random_text(rng, 3);
      Expr e;
      try {
        e = px(text, s);
      } catch (const DivisionByZero&) {
        continue;
      } catch (const ParseError&) {
        continue;  // literal division by an expression that is identically zero
      }
      const std::string canon = e.to_string();
      CHECK(px(canon, s) == e);
      CHECK(px(canon, s).to_string() == canon);
      for (int k = 0; k < 3; ++k) {
        const auto env = random_env(rng);
        oracle::Q source;
        try {
          source = oracle::eval_text(text, env);
        } catch (const oracle::Pole&) {
          continue;
        }
        // the canonical form may only remove singularities, never add them
        CHECK(eval(e, to_bindings(env)) == source);
        CHECK(oracle::eval_text(canon, env) == source);
        ++compared;
      }
    }
    CHECK(compared > 300);
  }

  TEST_CASE("property: is_zero agrees with evaluation") {
    const auto s = xyz();
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
      const Expr a = px(random_text(rng, 2), s);
      const Expr same = a * Expr(3) / Expr(3) - a;
      CHECK(same.is_zero());
      if (a.is_zero()) continue;
      bool nonzero_seen = false;
      for (int k = 0; k < 8 && !nonzero_seen; ++k) {
        try {
          nonzero_seen = eval(a, to_bindings(random_env(rng))) != 0;
        } catch (const PoleError&) {
        }
      }
      CHECK(nonzero_seen);
    }
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("determinant and inverse") {
    const auto s = xyz();
    const ExprMatrix f = ExprMatrix::from_rows({{0, px("2/x", s), 0},
                                                {2, px("-4*z/x", s), px("x*y", s)},
                                                {0, 0, 1}});
    CHECK(determinant(f) == px("-4/x", s));
    const ExprMatrix inv = inverse(f);
    CHECK(f * inv == ExprMatrix::identity(3));
    CHECK(inv * f == ExprMatrix::identity(3));
    CHECK_THROWS_AS(inverse(ExprMatrix::from_rows({{1, 2}, {2, 4}})), SingularMatrix);
    CHECK_THROWS_AS(determinant(ExprMatrix(2, 3)), DimensionError);
  }
}
