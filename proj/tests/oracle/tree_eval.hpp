#pragma once

// Independent evaluator for printed expressions. It builds its own syntax
// tree and evaluates it in GMP rationals, sharing no code with the engine's
// parser or canonicalizer.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Env = std::map<std::string, Q>;

struct Pole : std::runtime_error {
  Pole() : std::runtime_error("pole") {}
};

struct Node {
  char op = 0;  // 'n' number, 'v' variable, '+', '-', '*', '/', '^', '~' negate
  Q value;
  std::string name;
  long exponent = 0;
  std::unique_ptr<Node> a, b;
};

std::unique_ptr<Node> parse(const std::string& text);
Q evaluate(const Node& n, const Env& env);
Q eval_text(const std::string& text, const Env& env);

}  // namespace oracle
