#pragma once

#include <doctest.h>

#include <string>

#include "contact_tensor/catalog.hpp"
#include "contact_tensor/classify.hpp"
#include "contact_tensor/parser.hpp"

namespace testing {

using namespace ctensor;

inline Expr px(const std::string& text, const SymbolTable& symbols) { return parse_expr(text, symbols); }

inline VectorField vec(std::initializer_list<Expr> c) { return VectorField(std::vector<Expr>(c)); }

inline SymbolTable kmu_symbols() {
  SymbolTable s;
  s.add("lambda", SymbolKind::parameter);
  s.add("mu", SymbolKind::parameter);
  return s;
}

inline ContactStructure kmu_at(long lp, long lq, long mp, long mq) {
  return build_kmu_frame(Expr::rational(lp, lq), Expr::rational(mp, mq), SymbolTable{}).structure;
}

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<ctensor::Expr> {
  static String convert(const ctensor::Expr& e) { return e.to_string().c_str(); }
};
template <>
struct StringMaker<ctensor::VectorField> {
  static String convert(const ctensor::VectorField& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return (s + ")").c_str();
  }
};
}  // namespace doctest
