#pragma once

#include <string_view>

#include "contact_tensor/expr.hpp"

namespace ctensor {

/// Parses the manifest expression grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' exponent)?
///   exponent:= ['+' | '-'] integer | '(' ['+' | '-'] integer ')'
///   primary := integer | identifier | '(' expr ')'
///
/// Rationals are written as integer quotients (`3/4`). Identifiers must be
/// declared in `symbols`. Every failure throws ParseError carrying the
/// zero-based offset of the offending token.
Expr parse_expr(std::string_view text, const SymbolTable& symbols);

}  // namespace ctensor
