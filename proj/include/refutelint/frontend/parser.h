#pragma once

#include <string>
#include <string_view>

#include "refutelint/frontend/ast.h"

namespace refutelint::frontend {

/// Parses and type-checks one MiniC translation unit. Names are resolved and
/// implicit conversions made explicit as `implicit` Cast nodes.
/// Throws SyntaxError or UnsupportedConstruct.
ast::TranslationUnit parse(std::string_view source);

/// Renders the AST back to MiniC. Binary and unary expressions are fully
/// parenthesised and implicit casts omitted, so parse(print(tu)) is
/// structurally equal to tu.
std::string print(const ast::TranslationUnit& tu);
std::string print(const ast::Expr& e);

}  // namespace refutelint::frontend
