#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "refutelint/support/source_loc.h"

namespace refutelint::frontend {

enum class TokenKind { Identifier, Keyword, IntLiteral, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceLoc loc;
  uint64_t value = 0;       // IntLiteral
  bool is_unsigned = false;  // IntLiteral 'u' suffix
  bool is_long = false;      // IntLiteral 'l' suffix
  bool is_decimal = true;    // IntLiteral base 10

  uint32_t endColumn() const { return loc.column + static_cast<uint32_t>(text.size()); }
  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool isPunct(std::string_view t) const { return is(TokenKind::Punct, t); }
  bool isKeyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

/// Splits MiniC source into tokens. Comments and whitespace are dropped.
/// Throws SyntaxError on malformed literals and UnsupportedConstruct on
/// preprocessor lines, string and character literals.
std::vector<Token> tokenize(std::string_view source);

}  // namespace refutelint::frontend
