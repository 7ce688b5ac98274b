#include "refutelint/frontend/lexer.h"

#include <array>
#include <cctype>

#include "refutelint/frontend/ast.h"

namespace refutelint::frontend {

namespace {

constexpr std::array kKeywords = {
    "int",    "unsigned", "signed", "char",     "long",   "_Bool",  "void",   "if",
    "else",   "while",    "return", "for",      "do",     "switch", "case",   "default",
    "break",  "continue", "goto",   "struct",   "union",  "enum",   "typedef", "sizeof",
    "static", "extern",   "const",  "volatile", "short",  "float",  "double", "register",
    "inline", "restrict", "auto",
};

// Longest match first.
constexpr std::array kPuncts = {
    "<<=", ">>=", "...", "&&", "||", "==", "!=", "<=", ">=", "<<", ">>", "->", "++", "--",
    "+=",  "-=",  "*=",  "/=", "%=", "&=", "|=", "^=", "+",  "-",  "*",  "/",  "%",  "&",
    "|",   "^",   "~",   "!",  "<",  ">",  "=",  "(",  ")",  "{",  "}",  "[",  "]",  ";",
    ",",   ".",   "?",   ":",
};

bool isKeyword(std::string_view word) {
  for (const char* k : kKeywords)
    if (word == k) return true;
  return false;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipTrivia();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    Token end;
    end.kind = TokenKind::End;
    end.loc = here();
    out.push_back(end);
    return out;
  }

 private:
  SourceLoc here() const { return {line_, col_}; }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skipTrivia() {
    while (pos_ < src_.size()) {
      const char c = peek();
      if (c == '\n' || c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const SourceLoc start = here();
        advance();
        advance();
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= src_.size()) throw SyntaxError(start, "unterminated comment");
        advance();
        advance();
      } else if (c == '#' && atLineStart()) {
        throw UnsupportedConstruct(here(), "preprocessor directives are not supported");
      } else {
        break;
      }
    }
  }

  bool atLineStart() const {
    for (std::size_t i = pos_; i > 0; --i) {
      const char c = src_[i - 1];
      if (c == '\n') return true;
      if (c != ' ' && c != '\t') return false;
    }
    return true;
  }

  Token next() {
    Token t;
    t.loc = here();
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      t.text = std::string(src_.substr(start, pos_ - start));
      t.kind = isKeyword(t.text) ? TokenKind::Keyword : TokenKind::Identifier;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number(t);
    if (c == '"' || c == '\'')
      throw UnsupportedConstruct(t.loc, "string and character literals are not supported");
    for (std::string_view p : kPuncts) {
      if (src_.substr(pos_, p.size()) == p) {
        for (std::size_t i = 0; i < p.size(); ++i) advance();
        t.kind = TokenKind::Punct;
        t.text = std::string(p);
        return t;
      }
    }
    throw SyntaxError(t.loc, std::string("unexpected character '") + c + "'");
  }

  Token number(Token& t) {
    const std::size_t start = pos_;
    unsigned base = 10;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      base = 16;
      advance();
      advance();
    } else if (peek() == '0' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      base = 8;
    }
    const std::size_t digits_start = pos_;
    unsigned __int128 value = 0;
    while (std::isxdigit(static_cast<unsigned char>(peek()))) {
      const char d = peek();
      unsigned digit = std::isdigit(static_cast<unsigned char>(d))
                           ? static_cast<unsigned>(d - '0')
                           : static_cast<unsigned>(std::tolower(d) - 'a' + 10);
      if (digit >= base) break;
      value = value * base + digit;
      if (value > ~uint64_t{0}) throw SyntaxError(t.loc, "integer literal is too large");
      advance();
    }
    if (pos_ == digits_start && base == 16) throw SyntaxError(t.loc, "malformed hexadecimal literal");
    while (true) {
      const char s = static_cast<char>(std::tolower(peek()));
      if (s == 'u' && !t.is_unsigned) {
        t.is_unsigned = true;
      } else if (s == 'l') {
        t.is_long = true;
      } else {
        break;
      }
      advance();
    }
    if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '_')
      throw SyntaxError(t.loc, "malformed integer literal");
    t.kind = TokenKind::IntLiteral;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.value = static_cast<uint64_t>(value);
    t.is_decimal = base == 10;
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace refutelint::frontend
