#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fraxform/error.hpp"
#include "fraxform/rational.hpp"

namespace fraxform::detail {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, equals, semicolon, end };

struct Token {
  Tok type;
  std::string_view text;
  SourceSpan span;
};

std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token& t);

/// Cursor over a token stream with single-token lookahead.
class TokenCursor {
 public:
  TokenCursor(std::string_view text) : text_(text), tokens_(tokenize(text)) {}  // NOLINT

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok t) {
    if (peek().type != t) return false;
    next();
    return true;
  }
  const Token& expect(Tok t, std::string_view what);
  const Token& expect_ident(std::string_view name);

  /// NUMBER ["/" NUMBER] as an exact rational.
  Rational number();

  [[noreturn]] void fail(ErrorKind kind, const Token& at, const std::string& message) const;
  [[noreturn]] void fail(ErrorKind kind, SourceSpan span, const std::string& message) const;

  std::size_t size() const { return text_.size(); }

 private:
  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace fraxform::detail
