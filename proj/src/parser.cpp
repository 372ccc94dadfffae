#include "odeinv/parser.hpp"

#include <cctype>

namespace odeinv {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  RatFunc parse() {
    RatFunc r = expr();
    skipWs();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skipWs() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skipWs();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skipWs();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  RatFunc term() {
    RatFunc r = factor();
    for (;;) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        size_t at = pos_;
        RatFunc d = factor();
        if (d.isZero()) throw ParseError("division by the zero function", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatFunc factor() {
    if (eat('-')) return -factor();
    bool parenthesized = false;
    RatFunc base = primary(&parenthesized);
    if (peek() == '^') {
      eat('^');
      long e = exponent(parenthesized);
      if (e < 0 && base.isZero()) fail("zero base with negative exponent");
      return base.pow(e);
    }
    return base;
  }

  long exponent(bool baseParenthesized) {
    skipWs();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      if (!baseParenthesized)
        fail("negative exponent requires a parenthesized base");
      neg = true;
      ++pos_;
    }
    skipWs();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') fail("non-integer exponent");
    return neg ? -v : v;
  }

  RatFunc primary(bool* parenthesized) {
    skipWs();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      *parenthesized = true;
      return r;
    }
    if (c == 'x') {
      ++pos_;
      return RatFunc::variable(VarX);
    }
    if (c == 'y') {
      ++pos_;
      return RatFunc::variable(VarY);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int v(0);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals not supported");
      return RatFunc(Rat(v));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc parseExpr(const std::string& text) { return Parser(text).parse(); }

}  // namespace odeinv
