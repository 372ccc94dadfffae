#pragma once

#include <stdexcept>
#include <string>

#include "odeinv/ratfunc.hpp"

namespace odeinv {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

/// Parse an expression over x, y with integer literals, rationals via
/// `/`, operators + - * / ^ and parentheses. Multiplication is always
/// explicit; `^` takes integer exponents, negative only on parenthesized
/// subexpressions.
RatFunc parseExpr(const std::string& text);

}  // namespace odeinv
