#pragma once

#include <stdexcept>
#include <string>

#include "spbw/normal_form.hpp"

namespace spbw {

// Raised on malformed input; pos is a 0-based offset into the source text.
struct ExprParseError : std::runtime_error {
  ExprParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at column " + std::to_string(pos + 1)), pos(pos) {}
  size_t pos;
};

// Grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*
//   factor := rational | 't' | 't1' | 't2' | 'x'INT | '(' expr ')' , each
//             with an optional '^'INT
// Products evaluate left to right through the rewriting engine, so the
// result is always in normal form. Unknown variables and generator
// indices out of range are errors.
NormalElement parse_expression(const std::string& src, const ExtensionPresentation& pres);

}  // namespace spbw
