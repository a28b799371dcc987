#ifndef FSING_PARSER_HPP
#define FSING_PARSER_HPP

#include "fsing/errors.hpp"
#include "fsing/polynomial.hpp"

#include <string>
#include <string_view>

namespace fsing {

/// Parse failure with a 1-based column into the parsed text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t column)
      : InputError(message + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Grammar (whitespace ignored, multiplication always explicit):
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?      exponent >= 1
///   atom   := integer | identifier | '(' expr ')'
/// Integer literals are reduced mod p.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Text form accepted back by parse_polynomial, e.g. "x1^3*x2 + 2*x4 + 1".
std::string to_string(const Polynomial& f);

}  // namespace fsing

#endif  // FSING_PARSER_HPP
