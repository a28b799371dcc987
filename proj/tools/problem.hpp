#ifndef FSING_TOOLS_PROBLEM_HPP
#define FSING_TOOLS_PROBLEM_HPP

// Problem files:
//
//   # comment
//   [ring]
//   p = 2
//   variables = x1, x2, x3
//   order = grevlex            (optional: grevlex, lex, elimination(k))
//
//   [ideal I]                  generators, one per line or comma separated
//   x1*x2 + x3
//
//   [canonical]                generators of the canonical ideal; J = these + I
//   [element u]                one expression (may span lines)
//   [task]                     one command line run by `fsing run`
//
// The [ring] block must come first.

#include "fsing/ideal.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fsing::cli {

struct Problem {
  Ring ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::optional<std::vector<Polynomial>> canonical;
  std::map<std::string, Polynomial> elements;
  std::optional<std::string> task;

  /// Throws InputError naming the ideals that do exist.
  const Ideal& ideal(const std::string& name) const;
  const Polynomial* element(const std::string& name) const;
};

/// Errors are InputError with the 1-based line number in the message.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

MonomialOrder parse_order(std::string_view text);

}  // namespace fsing::cli

#endif  // FSING_TOOLS_PROBLEM_HPP
