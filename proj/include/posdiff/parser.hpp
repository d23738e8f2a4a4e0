#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posdiff/poly.hpp"

namespace posdiff {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  // Variable names in order. Empty means x1, x2, ... (with x an alias of x1).
  std::vector<std::string> vars;
  // The result has at least this many variables.
  std::size_t min_nvars = 0;
  // Expected codomain dimension, if any.
  std::optional<std::size_t> codim;
};

/// Parses a polynomial or a bracketed vector of polynomials:
///
///   vector   := "[" expr ("," expr)* "]"
///   expr     := term (("+" | "-") term)*
///   term     := factor ("*" factor)*
///   factor   := base ("^" natural)?
///   base     := rational | identifier | "(" expr ")" | "-" factor
///   rational := integer ("/" positive-integer)?
///
/// Implicit multiplication is not accepted.
VectorPoly parse(std::string_view text, const ParseOptions& opts = {});

// Default names x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

// Canonical text: terms in graded lex order, "0" for zero, "[a, b]" when m > 1.
std::string format(const ScalarPoly& p, std::span<const std::string> names = {});
std::string format(const VectorPoly& p, std::span<const std::string> names = {});

}  // namespace posdiff
