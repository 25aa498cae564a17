#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "divcon/polynomial.hpp"

namespace divcon::cli {

const std::vector<std::string>& default_variables();

// Syntax or unknown-variable error with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// expr   := ["+"|"-"] term (("+"|"-") term)*
// term   := factor (["*"] factor)*
// factor := primary ("^" nat)*
// primary:= int ["/" nat] | var | "(" expr ")"
// A run of letters that is not a variable name is read as a product of
// single-letter variables, so "xt^2" is x*t^2.
Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& variables = default_variables());

std::vector<int> parse_weights(std::string_view text);
std::vector<Rational> parse_rationals(std::string_view text);
std::vector<std::string> parse_names(std::string_view text);

}  // namespace divcon::cli
