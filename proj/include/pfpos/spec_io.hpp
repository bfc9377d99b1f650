#pragma once

#include "pfpos/recurrence.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfpos {

/// Line and column are 1-based; both are 0 when the position is unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Polynomial in n with +, -, *, ^, parentheses, implicit multiplication
/// and division by nonzero constants: "2n+13", "(n+2)(3n+11)/2".
UniPoly parse_poly(std::string_view text);

/// Text form: lines "p<i> = <poly>" and "init = v0, v1, ...", with '#'
/// comments. JSON form: {"coeffs": [[c0, c1, ...], ...], "init": [...]}.
/// The form is chosen by the first non-blank character.
SequenceSpec parse_spec(std::string_view text);
SequenceSpec parse_spec_text(std::string_view text);
SequenceSpec parse_spec_json(std::string_view text);
SequenceSpec spec_from_json(const nlohmann::json& j);

std::string to_text(const SequenceSpec& spec);
nlohmann::json to_json(const SequenceSpec& spec);

}  // namespace pfpos
