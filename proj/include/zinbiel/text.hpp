#pragma once

// Small text helpers shared by the file formats: linear combinations of
// symbols such as `1/2 e3 - e4` or `2 D13 + 3 D22`.

#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/scalars.hpp"

namespace zinbiel {

struct Term {
  FieldElement coeff;
  std::string symbol;  // empty for a bare scalar
};

/// Grammar: [sign] term { (+|-) term }, term = [scalar] ['*'] [symbol].
/// Scalars are `p`, `p/q` or `poly(c0,...)[@m(x)]`; symbols are a letter followed by
/// letters/digits/underscores. A lone `0` yields an empty list.
std::vector<Term> parse_linear_combination(std::string_view text, const FieldRef& field = nullptr);

/// Inverse direction: `1 e3 - 1/2 e4`; coefficients that are zero are skipped, the
/// empty combination prints as `0`.
std::string format_linear_combination(const std::vector<Term>& terms);

std::string trim(std::string_view s);
std::vector<std::string> split_lines(std::string_view text);
/// Drops a trailing `#` comment and surrounding whitespace.
std::string strip_comment(std::string_view line);

}  // namespace zinbiel
