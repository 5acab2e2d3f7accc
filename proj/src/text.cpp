#include "zinbiel/text.hpp"

#include <cctype>

namespace zinbiel {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(start, nl - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = nl + 1;
  }
  return lines;
}

std::string strip_comment(std::string_view line) {
  const size_t hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool at_scalar() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || s_.substr(pos_).starts_with("poly(");
  }
  bool at_symbol() { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

  FieldElement scalar(const FieldRef& field) {
    skip_ws();
    const size_t start = pos_;
    if (s_.substr(pos_).starts_with("poly(")) {
      const size_t close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated poly(");
      pos_ = close + 1;
      std::string_view body = s_.substr(start, pos_ - start);
      if (pos_ < s_.size() && s_[pos_] == '@')
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return FieldElement::parse(body, field);
    }
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const size_t den = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (den == pos_) fail("missing denominator");
    }
    return FieldElement(field, {Rational::parse(s_.substr(start, pos_ - start))});
  }

  std::string symbol() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "': " + what);
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<Term> parse_linear_combination(std::string_view text, const FieldRef& field) {
  Lexer lx(text);
  std::vector<Term> out;
  if (lx.done()) lx.fail("empty expression");
  bool first = true;
  while (!lx.done()) {
    bool negative = false;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      negative = true;
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    while (lx.peek() == '-' || lx.peek() == '+')
      if (lx.accept('-')) negative = !negative; else lx.accept('+');
    first = false;

    Term t{FieldElement(field, {Rational(1)}), {}};
    bool has_scalar = false;
    if (lx.at_scalar()) {
      t.coeff = lx.scalar(field);
      has_scalar = true;
      lx.accept('*');
    }
    if (lx.at_symbol()) {
      t.symbol = lx.symbol();
    } else if (!has_scalar) {
      lx.fail("expected a scalar or symbol");
    }
    if (negative) t.coeff = -t.coeff;
    out.push_back(std::move(t));
  }
  if (out.size() == 1 && out[0].symbol.empty() && out[0].coeff.is_zero()) out.clear();
  return out;
}

std::string format_linear_combination(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    FieldElement c = t.coeff;
    bool negative = false;
    if (c.is_rational() && c.to_rational().sign() < 0) {
      negative = true;
      c = -c;
    }
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += c.to_string();
    if (!t.symbol.empty()) out += " " + t.symbol;
  }
  return out.empty() ? "0" : out;
}

}  // namespace zinbiel
