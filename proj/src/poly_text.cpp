#include "genrig/poly_text.hpp"

#include <cctype>

#include "genrig/error.hpp"

namespace genrig {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BracketPolynomial parse() {
    BracketPolynomial out;
    skip_blanks();
    if (at_end()) fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_blanks();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      parse_term(out, sign);
      first = false;
      skip_blanks();
    }
    return out;
  }

 private:
  void parse_term(BracketPolynomial& out, int sign) {
    Rational coefficient = sign;
    bool has_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      coefficient *= parse_rational(text_.substr(start, pos_ - start));
      has_coefficient = true;
      skip_blanks();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_blanks();
      }
    }

    SignedTableau monomial;
    std::vector<Bracket> rows;
    while (!at_end() && peek() == '[') {
      const SignedBracket b = bracket_from_tuple(parse_bracket());
      if (b.is_zero()) {
        monomial.sign = 0;
      } else {
        monomial.sign *= b.sign;
        rows.push_back(b.bracket);
      }
      skip_blanks();
    }
    if (rows.empty() && monomial.sign != 0 && !has_coefficient) fail("term without coefficient or bracket");
    if (monomial.sign == 0) return;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].width() != rows[0].width()) fail("brackets of one term differ in width");
    }
    out.add_term(Tableau(std::move(rows)), coefficient * monomial.sign);
  }

  std::vector<int> parse_bracket() {
    ++pos_;  // '['
    std::vector<int> entries;
    while (true) {
      skip_blanks();
      if (at_end()) fail("unterminated bracket");
      if (peek() == ']') {
        ++pos_;
        break;
      }
      if (peek() == ',') {
        if (entries.empty()) fail("leading comma in bracket");
        ++pos_;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("unexpected character in bracket");
      int value = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + (get() - '0');
        if (value > kMaxBracketIndex) fail("bracket index too large");
      }
      entries.push_back(value);
    }
    if (entries.empty()) fail("empty bracket");
    return entries;
  }

  void skip_blanks() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BracketPolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string format_polynomial(const BracketPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [t, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? Rational(-c) : c;
    if (magnitude != 1 || t.degree() == 0) out += format_rational(magnitude);
    out += to_string(t);
    first = false;
  }
  return out;
}

}  // namespace genrig
