#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genrig/rational.hpp"

namespace genrig {

inline constexpr std::size_t kMaxBracketWidth = 16;
inline constexpr int kMaxBracketIndex = 255;

// A sorted bracket [l_1 < l_2 < ... < l_w]. Ordered by width, then
// lexicographically on the entries.
class Bracket {
 public:
  Bracket() = default;
  // Entries must be strictly increasing in 1..255.
  explicit Bracket(std::span<const int> sorted);
  Bracket(std::initializer_list<int> sorted);

  std::size_t width() const noexcept { return width_; }
  int operator[](std::size_t i) const noexcept { return idx_[i]; }
  std::vector<int> entries() const { return {idx_.begin(), idx_.begin() + width_}; }
  bool contains(int x) const noexcept;

  auto operator<=>(const Bracket&) const = default;

 private:
  std::uint8_t width_ = 0;
  std::array<std::uint8_t, kMaxBracketWidth> idx_{};
};

// bracket_from_tuple result. sign is the sign of the sorting permutation, or 0
// for the zero bracket (repeated index), in which case `bracket` is unspecified.
struct SignedBracket {
  Bracket bracket;
  int sign = 0;

  bool is_zero() const noexcept { return sign == 0; }
};

// ground_size > 0 enforces indices in 1..ground_size (IndexOutOfRange).
SignedBracket bracket_from_tuple(std::span<const int> indices, int ground_size = 0);
SignedBracket bracket_from_tuple(std::initializer_list<int> indices, int ground_size = 0);

// Sign of the permutation written as a sequence of distinct keys.
int permutation_sign(std::span<const int> sequence);

std::string to_string(const Bracket& b);

// A monomial in the bracket ring: a multiset of equal-width brackets kept
// sorted ascending, so the rows read top to bottom in bracket order.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<Bracket> rows);
  Tableau(std::initializer_list<Bracket> rows);

  const std::vector<Bracket>& rows() const noexcept { return rows_; }
  std::size_t degree() const noexcept { return rows_.size(); }
  // 0 for the empty tableau (the constant monomial).
  std::size_t width() const noexcept { return rows_.empty() ? 0 : rows_.front().width(); }

  Tableau operator*(const Tableau& other) const;
  Tableau& operator*=(const Tableau& other);

  // Removes one copy of each row of `factor`; nullopt if `factor` does not divide.
  std::optional<Tableau> divide(const Tableau& factor) const;

  // Tableaux order: degree first, then lexicographic on the sorted rows.
  std::strong_ordering operator<=>(const Tableau& other) const;
  bool operator==(const Tableau& other) const = default;

 private:
  std::vector<Bracket> rows_;
};

struct ColumnViolation {
  std::size_t row = 0;     // violation sits between rows `row` and `row + 1`
  std::size_t column = 0;  // 0-based
};

// First violation scanning adjacent row pairs top-down, then columns left to right.
std::optional<ColumnViolation> first_violation(const Tableau& t);

// Every column weakly increasing downward.
bool is_standard(const Tableau& t);

std::string to_string(const Tableau& t);

// Multiset intersection: the largest monomial dividing both.
Tableau common_factor(const Tableau& a, const Tableau& b);

// Tableau with a sign, used for tree shelves and certificate chain products
// where every factor is a sign-normalised bracket.
struct SignedTableau {
  int sign = 1;
  Tableau tableau;

  SignedTableau operator*(const SignedTableau& other) const {
    return {sign * other.sign, tableau * other.tableau};
  }
  bool operator==(const SignedTableau&) const = default;
};

SignedTableau signed_tableau_from_tuples(const std::vector<std::vector<int>>& tuples);

// Vertex multiplicities: vertex -> number of factors containing it.
using MultiDegree = std::map<int, int>;
MultiDegree multidegree(const Tableau& t);

// Finite linear combination of tableaux with exact rational coefficients. Zero
// coefficients are never stored.
class BracketPolynomial {
 public:
  using Terms = std::map<Tableau, Rational>;

  BracketPolynomial() = default;
  static BracketPolynomial monomial(const Tableau& t, const Rational& c = Rational(1));
  static BracketPolynomial from(const SignedTableau& t);

  void add_term(const Tableau& t, const Rational& c);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Tableau& t) const;

  // Largest index appearing in any bracket (0 for constants).
  int max_index() const;
  // Distinct bracket widths among the terms (constants excluded).
  std::vector<std::size_t> widths() const;

  BracketPolynomial& operator+=(const BracketPolynomial& other);
  BracketPolynomial& operator-=(const BracketPolynomial& other);
  BracketPolynomial& operator*=(const Rational& c);
  BracketPolynomial operator-() const;

  friend BracketPolynomial operator+(BracketPolynomial a, const BracketPolynomial& b) { return a += b; }
  friend BracketPolynomial operator-(BracketPolynomial a, const BracketPolynomial& b) { return a -= b; }
  friend BracketPolynomial operator*(const BracketPolynomial& a, const BracketPolynomial& b);
  friend BracketPolynomial operator*(BracketPolynomial a, const Rational& c) { return a *= c; }
  friend BracketPolynomial operator*(const BracketPolynomial& a, const Tableau& t);

  bool operator==(const BracketPolynomial& other) const { return terms_ == other.terms_; }

  // Largest monomial dividing every term; the empty tableau for 0.
  Tableau content_factor() const;
  // Exact division by a monomial dividing every term.
  BracketPolynomial divided_by(const Tableau& factor) const;

 private:
  Terms terms_;
};

struct Homogeneity {
  bool homogeneous = true;
  MultiDegree degree;  // the common multidegree when homogeneous
};

// Each vertex occurs in the same number of factors in every term. The zero
// polynomial is homogeneous with an empty degree.
Homogeneity is_multi_homogeneous(const BracketPolynomial& p);

}  // namespace genrig
