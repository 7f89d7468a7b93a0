#include "genrig/bracket.hpp"

#include <algorithm>
#include <numeric>

#include "genrig/error.hpp"

namespace genrig {

Bracket::Bracket(std::span<const int> sorted) {
  if (sorted.size() > kMaxBracketWidth) {
    throw Error(ErrorKind::WidthMismatch, "bracket width exceeds " + std::to_string(kMaxBracketWidth));
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > kMaxBracketIndex) {
      throw Error(ErrorKind::IndexOutOfRange, "bracket index " + std::to_string(sorted[i]) + " outside 1..255");
    }
    if (i > 0 && sorted[i] <= sorted[i - 1]) {
      throw Error(ErrorKind::ShapeMismatch, "bracket entries must be strictly increasing");
    }
    idx_[i] = static_cast<std::uint8_t>(sorted[i]);
  }
  width_ = static_cast<std::uint8_t>(sorted.size());
}

Bracket::Bracket(std::initializer_list<int> sorted) : Bracket(std::span<const int>(sorted.begin(), sorted.size())) {}

bool Bracket::contains(int x) const noexcept {
  for (std::size_t i = 0; i < width_; ++i) {
    if (idx_[i] == x) return true;
  }
  return false;
}

int permutation_sign(std::span<const int> sequence) {
  int inversions = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      if (sequence[i] > sequence[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

SignedBracket bracket_from_tuple(std::span<const int> indices, int ground_size) {
  for (int x : indices) {
    const int upper = ground_size > 0 ? ground_size : kMaxBracketIndex;
    if (x < 1 || x > upper) {
      throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(x) + " outside 1.." + std::to_string(upper));
    }
  }
  std::vector<int> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  return {Bracket(sorted), permutation_sign(indices)};
}

SignedBracket bracket_from_tuple(std::initializer_list<int> indices, int ground_size) {
  return bracket_from_tuple(std::span<const int>(indices.begin(), indices.size()), ground_size);
}

std::string to_string(const Bracket& b) {
  std::string s = "[";
  for (std::size_t i = 0; i < b.width(); ++i) {
    if (i) s += ',';
    s += std::to_string(b[i]);
  }
  return s + "]";
}

Tableau::Tableau(std::vector<Bracket> rows) : rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end());
  for (const Bracket& b : rows_) {
    if (b.width() != rows_.front().width()) throw Error(ErrorKind::WidthMismatch, "tableau rows differ in width");
  }
}

Tableau::Tableau(std::initializer_list<Bracket> rows) : Tableau(std::vector<Bracket>(rows)) {}

Tableau Tableau::operator*(const Tableau& other) const {
  Tableau out = *this;
  out *= other;
  return out;
}

Tableau& Tableau::operator*=(const Tableau& other) {
  if (!rows_.empty() && !other.rows_.empty() && width() != other.width()) {
    throw Error(ErrorKind::WidthMismatch, "multiplying tableaux of different widths");
  }
  std::vector<Bracket> merged;
  merged.reserve(rows_.size() + other.rows_.size());
  std::merge(rows_.begin(), rows_.end(), other.rows_.begin(), other.rows_.end(), std::back_inserter(merged));
  rows_ = std::move(merged);
  return *this;
}

std::optional<Tableau> Tableau::divide(const Tableau& factor) const {
  std::vector<Bracket> rest;
  rest.reserve(rows_.size());
  auto f = factor.rows_.begin();
  for (const Bracket& b : rows_) {
    if (f != factor.rows_.end() && *f == b) {
      ++f;
    } else {
      if (f != factor.rows_.end() && *f < b) return std::nullopt;
      rest.push_back(b);
    }
  }
  if (f != factor.rows_.end()) return std::nullopt;
  Tableau out;
  out.rows_ = std::move(rest);
  return out;
}

std::strong_ordering Tableau::operator<=>(const Tableau& other) const {
  if (auto c = rows_.size() <=> other.rows_.size(); c != 0) return c;
  return rows_ <=> other.rows_;
}

std::optional<ColumnViolation> first_violation(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].width(); ++c) {
      if (rows[r][c] > rows[r + 1][c]) return ColumnViolation{r, c};
    }
  }
  return std::nullopt;
}

bool is_standard(const Tableau& t) { return !first_violation(t).has_value(); }

std::string to_string(const Tableau& t) {
  std::string s;
  for (const Bracket& b : t.rows()) s += to_string(b);
  return s;
}

Tableau common_factor(const Tableau& a, const Tableau& b) {
  std::vector<Bracket> common;
  std::set_intersection(a.rows().begin(), a.rows().end(), b.rows().begin(), b.rows().end(),
                        std::back_inserter(common));
  return Tableau(std::move(common));
}

SignedTableau signed_tableau_from_tuples(const std::vector<std::vector<int>>& tuples) {
  SignedTableau out;
  std::vector<Bracket> rows;
  for (const auto& tuple : tuples) {
    const SignedBracket sb = bracket_from_tuple(tuple);
    if (sb.is_zero()) return {0, Tableau{}};
    out.sign *= sb.sign;
    rows.push_back(sb.bracket);
  }
  out.tableau = Tableau(std::move(rows));
  return out;
}

MultiDegree multidegree(const Tableau& t) {
  MultiDegree deg;
  for (const Bracket& b : t.rows())
    for (std::size_t i = 0; i < b.width(); ++i) ++deg[b[i]];
  return deg;
}

BracketPolynomial BracketPolynomial::monomial(const Tableau& t, const Rational& c) {
  BracketPolynomial p;
  p.add_term(t, c);
  return p;
}

BracketPolynomial BracketPolynomial::from(const SignedTableau& t) {
  BracketPolynomial p;
  if (t.sign != 0) p.add_term(t.tableau, Rational(t.sign));
  return p;
}

void BracketPolynomial::add_term(const Tableau& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational BracketPolynomial::coefficient(const Tableau& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

int BracketPolynomial::max_index() const {
  int m = 0;
  for (const auto& [t, c] : terms_)
    for (const Bracket& b : t.rows())
      if (b.width()) m = std::max(m, b[b.width() - 1]);
  return m;
}

std::vector<std::size_t> BracketPolynomial::widths() const {
  std::vector<std::size_t> w;
  for (const auto& [t, c] : terms_) {
    if (t.degree() && std::find(w.begin(), w.end(), t.width()) == w.end()) w.push_back(t.width());
  }
  std::sort(w.begin(), w.end());
  return w;
}

BracketPolynomial& BracketPolynomial::operator+=(const BracketPolynomial& other) {
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

BracketPolynomial& BracketPolynomial::operator-=(const BracketPolynomial& other) {
  for (const auto& [t, c] : other.terms_) add_term(t, -c);
  return *this;
}

BracketPolynomial& BracketPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff *= c;
  return *this;
}

BracketPolynomial BracketPolynomial::operator-() const {
  BracketPolynomial out = *this;
  for (auto& [t, c] : out.terms_) c = -c;
  return out;
}

BracketPolynomial operator*(const BracketPolynomial& a, const BracketPolynomial& b) {
  BracketPolynomial out;
  for (const auto& [ta, ca] : a.terms_)
    for (const auto& [tb, cb] : b.terms_) out.add_term(ta * tb, ca * cb);
  return out;
}

BracketPolynomial operator*(const BracketPolynomial& a, const Tableau& t) {
  BracketPolynomial out;
  for (const auto& [ta, ca] : a.terms_) out.terms_.emplace(ta * t, ca);
  return out;
}

Tableau BracketPolynomial::content_factor() const {
  if (terms_.empty()) return {};
  Tableau f = terms_.begin()->first;
  for (const auto& [t, c] : terms_) {
    f = common_factor(f, t);
    if (f.degree() == 0) break;
  }
  return f;
}

BracketPolynomial BracketPolynomial::divided_by(const Tableau& factor) const {
  BracketPolynomial out;
  for (const auto& [t, c] : terms_) {
    auto q = t.divide(factor);
    if (!q) throw Error(ErrorKind::PreconditionViolated, to_string(factor) + " does not divide " + to_string(t));
    out.terms_.emplace(std::move(*q), c);
  }
  return out;
}

Homogeneity is_multi_homogeneous(const BracketPolynomial& p) {
  Homogeneity h;
  bool first = true;
  for (const auto& [t, c] : p.terms()) {
    MultiDegree deg = multidegree(t);
    if (first) {
      h.degree = std::move(deg);
      first = false;
    } else if (deg != h.degree) {
      return {false, {}};
    }
  }
  return h;
}

}  // namespace genrig
