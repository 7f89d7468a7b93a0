#include "genrig/straighten.hpp"

#include <algorithm>
#include <iterator>

#include "genrig/error.hpp"

namespace genrig {

namespace {

// Calls fn(mask-as-positions) for every k-subset of {0..n-1} in lex order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void add_product(BracketPolynomial& out, int sign, const std::vector<int>& first, const std::vector<int>& second) {
  const SignedBracket a = bracket_from_tuple(first);
  if (a.is_zero()) return;
  const SignedBracket b = bracket_from_tuple(second);
  if (b.is_zero()) return;
  out.add_term(Tableau{a.bracket, b.bracket}, Rational(sign * a.sign * b.sign));
}

}  // namespace

BracketPolynomial van_der_waerden_syzygy(const std::vector<int>& alpha, const std::vector<int>& beta,
                                         const std::vector<int>& gamma, std::size_t width) {
  const std::size_t s = alpha.size() + 1;
  if (width == 0 || s > width || beta.size() != width + 1 || gamma.size() != width - s) {
    throw Error(ErrorKind::ShapeMismatch, "syzygy needs |alpha| = s-1, |beta| = w+1, |gamma| = w-s with 1 <= s <= w");
  }

  BracketPolynomial out;
  std::vector<int> order(width + 1);
  std::vector<int> first;
  std::vector<int> second;
  for_each_subset(width + 1, s, [&](const std::vector<std::size_t>& tau) {
    std::vector<bool> in_tau(width + 1, false);
    for (std::size_t p : tau) in_tau[p] = true;

    // (tau, tau*) as a sequence of positions; its sign is sgn(tau, tau*).
    order.clear();
    first.assign(alpha.begin(), alpha.end());
    second.clear();
    for (std::size_t p : tau) {
      order.push_back(static_cast<int>(p));
      second.push_back(beta[p]);
    }
    for (std::size_t p = 0; p <= width; ++p) {
      if (in_tau[p]) continue;
      order.push_back(static_cast<int>(p));
      first.push_back(beta[p]);
    }
    second.insert(second.end(), gamma.begin(), gamma.end());
    add_product(out, permutation_sign(order), first, second);
  });
  return out;
}

BracketPolynomial straighten(const BracketPolynomial& poly, const StraightenOptions& options) {
  if (poly.widths().size() > 1) throw Error(ErrorKind::ShapeMismatch, "polynomial mixes bracket widths");

  BracketPolynomial::Terms work = poly.terms();
  BracketPolynomial result;
  std::vector<int> alpha, beta, gamma;

  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Tableau t = top->first;
    const Rational c = top->second;
    work.erase(top);

    const auto violation = first_violation(t);
    if (!violation) {
      // Everything still pending is smaller than t and everything generated
      // later is smaller still, so t is final.
      result.add_term(t, c);
      continue;
    }

    const Bracket& upper = t.rows()[violation->row];
    const Bracket& lower = t.rows()[violation->row + 1];
    const std::size_t w = upper.width();
    const std::size_t col = violation->column;

    alpha.clear();
    for (std::size_t k = 0; k < col; ++k) alpha.push_back(upper[k]);
    beta.clear();
    for (std::size_t k = 0; k <= col; ++k) beta.push_back(lower[k]);
    for (std::size_t k = col; k < w; ++k) beta.push_back(upper[k]);
    gamma.clear();
    for (std::size_t k = col + 1; k < w; ++k) gamma.push_back(lower[k]);

    const BracketPolynomial syzygy = van_der_waerden_syzygy(alpha, beta, gamma, w);
    const Tableau pair{upper, lower};
    const Rational lead = syzygy.coefficient(pair);
    if (lead == 0) throw Error(ErrorKind::PreconditionViolated, "straightening syzygy misses " + to_string(pair));

    std::vector<Bracket> spectator_rows;
    spectator_rows.reserve(t.degree() - 2);
    for (std::size_t r = 0; r < t.degree(); ++r) {
      if (r != violation->row && r != violation->row + 1) spectator_rows.push_back(t.rows()[r]);
    }
    const Tableau spectators(std::move(spectator_rows));
    const Rational factor = c / lead;

    for (const auto& [st, sc] : syzygy.terms()) {
      if (st == pair) continue;
      Tableau next = st * spectators;
      auto [it, inserted] = work.try_emplace(std::move(next), -factor * sc);
      if (!inserted) {
        it->second -= factor * sc;
        if (it->second == 0) work.erase(it);
      }
    }
    if (work.size() > options.max_terms) {
      throw Error(ErrorKind::ExpressionBlowup,
                  "straightening exceeded " + std::to_string(options.max_terms) + " pending terms");
    }
  }
  return result;
}

bool straightens_to_zero(const BracketPolynomial& poly, const StraightenOptions& options) {
  return straighten(poly, options).is_zero();
}

bool straightens_to_zero_reduced(const BracketPolynomial& poly, const StraightenOptions& options) {
  if (poly.is_zero()) return true;
  return straighten(poly.divided_by(poly.content_factor()), options).is_zero();
}

BracketPolynomial plucker_relation(const std::vector<int>& i_tuple, const std::vector<int>& j_tuple) {
  if (i_tuple.size() < 2 || j_tuple.size() + 2 != i_tuple.size()) {
    throw Error(ErrorKind::ShapeMismatch, "Plucker relation needs |i| = w+1 and |j| = w-1");
  }
  BracketPolynomial out;
  for (std::size_t k = 0; k < i_tuple.size(); ++k) {
    std::vector<int> first;
    for (std::size_t m = 0; m < i_tuple.size(); ++m)
      if (m != k) first.push_back(i_tuple[m]);
    std::vector<int> second{i_tuple[k]};
    second.insert(second.end(), j_tuple.begin(), j_tuple.end());
    // k is 0-based here, so (-1)^(k+1).
    add_product(out, k % 2 == 0 ? -1 : 1, first, second);
  }
  return out;
}

BracketPolynomial exchange_expand(const Tableau& t, std::size_t row_a, std::size_t row_b,
                                  const std::vector<std::size_t>& boxes_b) {
  if (row_a == row_b || row_a >= t.degree() || row_b >= t.degree()) {
    throw Error(ErrorKind::ShapeMismatch, "exchange needs two distinct rows of the tableau");
  }
  const std::size_t w = t.width();
  std::vector<std::size_t> fixed = boxes_b;
  std::sort(fixed.begin(), fixed.end());
  if (fixed.empty() || fixed.back() >= w || std::adjacent_find(fixed.begin(), fixed.end()) != fixed.end()) {
    throw Error(ErrorKind::ShapeMismatch, "exchange boxes must be distinct positions within the row");
  }

  std::vector<Bracket> spectator_rows;
  for (std::size_t r = 0; r < t.degree(); ++r)
    if (r != row_a && r != row_b) spectator_rows.push_back(t.rows()[r]);
  const Tableau spectators(std::move(spectator_rows));

  const std::vector<int> a = t.rows()[row_a].entries();
  const std::vector<int> b = t.rows()[row_b].entries();
  BracketPolynomial out;
  for_each_subset(w, fixed.size(), [&](const std::vector<std::size_t>& chosen) {
    std::vector<int> na = a;
    std::vector<int> nb = b;
    for (std::size_t k = 0; k < fixed.size(); ++k) {
      na[chosen[k]] = b[fixed[k]];
      nb[fixed[k]] = a[chosen[k]];
    }
    const SignedBracket sa = bracket_from_tuple(na);
    const SignedBracket sb = bracket_from_tuple(nb);
    if (sa.is_zero() || sb.is_zero()) return;
    out.add_term(Tableau{sa.bracket, sb.bracket} * spectators, Rational(sa.sign * sb.sign));
  });
  return out;
}

}  // namespace genrig
