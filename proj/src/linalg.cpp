#include "genrig/linalg.hpp"

#include <algorithm>

#include "genrig/error.hpp"

namespace genrig {

namespace {

// Runs Bareiss elimination in place and returns the rank. When `det_sign` is
// non-null the sign flips caused by row swaps are accumulated into it.
std::size_t bareiss_in_place(IntegerMatrix& m, int* det_sign) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      m.swap_rows(pivot, r);
      if (det_sign) *det_sign = -*det_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

IntegerMatrix clear_row_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

}  // namespace

std::size_t rank_bareiss(IntegerMatrix m) { return bareiss_in_place(m, nullptr); }

Integer det_bareiss(IntegerMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  int sign = 1;
  const std::size_t r = bareiss_in_place(m, &sign);
  if (r < m.rows()) return 0;
  Integer d = m(m.rows() - 1, m.cols() - 1);
  return sign < 0 ? Integer(-d) : d;
}

std::size_t rank(const RationalMatrix& m) { return rank_bareiss(clear_row_denominators(m)); }

Rational det(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  Rational scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= Rational(l);
  }
  Rational d(det_bareiss(clear_row_denominators(m)));
  d /= scale;
  return d;
}

RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, r);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(m.cols(), Rational(0));
    x[free] = 1;
    for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) x[e.pivot_columns[k]] = -e.reduced(k, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<RationalVector> left_nullspace(const RationalMatrix& m) { return nullspace(m.transposed()); }

RationalVector multiply(const RationalVector& row, const RationalMatrix& m) {
  if (row.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "vector/matrix size mismatch");
  RationalVector out(m.cols(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (row[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += row[r] * m(r, c);
  }
  return out;
}

namespace modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kPrime;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t from_integer(const Integer& z) {
  Integer r = z % Integer(static_cast<unsigned long>(kPrime));
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return r.get_ui();
}

std::uint64_t from_rational(const Rational& q) {
  const std::uint64_t den = from_integer(q.get_den());
  if (den == 0) throw Error(ErrorKind::SingularDenominator, "denominator vanishes modulo the prime");
  return mul(from_integer(q.get_num()), inv(den));
}

namespace {

std::size_t eliminate(Matrix<std::uint64_t>& m, bool& negated, std::uint64_t& pivot_product) {
  std::size_t r = 0;
  pivot_product = 1;
  negated = false;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      m.swap_rows(pivot, r);
      negated = !negated;
    }
    pivot_product = mul(pivot_product, m(r, c));
    const std::uint64_t inv_pivot = inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const std::uint64_t f = mul(m(i, c), inv_pivot);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = sub(m(i, j), mul(f, m(r, j)));
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(Matrix<std::uint64_t> m) {
  bool negated = false;
  std::uint64_t product = 1;
  return eliminate(m, negated, product);
}

std::uint64_t det(Matrix<std::uint64_t> m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  bool negated = false;
  std::uint64_t product = 1;
  if (eliminate(m, negated, product) < m.rows()) return 0;
  return negated ? sub(0, product) : product;
}

}  // namespace modp

}  // namespace genrig
