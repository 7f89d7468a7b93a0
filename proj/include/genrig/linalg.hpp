#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "genrig/rational.hpp"

namespace genrig {

// Dense row-major matrix. Small and exact; no expression templates.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;
using RationalVector = std::vector<Rational>;

// Fraction-free (Bareiss) elimination; the input is consumed.
std::size_t rank_bareiss(IntegerMatrix m);
Integer det_bareiss(IntegerMatrix m);

// Scales each row to clear denominators, then runs Bareiss.
std::size_t rank(const RationalMatrix& m);
Rational det(const RationalMatrix& m);

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon rref(RationalMatrix m);

// Basis of {x : m x = 0}. One vector per free column, with that free variable
// set to 1 and the other free variables set to 0.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

// Left kernel {y : y m = 0}, same free-variable convention over the rows.
std::vector<RationalVector> left_nullspace(const RationalMatrix& m);

RationalVector multiply(const RationalVector& row, const RationalMatrix& m);

// Arithmetic modulo the largest prime below 2^62.
namespace modp {

inline constexpr std::uint64_t kPrime = 4611686018427387847ULL;  // 2^62 - 57

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % kPrime);
}
std::uint64_t pow(std::uint64_t base, std::uint64_t exp);
inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }
std::uint64_t from_integer(const Integer& z);
std::uint64_t from_rational(const Rational& q);  // throws if the denominator vanishes mod p

std::size_t rank(Matrix<std::uint64_t> m);
std::uint64_t det(Matrix<std::uint64_t> m);

}  // namespace modp

}  // namespace genrig
