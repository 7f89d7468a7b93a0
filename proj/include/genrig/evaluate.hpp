#pragma once

#include <cstdint>
#include <map>

#include "genrig/bracket.hpp"
#include "genrig/graph.hpp"
#include "genrig/linalg.hpp"

namespace genrig {

// (d+1) x v matrix whose column j is (p_j, 1). Brackets of width d+1 evaluate
// to its maximal minors.
class GenericMatrix {
 public:
  GenericMatrix() = default;
  // `entries` must be (d+1) x v with a last row of ones.
  explicit GenericMatrix(RationalMatrix entries);

  static GenericMatrix from_placement(const Placement& p, int num_vertices);
  // Integer coordinates uniform in [-2^20, 2^20].
  static GenericMatrix random(int dim, int num_vertices, std::uint64_t seed);

  int dim() const noexcept { return static_cast<int>(entries_.rows()) - 1; }
  int num_vertices() const noexcept { return static_cast<int>(entries_.cols()); }
  const RationalMatrix& entries() const noexcept { return entries_; }

  // Maximal minor on the columns of b (WidthMismatch / IndexOutOfRange).
  Rational minor(const Bracket& b) const;

 private:
  RationalMatrix entries_;
};

// Replaces each bracket by its minor of m and sums exactly.
Rational evaluate(const BracketPolynomial& poly, const GenericMatrix& m);

// Same over Z/p with p = 2^62 - 57; `columns` is (d+1) x v, last row ones.
std::uint64_t evaluate_mod_p(const BracketPolynomial& poly, const Matrix<std::uint64_t>& columns);

enum class EvaluationBackend { Exact, ModPrime };

// Random-evaluation zero test, sound for multi-homogeneous input: evaluates
// at `trials` random matrices of the (p; 1) form and reports whether every
// value vanished. Throws NotMultiHomogeneous otherwise.
bool probably_zero(const BracketPolynomial& poly, int trials, std::uint64_t seed,
                   EvaluationBackend backend = EvaluationBackend::Exact);

}  // namespace genrig
