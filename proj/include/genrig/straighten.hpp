#pragma once

#include <cstddef>
#include <vector>

#include "genrig/bracket.hpp"

namespace genrig {

// [[alpha . beta gamma]] for brackets of width w with s = |alpha| + 1:
//   sum over s-subsets tau of the positions of beta of
//   sgn(tau, tau*) [alpha beta_tau*] [beta_tau gamma].
// Requires |beta| = w + 1 and |gamma| = w - s (ShapeMismatch otherwise).
BracketPolynomial van_der_waerden_syzygy(const std::vector<int>& alpha, const std::vector<int>& beta,
                                         const std::vector<int>& gamma, std::size_t width);

struct StraightenOptions {
  // Working set cap. Exceeding it raises ExpressionBlowup.
  std::size_t max_terms = 1'000'000;
};

// Normal form in the standard-tableau basis. Repeatedly takes the largest
// nonstandard tableau in the tableaux order and cancels it against the
// straightening syzygy built at its first column violation; every other term
// of that syzygy is strictly smaller, so the loop terminates.
BracketPolynomial straighten(const BracketPolynomial& poly, const StraightenOptions& options = {});

bool straightens_to_zero(const BracketPolynomial& poly, const StraightenOptions& options = {});

// Same answer as straightens_to_zero, after dividing out the largest monomial
// common to all terms. The bracket ring is a domain, so a nonzero monomial
// factor never changes whether a polynomial vanishes.
bool straightens_to_zero_reduced(const BracketPolynomial& poly, const StraightenOptions& options = {});

// sum_k (-1)^k [i_1 .. ^i_k .. i_{w+1}] [i_k j_1 .. j_{w-1}] with w = |i| - 1.
BracketPolynomial plucker_relation(const std::vector<int>& i_tuple, const std::vector<int>& j_tuple);

// Sylvester exchange on rows `row_a` and `row_b` of t: the fixed boxes
// `boxes_b` (positions in row_b) are swapped, order preserved, with every
// choice of |boxes_b| positions in row_a. Returns the sign-free sum of the
// resulting fillings, each normalised back into sorted brackets.
BracketPolynomial exchange_expand(const Tableau& t, std::size_t row_a, std::size_t row_b,
                                  const std::vector<std::size_t>& boxes_b);

}  // namespace genrig
