#include "genrig/evaluate.hpp"

#include <random>

#include "genrig/error.hpp"
#include "genrig/oracle.hpp"

namespace genrig {

GenericMatrix::GenericMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1) throw Error(ErrorKind::ShapeMismatch, "generic matrix needs at least one row");
  for (std::size_t c = 0; c < entries_.cols(); ++c) {
    if (entries_(entries_.rows() - 1, c) != 1) throw Error(ErrorKind::ShapeMismatch, "last row must be all ones");
  }
}

GenericMatrix GenericMatrix::from_placement(const Placement& p, int num_vertices) {
  RationalMatrix m(static_cast<std::size_t>(p.dim()) + 1, static_cast<std::size_t>(num_vertices));
  for (Vertex x = 1; x <= num_vertices; ++x) {
    const Point& pt = p.at(x);
    for (int k = 0; k < p.dim(); ++k) m(static_cast<std::size_t>(k), static_cast<std::size_t>(x - 1)) = pt[k];
    m(static_cast<std::size_t>(p.dim()), static_cast<std::size_t>(x - 1)) = 1;
  }
  return GenericMatrix(std::move(m));
}

GenericMatrix GenericMatrix::random(int dim, int num_vertices, std::uint64_t seed) {
  return from_placement(random_placement(num_vertices, dim, seed), num_vertices);
}

Rational GenericMatrix::minor(const Bracket& b) const {
  const std::size_t w = entries_.rows();
  if (b.width() != w) {
    throw Error(ErrorKind::WidthMismatch,
                "bracket width " + std::to_string(b.width()) + " but matrix has " + std::to_string(w) + " rows");
  }
  RationalMatrix sub(w, w);
  for (std::size_t k = 0; k < w; ++k) {
    if (b[k] > num_vertices()) {
      throw Error(ErrorKind::IndexOutOfRange, "bracket index " + std::to_string(b[k]) + " exceeds matrix columns");
    }
    for (std::size_t r = 0; r < w; ++r) sub(r, k) = entries_(r, static_cast<std::size_t>(b[k] - 1));
  }
  return det(sub);
}

Rational evaluate(const BracketPolynomial& poly, const GenericMatrix& m) {
  std::map<Bracket, Rational> cache;
  Rational total = 0;
  for (const auto& [t, c] : poly.terms()) {
    Rational term = c;
    for (const Bracket& b : t.rows()) {
      auto it = cache.find(b);
      if (it == cache.end()) it = cache.emplace(b, m.minor(b)).first;
      term *= it->second;
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

std::uint64_t evaluate_mod_p(const BracketPolynomial& poly, const Matrix<std::uint64_t>& columns) {
  const std::size_t w = columns.rows();
  std::map<Bracket, std::uint64_t> cache;
  std::uint64_t total = 0;
  for (const auto& [t, c] : poly.terms()) {
    std::uint64_t term = modp::from_rational(c);
    for (const Bracket& b : t.rows()) {
      auto it = cache.find(b);
      if (it == cache.end()) {
        if (b.width() != w) throw Error(ErrorKind::WidthMismatch, "bracket width does not match matrix rows");
        Matrix<std::uint64_t> sub(w, w);
        for (std::size_t k = 0; k < w; ++k) {
          if (b[k] > static_cast<int>(columns.cols())) {
            throw Error(ErrorKind::IndexOutOfRange, "bracket index exceeds matrix columns");
          }
          for (std::size_t r = 0; r < w; ++r) sub(r, k) = columns(r, static_cast<std::size_t>(b[k] - 1));
        }
        it = cache.emplace(b, modp::det(std::move(sub))).first;
      }
      term = modp::mul(term, it->second);
    }
    total = modp::add(total, term);
  }
  return total;
}

bool probably_zero(const BracketPolynomial& poly, int trials, std::uint64_t seed, EvaluationBackend backend) {
  if (!is_multi_homogeneous(poly).homogeneous) {
    throw Error(ErrorKind::NotMultiHomogeneous, "random evaluation is only sound for multi-homogeneous input");
  }
  if (poly.is_zero()) return true;
  const auto widths = poly.widths();
  if (widths.empty()) return false;  // nonzero constant
  if (widths.size() > 1) throw Error(ErrorKind::ShapeMismatch, "polynomial mixes bracket widths");
  const int dim = static_cast<int>(widths.front()) - 1;
  const int v = poly.max_index();

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    if (backend == EvaluationBackend::Exact) {
      if (evaluate(poly, GenericMatrix::random(dim, v, s)) != 0) return false;
    } else {
      std::mt19937_64 rng(s);
      Matrix<std::uint64_t> m(static_cast<std::size_t>(dim) + 1, static_cast<std::size_t>(v));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = r + 1 == m.rows() ? 1 : rng() % modp::kPrime;
      if (evaluate_mod_p(poly, m) != 0) return false;
    }
  }
  return true;
}

}  // namespace genrig
