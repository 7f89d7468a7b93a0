#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace genrig {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "7", "-3", "22/7" and "-1/2". Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

// Canonical "num/den" or "num" when the denominator is one.
std::string format_rational(const Rational& q);

inline Rational make_rational(std::int64_t value) {
  Rational q;
  mpz_set_si(q.get_num_mpz_t(), static_cast<long>(value));
  return q;
}

}  // namespace genrig
