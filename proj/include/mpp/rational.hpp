#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mpp {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Lowest-terms "p/q" with q > 0. Integers are written as "p/1".
std::string to_fraction_string(const Rational& value);

// Accepts "p/q", "p", or a plain decimal integer. Throws InvalidParameter on
// anything else (including q == 0).
Rational parse_rational(std::string_view text);

// Comma-separated list of rationals, e.g. "1,2,7/2".
RationalVector parse_rational_list(std::string_view text);

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace mpp
