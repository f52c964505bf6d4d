#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cychom {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (optional surrounding blanks). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Binomial coefficient C(alpha, j) for rational alpha.
Rational binomial(const Rational& alpha, int j);

}  // namespace cychom
