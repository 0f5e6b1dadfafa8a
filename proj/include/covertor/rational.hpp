#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace covertor {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p", "p/q", optionally signed with '-', '+' or U+2212.
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

bool is_integral(const Rational& q);

}  // namespace covertor
