#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace polyspace {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p", "p/q" or an exact decimal such as "1.25". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Smallest positive integer vector proportional to `values` (all entries must be positive).
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& values);

}  // namespace polyspace
