#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace pdk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Int& num, const Int& den);

/// Parses "a/b" or "a" with optional sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Renders as "a/b", or "a" when the denominator is 1.
std::string rational_to_string(const Rational& q);

bool is_prime(std::int64_t n);

/// p^e for e >= 0.
Int pow_int(std::int64_t base, std::int64_t exp);

/// Representative of a mod m in [0, m). Requires m > 0.
Int mod_floor(const Int& a, const Int& m);

/// Inverse of a modulo m. Requires gcd(a, m) = 1, m > 1.
Int mod_inverse(const Int& a, const Int& m);

/// Exponent s with n = p^s, or nullopt if n is not a power of p.
std::optional<std::int64_t> p_power_exponent(const Int& n, std::int64_t p);

/// Exponent of p in the factorization of n. Requires n != 0.
std::int64_t ord_int(const Int& n, std::int64_t p);

}  // namespace pdk
