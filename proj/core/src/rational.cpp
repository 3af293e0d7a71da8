#include "pdk/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace pdk {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  return Rational(num) / Rational(den);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Int pow_int(std::int64_t base, std::int64_t exp) {
  if (exp < 0) {
    throw std::invalid_argument("pow_int with negative exponent");
  }
  return boost::multiprecision::pow(Int(base), static_cast<unsigned>(exp));
}

Int mod_floor(const Int& a, const Int& m) {
  if (m <= 0) {
    throw std::invalid_argument("mod_floor with non-positive modulus");
  }
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  // Extended Euclid on (a mod m, m).
  Int r0 = mod_floor(a, m), r1 = m;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) {
    throw std::domain_error("mod_inverse of a non-unit");
  }
  return mod_floor(s0, m);
}

std::optional<std::int64_t> p_power_exponent(const Int& n, std::int64_t p) {
  if (n <= 0) return std::nullopt;
  Int v = n;
  std::int64_t s = 0;
  while (v % p == 0) {
    v /= p;
    ++s;
  }
  if (v != 1) return std::nullopt;
  return s;
}

std::int64_t ord_int(const Int& n, std::int64_t p) {
  if (n == 0) {
    throw std::invalid_argument("ord_int of zero");
  }
  if (n % p != 0) return 0;
  Int v = n / p;
  std::int64_t s = 1;
  while (v % p == 0) {
    v /= p;
    ++s;
  }
  return s;
}

}  // namespace pdk
