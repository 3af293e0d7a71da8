#include "pdk/scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pdk {

namespace {

void require_same_prime(const CycScalar& a, const CycScalar& b) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument("mismatched prime in cyclotomic arithmetic");
  }
}

void require_valid_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p must be prime");
  }
}

// Folds coefficients indexed by exponents in [0, p^level) onto the power
// basis of length phi(p^level), using
//   zeta^{(p-1)p^{k-1} + r} = -sum_{i=0}^{p-2} zeta^{r + i p^{k-1}}.
std::vector<Rational> reduce_exponents(std::int64_t p, std::int64_t level,
                                       const std::map<Int, Rational>& by_exponent) {
  const std::int64_t phi = cyclotomic_degree(p, level);
  const Int pk = pow_int(p, level);
  const Int step = level > 0 ? pow_int(p, level - 1) : Int(1);
  std::vector<Rational> out(static_cast<std::size_t>(phi), Rational(0));
  for (const auto& [e, c] : by_exponent) {
    if (c == 0) continue;
    Int n = mod_floor(e, pk);
    if (n < phi) {
      out[static_cast<std::size_t>(n)] += c;
    } else {
      const Int r = n - Int(phi);  // r in [0, p^{k-1})
      for (std::int64_t i = 0; i + 1 < p; ++i) {
        Int idx = r + Int(i) * step;
        out[static_cast<std::size_t>(idx)] -= c;
      }
    }
  }
  return out;
}

}  // namespace

std::int64_t cyclotomic_degree(std::int64_t p, std::int64_t level) {
  if (level < 0) {
    throw std::invalid_argument("negative cyclotomic level");
  }
  if (level == 0) return 1;
  Int phi = pow_int(p, level) - pow_int(p, level - 1);
  if (phi > Int(1) << 24) {
    throw std::length_error("cyclotomic level too large");
  }
  return phi.convert_to<std::int64_t>();
}

CycScalar::CycScalar(std::int64_t p, std::int64_t level, std::vector<Rational> coeffs)
    : p_(p), level_(level), coeffs_(std::move(coeffs)) {
  canonicalize();
}

CycScalar CycScalar::zero(std::int64_t p) {
  require_valid_prime(p);
  return CycScalar(p, 0, {Rational(0)});
}

CycScalar CycScalar::one(std::int64_t p) {
  require_valid_prime(p);
  return CycScalar(p, 0, {Rational(1)});
}

CycScalar CycScalar::from_rational(std::int64_t p, const Rational& value) {
  require_valid_prime(p);
  return CycScalar(p, 0, {value});
}

CycScalar CycScalar::from_int(std::int64_t p, std::int64_t value) {
  return from_rational(p, Rational(value));
}

CycScalar CycScalar::root_of_unity(std::int64_t p, std::int64_t level, const Int& exponent) {
  require_valid_prime(p);
  std::map<Int, Rational> one_term;
  one_term[mod_floor(exponent, pow_int(p, level))] = Rational(1);
  return CycScalar(p, level, reduce_exponents(p, level, one_term));
}

CycScalar CycScalar::from_coeffs(std::int64_t p, std::int64_t level, std::vector<Rational> coeffs) {
  require_valid_prime(p);
  if (static_cast<std::int64_t>(coeffs.size()) != cyclotomic_degree(p, level)) {
    throw std::invalid_argument("coefficient vector length must be phi(p^level)");
  }
  return CycScalar(p, level, std::move(coeffs));
}

void CycScalar::canonicalize() {
  while (level_ >= 1) {
    bool support_divisible = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] != 0 && j % static_cast<std::size_t>(p_) != 0) {
        support_divisible = false;
        break;
      }
    }
    if (!support_divisible) break;
    const std::int64_t lower_phi = cyclotomic_degree(p_, level_ - 1);
    std::vector<Rational> lower(static_cast<std::size_t>(lower_phi), Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); j += static_cast<std::size_t>(p_)) {
      lower[j / static_cast<std::size_t>(p_)] = coeffs_[j];
    }
    coeffs_ = std::move(lower);
    --level_;
  }
}

bool CycScalar::is_zero() const {
  return level_ == 0 && coeffs_[0] == 0;
}

const Rational& CycScalar::rational_value() const {
  if (level_ != 0) {
    throw std::domain_error("scalar is not rational");
  }
  return coeffs_[0];
}

CycScalar CycScalar::conjugate() const {
  if (level_ == 0) return *this;
  const Int pk = pow_int(p_, level_);
  std::map<Int, Rational> flipped;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    flipped[mod_floor(pk - Int(j), pk)] += coeffs_[j];
  }
  return CycScalar(p_, level_, reduce_exponents(p_, level_, flipped));
}

bool CycScalar::is_unit_modulus() const {
  return (*this * conjugate()) == one(p_);
}

std::complex<double> CycScalar::to_complex() const {
  const double order = pow_int(p_, level_).convert_to<double>();
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order;
    acc += coeffs_[j].convert_to<double>() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string CycScalar::to_string() const {
  if (level_ == 0) return rational_to_string(coeffs_[0]);
  std::ostringstream out;
  const std::string root = "z" + pow_int(p_, level_).convert_to<std::string>();
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (j == 0) {
      out << rational_to_string(mag);
    } else {
      if (mag != 1) out << rational_to_string(mag) << "*";
      out << root;
      if (j > 1) out << "^" << j;
    }
  }
  return out.str();
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
  require_same_prime(*this, rhs);
  CycAccumulator acc(p_);
  acc.add(*this);
  acc.add(rhs);
  *this = acc.take();
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
  return *this += -rhs;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
  require_same_prime(*this, rhs);
  if (is_zero() || rhs.is_zero()) {
    *this = zero(p_);
    return *this;
  }
  const std::int64_t level = std::max(level_, rhs.level_);
  const Int lift_a = pow_int(p_, level - level_);
  const Int lift_b = pow_int(p_, level - rhs.level_);
  std::map<Int, Rational> prod;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const Int ei = Int(i) * lift_a;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      prod[ei + Int(j) * lift_b] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  *this = CycScalar(p_, level, reduce_exponents(p_, level, prod));
  return *this;
}

CycScalar& CycScalar::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    *this = zero(p_);
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  return a.p_ == b.p_ && a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
}

CycScalar psi(std::int64_t p, const Rational& x) {
  const auto [level, exponent] = psi_exponent(p, x);
  return CycScalar::root_of_unity(p, level, exponent);
}

std::pair<std::int64_t, Int> psi_exponent(std::int64_t p, const Rational& x) {
  require_valid_prime(p);
  const Rational q = x / Rational(p);
  const auto s = p_power_exponent(denominator(q), p);
  if (!s) {
    throw std::domain_error("non p-power denominator");
  }
  if (*s == 0) return {0, Int(0)};
  // frac_p(q) = (num mod p^s) / p^s; Psi(x) = zeta_{p^s}^{num mod p^s}.
  return {*s, mod_floor(numerator(q), pow_int(p, *s))};
}

void CycAccumulator::raise_level(std::int64_t level) {
  if (level <= level_) return;
  const Int lift = pow_int(p_, level - level_);
  std::map<Int, Rational> raised;
  for (const auto& [e, c] : by_exponent_) {
    raised[e * lift] = c;
  }
  by_exponent_ = std::move(raised);
  level_ = level;
}

void CycAccumulator::add(const CycScalar& value) {
  add_rotated(value, 0, Int(0));
}

void CycAccumulator::add_rotated(const CycScalar& value, std::int64_t level, const Int& exponent) {
  if (value.prime() != p_) {
    throw std::invalid_argument("mismatched prime in accumulator");
  }
  if (value.is_zero()) return;
  raise_level(std::max(level, value.level()));
  const Int pk = pow_int(p_, level_);
  const Int rot = mod_floor(exponent, pow_int(p_, level)) * pow_int(p_, level_ - level);
  const Int lift = pow_int(p_, level_ - value.level());
  const auto& cs = value.coeffs();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j] == 0) continue;
    by_exponent_[mod_floor(Int(j) * lift + rot, pk)] += cs[j];
  }
}

CycScalar CycAccumulator::take() {
  auto coeffs = reduce_exponents(p_, level_, by_exponent_);
  CycScalar out = CycScalar::from_coeffs(p_, level_, std::move(coeffs));
  by_exponent_.clear();
  level_ = 0;
  return out;
}

}  // namespace pdk
