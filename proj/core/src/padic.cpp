#include "pdk/padic.hpp"

#include <sstream>
#include <stdexcept>

namespace pdk {

std::int64_t Valuation::value() const {
  if (!finite_) {
    throw std::domain_error("infinite valuation has no integer value");
  }
  return v_;
}

std::string Valuation::to_string() const {
  return finite_ ? std::to_string(v_) : "inf";
}

bool has_p_power_denominator(const Rational& q, std::int64_t p) {
  return p_power_exponent(denominator(q), p).has_value();
}

Valuation ord_rational(const Rational& q, std::int64_t p) {
  if (q == 0) return Valuation::infinity();
  return ord_int(numerator(q), p) - ord_int(denominator(q), p);
}

Valuation ord_diff(const Rational& x, const Rational& y, std::int64_t p) {
  // ord is blind to common factors, so the cross-multiplied numerator works
  // without reducing the fraction.
  const Int n = numerator(x) * denominator(y) - numerator(y) * denominator(x);
  if (n == 0) return Valuation::infinity();
  return ord_int(n, p) - ord_int(denominator(x), p) - ord_int(denominator(y), p);
}

Rational reduce_mod_scalar(const Rational& q, std::int64_t p, std::int64_t alpha) {
  if (q == 0) return q;
  const auto s = p_power_exponent(denominator(q), p);
  if (!s) {
    throw std::domain_error("non p-power denominator");
  }
  const std::int64_t digits = alpha + *s;  // digit positions in [-s, alpha)
  if (digits <= 0) return Rational(0);
  const Int n = mod_floor(numerator(q), pow_int(p, digits));
  return make_rational(n, pow_int(p, *s));
}

Int angular_component(const Rational& x, std::int64_t p, std::int64_t depth) {
  if (x == 0) {
    throw std::domain_error("angular component of zero");
  }
  if (depth < 0) {
    throw std::invalid_argument("negative angular depth");
  }
  if (depth == 0) return Int(0);
  const std::int64_t v = ord_rational(x, p).value();
  // unit = x p^{-v} = a/b with p coprime to both a and b.
  Rational unit = x;
  if (v >= 0) {
    unit /= Rational(pow_int(p, v));
  } else {
    unit *= Rational(pow_int(p, -v));
  }
  const Int m = pow_int(p, depth);
  const Int num = mod_floor(numerator(unit), m);
  const Int den = mod_floor(denominator(unit), m);
  return mod_floor(num * mod_inverse(den, m), m);
}

PAdicPoint::PAdicPoint(std::int64_t p, std::vector<Rational> coords)
    : p_(p), coords_(std::move(coords)) {
  if (!is_prime(p_)) {
    throw std::invalid_argument("p must be prime");
  }
  if (coords_.empty()) {
    throw std::invalid_argument("point dimension must be positive");
  }
  for (const auto& c : coords_) {
    if (!has_p_power_denominator(c, p_)) {
      throw std::domain_error("non p-power denominator");
    }
  }
}

PAdicPoint PAdicPoint::zero(std::int64_t p, std::int64_t dim) {
  return PAdicPoint(p, std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
}

bool PAdicPoint::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

Valuation PAdicPoint::ord() const {
  Valuation acc = Valuation::infinity();
  for (const auto& c : coords_) {
    acc = min(acc, ord_rational(c, p_));
  }
  return acc;
}

PAdicPoint PAdicPoint::reduce_mod(std::int64_t alpha) const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    out.push_back(reduce_mod_scalar(c, p_, alpha));
  }
  return PAdicPoint(p_, std::move(out));
}

Rational PAdicPoint::inner(const PAdicPoint& other) const {
  if (p_ != other.p_ || dim() != other.dim()) {
    throw std::invalid_argument("inner product dimension mismatch");
  }
  Rational acc(0);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    acc += coords_[i] * other.coords_[i];
  }
  return acc;
}

PAdicPoint PAdicPoint::operator-() const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(-c);
  return PAdicPoint(p_, std::move(out));
}

PAdicPoint operator+(const PAdicPoint& a, const PAdicPoint& b) {
  if (a.p_ != b.p_ || a.dim() != b.dim()) {
    throw std::invalid_argument("point sum dimension mismatch");
  }
  std::vector<Rational> out;
  out.reserve(a.coords_.size());
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    out.push_back(a.coords_[i] + b.coords_[i]);
  }
  return PAdicPoint(a.p_, std::move(out));
}

PAdicPoint operator-(const PAdicPoint& a, const PAdicPoint& b) {
  return a + (-b);
}

PAdicPoint operator*(const Rational& s, const PAdicPoint& x) {
  std::vector<Rational> out;
  out.reserve(x.coords_.size());
  for (const auto& c : x.coords_) out.push_back(s * c);
  return PAdicPoint(x.p_, std::move(out));
}

PAdicPoint PAdicPoint::first(std::int64_t n) const {
  if (n <= 0 || n >= dim()) {
    throw std::invalid_argument("bad split position");
  }
  return PAdicPoint(p_, std::vector<Rational>(coords_.begin(), coords_.begin() + n));
}

PAdicPoint PAdicPoint::last(std::int64_t n) const {
  if (n <= 0 || n >= dim()) {
    throw std::invalid_argument("bad split position");
  }
  return PAdicPoint(p_, std::vector<Rational>(coords_.end() - n, coords_.end()));
}

PAdicPoint PAdicPoint::concat(const PAdicPoint& a, const PAdicPoint& b) {
  if (a.p_ != b.p_) {
    throw std::invalid_argument("mismatched prime in concat");
  }
  std::vector<Rational> out = a.coords_;
  out.insert(out.end(), b.coords_.begin(), b.coords_.end());
  return PAdicPoint(a.p_, std::move(out));
}

std::string PAdicPoint::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ",";
    out << rational_to_string(coords_[i]);
  }
  out << ")";
  return out.str();
}

LambdaGroup::LambdaGroup(std::int64_t p, std::int64_t ord_modulus, std::int64_t ac_depth,
                         std::set<std::int64_t> unit_residues)
    : p_(p), ord_modulus_(ord_modulus), ac_depth_(ac_depth) {
  if (!is_prime(p_)) {
    throw std::invalid_argument("p must be prime");
  }
  if (ord_modulus_ < 1 || ac_depth_ < 0) {
    throw std::invalid_argument("bad Lambda parameters");
  }
  const Int m = pow_int(p_, ac_depth_);
  for (std::int64_t r : unit_residues) {
    const Int rr = mod_floor(Int(r), m);
    if (ac_depth_ > 0 && rr % p_ == 0) {
      throw std::invalid_argument("unit residue divisible by p");
    }
    unit_residues_.insert(rr.convert_to<std::int64_t>());
  }
  if (ac_depth_ == 0) {
    unit_residues_ = {0};  // everything is 0 mod 1
  } else {
    if (!unit_residues_.count(1)) {
      throw std::invalid_argument("unit residues must contain 1");
    }
    for (std::int64_t a : unit_residues_) {
      for (std::int64_t b : unit_residues_) {
        const Int prod = mod_floor(Int(a) * Int(b), m);
        if (!unit_residues_.count(prod.convert_to<std::int64_t>())) {
          throw std::invalid_argument("unit residues not closed under multiplication");
        }
      }
    }
  }
}

LambdaGroup LambdaGroup::full_group(std::int64_t p) {
  return LambdaGroup(p, 1, 0, {});
}

LambdaGroup LambdaGroup::congruence_subgroup(std::int64_t p, std::int64_t ord_modulus) {
  return LambdaGroup(p, ord_modulus, 1, {1});
}

bool LambdaGroup::contains(const Rational& lambda) const {
  if (lambda == 0) {
    throw std::domain_error("Lambda membership of zero");
  }
  const std::int64_t v = ord_rational(lambda, p_).value();
  if (((v % ord_modulus_) + ord_modulus_) % ord_modulus_ != 0) return false;
  const Int ac = angular_component(lambda, p_, ac_depth_);
  return unit_residues_.count(ac.convert_to<std::int64_t>()) > 0;
}

std::vector<Rational> LambdaGroup::representatives(std::int64_t ord_lo, std::int64_t ord_hi) const {
  std::vector<Rational> out;
  std::int64_t j = ord_lo;
  // first multiple of ord_modulus_ >= ord_lo
  while (((j % ord_modulus_) + ord_modulus_) % ord_modulus_ != 0) ++j;
  std::vector<std::int64_t> lifts(unit_residues_.begin(), unit_residues_.end());
  if (ac_depth_ == 0) lifts = {1};
  for (; j < ord_hi; j += ord_modulus_) {
    for (std::int64_t u : lifts) {
      Rational lam(u);
      if (j >= 0) {
        lam *= Rational(pow_int(p_, j));
      } else {
        lam /= Rational(pow_int(p_, -j));
      }
      out.push_back(lam);
    }
  }
  return out;
}

}  // namespace pdk
