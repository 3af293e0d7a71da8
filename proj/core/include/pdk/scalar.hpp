#pragma once

#include "pdk/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pdk {

/// Element of the p-power cyclotomic tower Q(zeta_{p^oo}), stored at its
/// minimal level k in the power basis 1, z, ..., z^{phi(p^k)-1} of
/// Q(zeta_{p^k}).  Reduction uses Phi_{p^k}(x) = sum_{i<p} x^{i p^{k-1}};
/// an element whose support lies in the indices divisible by p descends a
/// level, so representations are canonical and equality is syntactic.
/// For p = 2 level 1 never occurs (zeta_2 = -1 lives at level 0).
class CycScalar {
 public:
  /// The rational zero over p = 2.
  CycScalar() = default;

  static CycScalar zero(std::int64_t p);
  static CycScalar one(std::int64_t p);
  static CycScalar from_rational(std::int64_t p, const Rational& value);
  static CycScalar from_int(std::int64_t p, std::int64_t value);
  /// zeta_{p^level}^exponent (exponent taken mod p^level).
  static CycScalar root_of_unity(std::int64_t p, std::int64_t level, const Int& exponent);
  /// Canonicalizes an arbitrary coefficient vector of length phi(p^level).
  static CycScalar from_coeffs(std::int64_t p, std::int64_t level, std::vector<Rational> coeffs);

  std::int64_t prime() const { return p_; }
  std::int64_t level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return level_ == 0; }
  /// Requires level 0.
  const Rational& rational_value() const;

  /// Complex conjugate (zeta -> zeta^{-1}).
  CycScalar conjugate() const;
  /// True iff z * conj(z) = 1, checked exactly.
  bool is_unit_modulus() const;

  /// Numeric embedding zeta_{p^k} -> exp(2 pi i / p^k).
  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& rhs);
  CycScalar& operator-=(const CycScalar& rhs);
  CycScalar& operator*=(const CycScalar& rhs);
  CycScalar& operator*=(const Rational& rhs);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator*(CycScalar a, const Rational& b) { return a *= b; }
  friend CycScalar operator*(const Rational& a, CycScalar b) { return b *= a; }

  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

 private:
  CycScalar(std::int64_t p, std::int64_t level, std::vector<Rational> coeffs);
  void canonicalize();

  std::int64_t p_ = 2;
  std::int64_t level_ = 0;
  std::vector<Rational> coeffs_{Rational(0)};
};

/// phi(p^k): the power-basis length at level k.
std::int64_t cyclotomic_degree(std::int64_t p, std::int64_t level);

/// The additive character Psi(x) = e(frac_p(x / p)): trivial on p Z_p,
/// nontrivial on Z_p, valued in p-power roots of unity.  Requires the
/// denominator of x to be a power of p.
CycScalar psi(std::int64_t p, const Rational& x);

/// Exponent form of Psi(x): the pair (level s, exponent n) with
/// Psi(x) = zeta_{p^s}^n.  Level 0 means Psi(x) = 1.
std::pair<std::int64_t, Int> psi_exponent(std::int64_t p, const Rational& x);

/// Accumulates sums of terms  value * zeta_{p^s}^n  with a single basis
/// reduction at the end; the fast path for long character sums.
class CycAccumulator {
 public:
  explicit CycAccumulator(std::int64_t p) : p_(p) {}

  void add(const CycScalar& value);
  /// Adds value * zeta_{p^level}^exponent.
  void add_rotated(const CycScalar& value, std::int64_t level, const Int& exponent);
  /// Collapses to a canonical scalar and resets the accumulator.
  CycScalar take();

 private:
  void raise_level(std::int64_t level);

  std::int64_t p_;
  std::int64_t level_ = 0;
  std::map<Int, Rational> by_exponent_;  // exponent in [0, p^level)
};

}  // namespace pdk
