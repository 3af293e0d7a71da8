#pragma once

#include "pdk/rational.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace pdk {

/// Value in Z union {+infinity}; the codomain of the p-adic valuation.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  Valuation(std::int64_t v) : finite_(true), v_(v) {}  // NOLINT: implicit by design

  bool is_infinite() const { return !finite_; }
  std::int64_t value() const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.finite_ && b.finite_) return a.v_ < b.v_;
    return a.finite_ && !b.finite_;
  }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return a == b || a < b; }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }

  friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }
  std::string to_string() const;

 private:
  Valuation() : finite_(false), v_(0) {}
  bool finite_;
  std::int64_t v_;
};

bool has_p_power_denominator(const Rational& q, std::int64_t p);

/// p-adic valuation of a rational (infinity for 0).
Valuation ord_rational(const Rational& q, std::int64_t p);

/// ord(x - y) without normalizing the difference; the membership hot path.
Valuation ord_diff(const Rational& x, const Rational& y, std::int64_t p);

/// Canonical digit truncation: the unique r with digits in positions
/// [ord(q), alpha) such that ord(q - r) >= alpha.  Idempotent.
Rational reduce_mod_scalar(const Rational& q, std::int64_t p, std::int64_t alpha);

/// Angular component: x p^{-ord x} reduced mod p^depth.  Requires x != 0.
Int angular_component(const Rational& x, std::int64_t p, std::int64_t depth);

/// Point of Q_p^m: exact rational coordinates with p-power denominators.
class PAdicPoint {
 public:
  PAdicPoint(std::int64_t p, std::vector<Rational> coords);
  static PAdicPoint zero(std::int64_t p, std::int64_t dim);

  std::int64_t prime() const { return p_; }
  std::int64_t dim() const { return static_cast<std::int64_t>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  /// min over coordinates of the coordinate valuation; infinity iff zero.
  Valuation ord() const;
  PAdicPoint reduce_mod(std::int64_t alpha) const;
  Rational inner(const PAdicPoint& other) const;

  PAdicPoint operator-() const;
  friend PAdicPoint operator+(const PAdicPoint& a, const PAdicPoint& b);
  friend PAdicPoint operator-(const PAdicPoint& a, const PAdicPoint& b);
  friend PAdicPoint operator*(const Rational& s, const PAdicPoint& x);
  friend bool operator==(const PAdicPoint& a, const PAdicPoint& b) {
    return a.p_ == b.p_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const PAdicPoint& a, const PAdicPoint& b) { return !(a == b); }

  /// Coordinates [0, n) and [n, dim) as points of the factor spaces.
  PAdicPoint first(std::int64_t n) const;
  PAdicPoint last(std::int64_t n) const;
  static PAdicPoint concat(const PAdicPoint& a, const PAdicPoint& b);

  std::string to_string() const;

 private:
  std::int64_t p_;
  std::vector<Rational> coords_;
};

/// Open finite-index subgroup of Q_p^x cut out by a valuation congruence
/// and an angular-component residue set:
///   Lambda = { x != 0 : ord x = 0 mod l, ac_k(x) in unit_residues }.
class LambdaGroup {
 public:
  LambdaGroup(std::int64_t p, std::int64_t ord_modulus, std::int64_t ac_depth,
              std::set<std::int64_t> unit_residues);
  /// The full group Q_p^x (l = 1, k = 0).
  static LambdaGroup full_group(std::int64_t p);
  /// { x : ord x = 0 mod l, ac_1(x) = 1 }.
  static LambdaGroup congruence_subgroup(std::int64_t p, std::int64_t ord_modulus);

  std::int64_t prime() const { return p_; }
  std::int64_t ord_modulus() const { return ord_modulus_; }
  std::int64_t ac_depth() const { return ac_depth_; }
  const std::set<std::int64_t>& unit_residues() const { return unit_residues_; }

  /// Membership test; requires lambda != 0.
  bool contains(const Rational& lambda) const;

  /// Group elements u p^{jl} for each residue lift u and each valuation
  /// jl in [ord_lo, ord_hi), in deterministic order.
  std::vector<Rational> representatives(std::int64_t ord_lo, std::int64_t ord_hi) const;

 private:
  std::int64_t p_;
  std::int64_t ord_modulus_;
  std::int64_t ac_depth_;
  std::set<std::int64_t> unit_residues_;
};

}  // namespace pdk
