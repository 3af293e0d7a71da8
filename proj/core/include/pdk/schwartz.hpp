#pragma once

#include "pdk/geometry.hpp"
#include "pdk/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pdk {

struct SBTerm {
  CycScalar coef;
  Polydisc ball;
};

struct ProductTerm {
  CycScalar coef;
  Polydisc left;
  Polydisc right;
};

/// Locally constant, compactly supported function on Q_p^m, held in its
/// coarsest canonical form: a finite sum of indicator terms c * 1_B with
/// pairwise disjoint balls, nonzero coefficients, no complete sibling
/// family sharing one coefficient, terms sorted canonically.  Two such
/// functions are pointwise equal iff their term lists coincide.
class SBFunction {
 public:
  static SBFunction zero(std::int64_t p, std::int64_t dim);
  static SBFunction indicator(const Polydisc& ball);
  /// Canonicalizes an arbitrary term list (overlaps, zeros, redundancy OK).
  static SBFunction from_terms(std::int64_t p, std::int64_t dim, std::vector<SBTerm> raw);

  std::int64_t prime() const { return p_; }
  std::int64_t dim() const { return dim_; }
  const std::vector<SBTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CycScalar eval(const PAdicPoint& x) const;

  SBFunction operator-() const;
  friend SBFunction operator+(const SBFunction& f, const SBFunction& g);
  friend SBFunction operator-(const SBFunction& f, const SBFunction& g);
  SBFunction scale(const CycScalar& c) const;
  SBFunction scale(const Rational& c) const;
  SBFunction mul_pointwise(const SBFunction& g) const;

  /// (f tensor g)(x, y) = f(x) g(y) on dim(f) + dim(g) coordinates.
  SBFunction tensor(const SBFunction& g) const;
  /// Canonical terms as products 1_C tensor 1_D, split after coordinate m.
  std::vector<ProductTerm> tensor_decompose(std::int64_t m) const;

  /// Haar integral with vol(Z_p^m) = 1: sum of c_i p^{-alpha_i m}.
  CycScalar integrate() const;

  /// Exact convolution; built from
  /// 1_{B(a,s)} * 1_{B(b,t)} = p^{-max(s,t) m} 1_{B(a+b, min(s,t))}.
  SBFunction convolve(const SBFunction& g) const;

  /// Largest a- with supp f inside B(0, a-)^m.  Requires f != 0.
  std::int64_t support_radius() const;
  /// Smallest a+ such that f is constant on every radius-a+ ball.
  /// Requires f != 0.
  std::int64_t constancy_radius() const;

  /// x -> f(x) Psi(<x, eta>); exact, again Schwartz-Bruhat.
  SBFunction modulate(const PAdicPoint& eta) const;

  /// Exact Fourier transform f^(xi) = integral of f(x) Psi(<x, xi>) dx.
  SBFunction fourier() const;

  SBFunction translate(const PAdicPoint& a) const;
  /// x -> f(-x).
  SBFunction reflect() const;
  /// x -> f(s x) for a nonzero scalar s.
  SBFunction dilate(const Rational& s) const;

  /// The balls of the canonical form; their union is supp f.
  std::vector<Polydisc> support() const;

  friend bool operator==(const SBFunction& f, const SBFunction& g);
  friend bool operator!=(const SBFunction& f, const SBFunction& g) { return !(f == g); }

  std::string to_string() const;

 private:
  SBFunction(std::int64_t p, std::int64_t dim) : p_(p), dim_(dim) {}

  std::int64_t p_;
  std::int64_t dim_;
  std::vector<SBTerm> terms_;
};

/// Pointwise value of a raw (not necessarily canonical) term list.
CycScalar eval_raw_terms(std::int64_t p, const std::vector<SBTerm>& terms, const PAdicPoint& x);

}  // namespace pdk
