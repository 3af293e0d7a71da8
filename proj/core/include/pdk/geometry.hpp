#pragma once

#include "pdk/padic.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pdk {

/// Outcome of the ultrametric trichotomy: two polydiscs either coincide,
/// nest, or miss each other entirely.
enum class BallRelation { Disjoint, Equal, FirstInsideSecond, SecondInsideFirst };

/// B(a, alpha) = a + p^alpha Z_p^m with the center stored canonically,
/// i.e. a = reduce_mod(a, alpha).  Larger alpha means smaller ball; alpha
/// ranges over all integers.
class Polydisc {
 public:
  Polydisc(PAdicPoint center, std::int64_t alpha);
  /// Z_p^dim = B(0, 0).
  static Polydisc unit(std::int64_t p, std::int64_t dim);

  std::int64_t prime() const { return center_.prime(); }
  std::int64_t dim() const { return center_.dim(); }
  std::int64_t alpha() const { return alpha_; }
  const PAdicPoint& center() const { return center_; }

  bool contains(const PAdicPoint& x) const;

  /// Smallest coordinate valuation attained on the ball:
  /// min over coordinates of min(ord(center_j), alpha).
  std::int64_t min_valuation() const;

  /// The containing ball of radius alpha - 1.
  Polydisc parent() const;

  /// The p^{dim (gamma - alpha)} disjoint radius-gamma sub-balls, in
  /// canonical order.  Requires gamma >= alpha.
  std::vector<Polydisc> split(std::int64_t gamma) const;

  /// Centers of split(gamma): canonical representatives mod p^gamma.
  std::vector<PAdicPoint> representatives(std::int64_t gamma) const;

  /// The unique factors with *this = left x right; split after coordinate m.
  std::pair<Polydisc, Polydisc> product_split(std::int64_t m) const;
  /// C x D as a polydisc; requires equal alpha.
  static Polydisc product(const Polydisc& c, const Polydisc& d);

  Polydisc translate(const PAdicPoint& t) const;
  Polydisc negate() const;

  friend bool operator==(const Polydisc& a, const Polydisc& b) {
    return a.alpha_ == b.alpha_ && a.center_ == b.center_;
  }
  friend bool operator!=(const Polydisc& a, const Polydisc& b) { return !(a == b); }
  /// Canonical total order: by alpha, then center coordinates.
  friend bool operator<(const Polydisc& a, const Polydisc& b);

  std::string to_string() const;

 private:
  PAdicPoint center_;
  std::int64_t alpha_;
};

BallRelation compare(const Polydisc& a, const Polydisc& b);

/// Keeps a pairwise-disjoint subfamily with the same union: whenever one
/// ball contains another, the smaller is deleted.  Output sorted.
std::vector<Polydisc> disjointify(std::vector<Polydisc> balls);

}  // namespace pdk
