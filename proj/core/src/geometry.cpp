#include "pdk/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pdk {

namespace {

constexpr std::int64_t kMaxSplit = 1 << 24;

}  // namespace

Polydisc::Polydisc(PAdicPoint center, std::int64_t alpha)
    : center_(center.reduce_mod(alpha)), alpha_(alpha) {}

Polydisc Polydisc::unit(std::int64_t p, std::int64_t dim) {
  return Polydisc(PAdicPoint::zero(p, dim), 0);
}

bool Polydisc::contains(const PAdicPoint& x) const {
  if (x.prime() != prime() || x.dim() != dim()) {
    throw std::invalid_argument("membership dimension mismatch");
  }
  for (std::size_t i = 0; i < center_.coords().size(); ++i) {
    if (ord_diff(x[i], center_[i], prime()) < Valuation(alpha_)) {
      return false;
    }
  }
  return true;
}

std::int64_t Polydisc::min_valuation() const {
  Valuation acc = Valuation::infinity();
  for (const auto& c : center_.coords()) {
    acc = min(acc, ord_rational(c, prime()));
  }
  acc = min(acc, Valuation(alpha_));
  return acc.value();
}

Polydisc Polydisc::parent() const {
  return Polydisc(center_, alpha_ - 1);
}

std::vector<Polydisc> Polydisc::split(std::int64_t gamma) const {
  if (gamma < alpha_) {
    throw std::invalid_argument("split radius below ball radius");
  }
  const std::int64_t m = dim();
  const std::int64_t p = prime();
  const std::int64_t digits = gamma - alpha_;
  Int count = pow_int(p, digits * m);
  if (count > kMaxSplit) {
    throw std::length_error("split would produce too many balls");
  }
  // Digit odometer: per coordinate, an offset sum_{i} d_i p^{alpha+i}
  // with d_i in [0, p).
  std::vector<std::int64_t> odo(static_cast<std::size_t>(digits * m), 0);
  std::vector<Polydisc> out;
  out.reserve(count.convert_to<std::size_t>());
  while (true) {
    std::vector<Rational> coords = center_.coords();
    for (std::int64_t j = 0; j < m; ++j) {
      Rational offset(0);
      for (std::int64_t i = 0; i < digits; ++i) {
        const std::int64_t d = odo[static_cast<std::size_t>(j * digits + i)];
        if (d == 0) continue;
        const std::int64_t pos = alpha_ + i;
        if (pos >= 0) {
          offset += Rational(Int(d) * pow_int(p, pos));
        } else {
          offset += make_rational(Int(d), pow_int(p, -pos));
        }
      }
      coords[static_cast<std::size_t>(j)] += offset;
    }
    out.emplace_back(PAdicPoint(prime(), std::move(coords)), gamma);
    // advance
    std::size_t k = 0;
    for (; k < odo.size(); ++k) {
      if (++odo[k] < p) break;
      odo[k] = 0;
    }
    if (k == odo.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PAdicPoint> Polydisc::representatives(std::int64_t gamma) const {
  std::vector<PAdicPoint> out;
  for (const auto& b : split(gamma)) {
    out.push_back(b.center());
  }
  return out;
}

std::pair<Polydisc, Polydisc> Polydisc::product_split(std::int64_t m) const {
  if (m <= 0 || m >= dim()) {
    throw std::invalid_argument("bad product split position");
  }
  return {Polydisc(center_.first(m), alpha_), Polydisc(center_.last(dim() - m), alpha_)};
}

Polydisc Polydisc::product(const Polydisc& c, const Polydisc& d) {
  if (c.prime() != d.prime()) {
    throw std::invalid_argument("mismatched prime in product");
  }
  if (c.alpha() != d.alpha()) {
    throw std::invalid_argument("product factors must share a radius");
  }
  return Polydisc(PAdicPoint::concat(c.center(), d.center()), c.alpha());
}

Polydisc Polydisc::translate(const PAdicPoint& t) const {
  return Polydisc(center_ + t, alpha_);
}

Polydisc Polydisc::negate() const {
  return Polydisc(-center_, alpha_);
}

bool operator<(const Polydisc& a, const Polydisc& b) {
  if (a.alpha_ != b.alpha_) return a.alpha_ < b.alpha_;
  for (std::size_t i = 0; i < a.center_.coords().size(); ++i) {
    const Rational& x = a.center_[i];
    const Rational& y = b.center_[i];
    if (x != y) return x < y;
  }
  return false;
}

std::string Polydisc::to_string() const {
  std::ostringstream out;
  out << "B" << center_.to_string() << "@" << alpha_;
  return out.str();
}

BallRelation compare(const Polydisc& a, const Polydisc& b) {
  if (a.prime() != b.prime() || a.dim() != b.dim()) {
    throw std::invalid_argument("comparing polydiscs of different shapes");
  }
  if (a.alpha() == b.alpha()) {
    return a.center() == b.center() ? BallRelation::Equal : BallRelation::Disjoint;
  }
  if (a.alpha() < b.alpha()) {
    // a is the larger ball
    return a.contains(b.center()) ? BallRelation::SecondInsideFirst : BallRelation::Disjoint;
  }
  return b.contains(a.center()) ? BallRelation::FirstInsideSecond : BallRelation::Disjoint;
}

std::vector<Polydisc> disjointify(std::vector<Polydisc> balls) {
  // Bigger balls first, then keep a ball only if no kept ball contains it.
  std::sort(balls.begin(), balls.end());
  std::vector<Polydisc> kept;
  for (const auto& b : balls) {
    bool covered = false;
    for (const auto& k : kept) {
      const BallRelation rel = compare(k, b);
      if (rel == BallRelation::Equal || rel == BallRelation::SecondInsideFirst) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(b);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace pdk
