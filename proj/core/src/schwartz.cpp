#include "pdk/schwartz.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pdk {

namespace {

Rational ball_volume(std::int64_t p, std::int64_t alpha, std::int64_t m) {
  const std::int64_t e = alpha * m;
  if (e >= 0) return make_rational(1, pow_int(p, e));
  return Rational(pow_int(p, -e));
}

}  // namespace

SBFunction SBFunction::zero(std::int64_t p, std::int64_t dim) {
  if (!is_prime(p) || dim < 1) {
    throw std::invalid_argument("bad function signature");
  }
  return SBFunction(p, dim);
}

SBFunction SBFunction::indicator(const Polydisc& ball) {
  SBFunction f(ball.prime(), ball.dim());
  f.terms_.push_back({CycScalar::one(ball.prime()), ball});
  return f;
}

SBFunction SBFunction::from_terms(std::int64_t p, std::int64_t dim, std::vector<SBTerm> raw) {
  SBFunction f = zero(p, dim);
  std::vector<SBTerm> live;
  for (auto& t : raw) {
    if (t.coef.prime() != p || t.ball.prime() != p || t.ball.dim() != dim) {
      throw std::invalid_argument("term does not match function signature");
    }
    if (!t.coef.is_zero()) live.push_back(std::move(t));
  }
  if (live.empty()) return f;

  // Group terms into overlap components (two balls meet iff one contains
  // the other), refine each component to its own deepest radius, and sum
  // coefficients on equal balls.
  const std::size_t n = live.size();
  std::vector<std::size_t> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = i;
  auto find = [&](std::size_t i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (compare(live[i].ball, live[j].ball) != BallRelation::Disjoint) {
        root[find(i)] = find(j);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) components[find(i)].push_back(i);

  std::map<Polydisc, CycScalar> flat;
  for (const auto& [r, members] : components) {
    std::int64_t gamma = live[members.front()].ball.alpha();
    for (std::size_t i : members) gamma = std::max(gamma, live[i].ball.alpha());
    for (std::size_t i : members) {
      for (const auto& child : live[i].ball.split(gamma)) {
        auto it = flat.find(child);
        if (it == flat.end()) {
          flat.emplace(child, live[i].coef);
        } else {
          it->second += live[i].coef;
        }
      }
    }
  }

  std::vector<SBTerm> terms;
  for (auto& [ball, coef] : flat) {
    if (!coef.is_zero()) terms.push_back({std::move(coef), ball});
  }

  // Merge complete sibling families with a shared coefficient until the
  // representation is coarsest.
  bool changed = true;
  const Int family = pow_int(p, dim);
  while (changed) {
    changed = false;
    std::map<Polydisc, std::vector<std::size_t>> by_parent;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      by_parent[terms[i].ball.parent()].push_back(i);
    }
    std::vector<bool> drop(terms.size(), false);
    std::vector<SBTerm> merged;
    for (const auto& [parent, members] : by_parent) {
      if (Int(members.size()) != family) continue;
      bool same = true;
      for (std::size_t i : members) {
        if (terms[i].coef != terms[members.front()].coef) {
          same = false;
          break;
        }
      }
      if (!same) continue;
      merged.push_back({terms[members.front()].coef, parent});
      for (std::size_t i : members) drop[i] = true;
      changed = true;
    }
    if (changed) {
      std::vector<SBTerm> next;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!drop[i]) next.push_back(std::move(terms[i]));
      }
      next.insert(next.end(), merged.begin(), merged.end());
      terms = std::move(next);
    }
  }

  std::sort(terms.begin(), terms.end(),
            [](const SBTerm& a, const SBTerm& b) { return a.ball < b.ball; });
  f.terms_ = std::move(terms);
  return f;
}

CycScalar SBFunction::eval(const PAdicPoint& x) const {
  if (x.prime() != p_ || x.dim() != dim_) {
    throw std::invalid_argument("evaluation point has the wrong shape");
  }
  for (const auto& t : terms_) {
    if (t.ball.contains(x)) return t.coef;
  }
  return CycScalar::zero(p_);
}

SBFunction SBFunction::operator-() const {
  return scale(Rational(-1));
}

SBFunction operator+(const SBFunction& f, const SBFunction& g) {
  if (f.prime() != g.prime() || f.dim() != g.dim()) {
    throw std::invalid_argument("adding functions of different shapes");
  }
  std::vector<SBTerm> raw = f.terms_;
  raw.insert(raw.end(), g.terms_.begin(), g.terms_.end());
  return SBFunction::from_terms(f.prime(), f.dim(), std::move(raw));
}

SBFunction operator-(const SBFunction& f, const SBFunction& g) {
  return f + (-g);
}

SBFunction SBFunction::scale(const CycScalar& c) const {
  if (c.is_zero()) return zero(p_, dim_);
  std::vector<SBTerm> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) raw.push_back({t.coef * c, t.ball});
  return from_terms(p_, dim_, std::move(raw));
}

SBFunction SBFunction::scale(const Rational& c) const {
  return scale(CycScalar::from_rational(p_, c));
}

SBFunction SBFunction::mul_pointwise(const SBFunction& g) const {
  if (p_ != g.p_ || dim_ != g.dim_) {
    throw std::invalid_argument("multiplying functions of different shapes");
  }
  std::vector<SBTerm> raw;
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      switch (compare(a.ball, b.ball)) {
        case BallRelation::Disjoint:
          break;
        case BallRelation::Equal:
        case BallRelation::FirstInsideSecond:
          raw.push_back({a.coef * b.coef, a.ball});
          break;
        case BallRelation::SecondInsideFirst:
          raw.push_back({a.coef * b.coef, b.ball});
          break;
      }
    }
  }
  return from_terms(p_, dim_, std::move(raw));
}

SBFunction SBFunction::tensor(const SBFunction& g) const {
  if (p_ != g.p_) {
    throw std::invalid_argument("tensor factors over different primes");
  }
  std::vector<SBTerm> raw;
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      const std::int64_t gamma = std::max(a.ball.alpha(), b.ball.alpha());
      const CycScalar coef = a.coef * b.coef;
      for (const auto& ca : a.ball.split(gamma)) {
        for (const auto& cb : b.ball.split(gamma)) {
          raw.push_back({coef, Polydisc::product(ca, cb)});
        }
      }
    }
  }
  return from_terms(p_, dim_ + g.dim_, std::move(raw));
}

std::vector<ProductTerm> SBFunction::tensor_decompose(std::int64_t m) const {
  std::vector<ProductTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto [left, right] = t.ball.product_split(m);
    out.push_back({t.coef, left, right});
  }
  return out;
}

CycScalar SBFunction::integrate() const {
  CycAccumulator acc(p_);
  for (const auto& t : terms_) {
    acc.add(t.coef * ball_volume(p_, t.ball.alpha(), dim_));
  }
  return acc.take();
}

SBFunction SBFunction::convolve(const SBFunction& g) const {
  if (p_ != g.p_ || dim_ != g.dim_) {
    throw std::invalid_argument("convolving functions of different shapes");
  }
  std::vector<SBTerm> raw;
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      const std::int64_t lo = std::min(a.ball.alpha(), b.ball.alpha());
      const std::int64_t hi = std::max(a.ball.alpha(), b.ball.alpha());
      const CycScalar coef = a.coef * b.coef * ball_volume(p_, hi, dim_);
      raw.push_back({coef, Polydisc(a.ball.center() + b.ball.center(), lo)});
    }
  }
  return from_terms(p_, dim_, std::move(raw));
}

std::int64_t SBFunction::support_radius() const {
  if (is_zero()) {
    throw std::domain_error("support radius of the zero function");
  }
  std::int64_t lo = terms_.front().ball.min_valuation();
  for (const auto& t : terms_) lo = std::min(lo, t.ball.min_valuation());
  return lo;
}

std::int64_t SBFunction::constancy_radius() const {
  if (is_zero()) {
    throw std::domain_error("constancy radius of the zero function");
  }
  std::int64_t hi = terms_.front().ball.alpha();
  for (const auto& t : terms_) hi = std::max(hi, t.ball.alpha());
  return hi;
}

SBFunction SBFunction::modulate(const PAdicPoint& eta) const {
  if (eta.prime() != p_ || eta.dim() != dim_) {
    throw std::invalid_argument("modulation frequency has the wrong shape");
  }
  if (eta.is_zero() || is_zero()) return *this;
  const std::int64_t eta_ord = eta.ord().value();
  std::vector<SBTerm> raw;
  for (const auto& t : terms_) {
    // Psi(<x, eta>) is constant on radius-gamma balls once gamma + ord(eta) >= 1.
    const std::int64_t gamma = std::max(t.ball.alpha(), 1 - eta_ord);
    for (const auto& child : t.ball.split(gamma)) {
      raw.push_back({t.coef * psi(p_, child.center().inner(eta)), child});
    }
  }
  return from_terms(p_, dim_, std::move(raw));
}

SBFunction SBFunction::fourier() const {
  std::vector<SBTerm> raw;
  for (const auto& t : terms_) {
    const std::int64_t alpha = t.ball.alpha();
    // Transform of 1_{B(a, alpha)}: p^{-alpha m} Psi(<a, xi>) on the box
    // { ord xi_j >= 1 - alpha }, zero elsewhere.
    const Polydisc box(PAdicPoint::zero(p_, dim_), 1 - alpha);
    const Valuation center_ord = t.ball.center().ord();
    std::int64_t gamma = 1 - alpha;
    if (!center_ord.is_infinite()) {
      gamma = std::max(gamma, 1 - center_ord.value());
    }
    const CycScalar coef = t.coef * ball_volume(p_, alpha, dim_);
    for (const auto& child : box.split(gamma)) {
      raw.push_back({coef * psi(p_, t.ball.center().inner(child.center())), child});
    }
  }
  return from_terms(p_, dim_, std::move(raw));
}

SBFunction SBFunction::translate(const PAdicPoint& a) const {
  std::vector<SBTerm> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) raw.push_back({t.coef, t.ball.translate(a)});
  return from_terms(p_, dim_, std::move(raw));
}

SBFunction SBFunction::reflect() const {
  std::vector<SBTerm> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) raw.push_back({t.coef, t.ball.negate()});
  return from_terms(p_, dim_, std::move(raw));
}

SBFunction SBFunction::dilate(const Rational& s) const {
  if (s == 0) {
    throw std::invalid_argument("dilation by zero");
  }
  // g(x) = f(s x): the term over B(c, alpha) pulls back to B(c/s, alpha - ord s).
  const std::int64_t v = ord_rational(s, p_).value();
  const Rational inv = Rational(1) / s;
  std::vector<SBTerm> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) {
    raw.push_back({t.coef, Polydisc(inv * t.ball.center(), t.ball.alpha() - v)});
  }
  return from_terms(p_, dim_, std::move(raw));
}

std::vector<Polydisc> SBFunction::support() const {
  std::vector<Polydisc> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.ball);
  return out;
}

bool operator==(const SBFunction& f, const SBFunction& g) {
  if (f.p_ != g.p_ || f.dim_ != g.dim_ || f.terms_.size() != g.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    if (f.terms_[i].ball != g.terms_[i].ball || f.terms_[i].coef != g.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

std::string SBFunction::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out << " + ";
    out << "(" << terms_[i].coef.to_string() << ")*1_" << terms_[i].ball.to_string();
  }
  return out.str();
}

CycScalar eval_raw_terms(std::int64_t p, const std::vector<SBTerm>& terms, const PAdicPoint& x) {
  CycAccumulator acc(p);
  for (const auto& t : terms) {
    if (t.ball.contains(x)) acc.add(t.coef);
  }
  return acc.take();
}

}  // namespace pdk
