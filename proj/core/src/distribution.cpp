#include "pdk/distribution.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace pdk {

namespace {

Rational ball_volume(std::int64_t p, std::int64_t alpha, std::int64_t m) {
  const std::int64_t e = alpha * m;
  if (e >= 0) return make_rational(1, pow_int(p, e));
  return Rational(pow_int(p, -e));
}

// <atom, 1_B> for a single atom.
CycScalar atom_pair_indicator(std::int64_t p, const DistAtom& atom, const Polydisc& ball) {
  if (const auto* density = std::get_if<DensityAtom>(&atom)) {
    // integral over B of f: sum of volumes of term-ball intersections.
    CycAccumulator acc(p);
    for (const auto& t : density->function.terms()) {
      switch (compare(t.ball, ball)) {
        case BallRelation::Disjoint:
          break;
        case BallRelation::Equal:
        case BallRelation::FirstInsideSecond:
          acc.add(t.coef * ball_volume(p, t.ball.alpha(), ball.dim()));
          break;
        case BallRelation::SecondInsideFirst:
          acc.add(t.coef * ball_volume(p, ball.alpha(), ball.dim()));
          break;
      }
    }
    return acc.take();
  }
  if (const auto* dirac = std::get_if<DiracAtom>(&atom)) {
    if (ball.contains(dirac->point)) return dirac->weight;
    return CycScalar::zero(p);
  }
  if (const auto* diag = std::get_if<DiagonalAtom>(&atom)) {
    const auto [left, right] = ball.product_split(diag->half_dim);
    if (left.center() == right.center()) {
      return CycScalar::from_rational(p, ball_volume(p, ball.alpha(), diag->half_dim));
    }
    return CycScalar::zero(p);
  }
  return std::get<CustomAtom>(atom).pair_indicator(ball);
}

}  // namespace

CustomAtom::CustomAtom(PairFn fn, std::int64_t depth_limit)
    : fn_(std::move(fn)), depth_limit_(depth_limit) {
  if (!fn_) {
    throw std::invalid_argument("custom atom needs a pairing function");
  }
}

CustomAtom CustomAtom::from_table(std::int64_t p, std::int64_t dim,
                                  std::vector<TableEntry> entries, std::int64_t depth_limit) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.ball.prime() != p || e.ball.dim() != dim) {
      throw std::invalid_argument("custom table entry has the wrong shape");
    }
    if (e.ball.alpha() > depth_limit) {
      throw std::invalid_argument("custom table entry deeper than the depth limit");
    }
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (compare(e.ball, entries[j].ball) != BallRelation::Disjoint) {
        throw std::invalid_argument("custom table entries must be disjoint");
      }
    }
  }
  auto table = std::make_shared<std::vector<TableEntry>>(std::move(entries));
  const std::int64_t limit = depth_limit;
  // Balls outside every entry pair to zero; coarser balls sum over their
  // children down to the entry depth.
  std::function<CycScalar(const Polydisc&)> lookup =
      [table, p, limit](const Polydisc& ball) -> CycScalar {
    std::function<CycScalar(const Polydisc&)> rec = [&](const Polydisc& b) -> CycScalar {
      for (const auto& e : *table) {
        if (e.ball == b) return e.value;
      }
      if (b.alpha() >= limit) return CycScalar::zero(p);
      CycAccumulator acc(p);
      for (const auto& child : b.split(b.alpha() + 1)) {
        acc.add(rec(child));
      }
      return acc.take();
    };
    return rec(ball);
  };
  CustomAtom atom(std::move(lookup), depth_limit);
  atom.table_ = *table;
  return atom;
}

CycScalar CustomAtom::pair_indicator(const Polydisc& ball) const {
  if (ball.alpha() > depth_limit_) {
    throw std::domain_error("custom atom probed beyond its depth limit");
  }
  return fn_(ball);
}

Distribution::Distribution(std::int64_t p, std::int64_t dim, std::vector<WeightedAtom> atoms)
    : p_(p), dim_(dim), atoms_(std::move(atoms)) {
  if (!is_prime(p_) || dim_ < 1) {
    throw std::invalid_argument("bad distribution signature");
  }
  for (const auto& [weight, atom] : atoms_) {
    if (weight.prime() != p_) {
      throw std::invalid_argument("atom weight over the wrong prime");
    }
    if (const auto* density = std::get_if<DensityAtom>(&atom)) {
      if (density->function.prime() != p_ || density->function.dim() != dim_) {
        throw std::invalid_argument("density atom has the wrong shape");
      }
    } else if (const auto* dirac = std::get_if<DiracAtom>(&atom)) {
      if (dirac->point.prime() != p_ || dirac->point.dim() != dim_ ||
          dirac->weight.prime() != p_) {
        throw std::invalid_argument("dirac atom has the wrong shape");
      }
    } else if (const auto* diag = std::get_if<DiagonalAtom>(&atom)) {
      if (diag->half_dim < 1 || 2 * diag->half_dim != dim_) {
        throw std::invalid_argument("diagonal atom requires dim = 2 half_dim");
      }
    }
  }
}

Distribution Distribution::zero(std::int64_t p, std::int64_t dim) {
  return Distribution(p, dim, {});
}

Distribution Distribution::density(SBFunction f) {
  const std::int64_t p = f.prime();
  const std::int64_t dim = f.dim();
  std::vector<WeightedAtom> atoms;
  atoms.push_back({CycScalar::one(p), DensityAtom{std::move(f)}});
  return Distribution(p, dim, std::move(atoms));
}

Distribution Distribution::dirac(PAdicPoint point) {
  return dirac(std::move(point), CycScalar::one(point.prime()));
}

Distribution Distribution::dirac(PAdicPoint point, CycScalar weight) {
  const std::int64_t p = point.prime();
  const std::int64_t dim = point.dim();
  std::vector<WeightedAtom> atoms;
  atoms.push_back({CycScalar::one(p), DiracAtom{std::move(point), std::move(weight)}});
  return Distribution(p, dim, std::move(atoms));
}

Distribution Distribution::diagonal(std::int64_t p, std::int64_t half_dim) {
  std::vector<WeightedAtom> atoms;
  atoms.push_back({CycScalar::one(p), DiagonalAtom{half_dim}});
  return Distribution(p, 2 * half_dim, std::move(atoms));
}

Distribution Distribution::custom(std::int64_t p, std::int64_t dim, CustomAtom atom) {
  std::vector<WeightedAtom> atoms;
  atoms.push_back({CycScalar::one(p), std::move(atom)});
  return Distribution(p, dim, std::move(atoms));
}

CycScalar Distribution::pair_indicator(const Polydisc& ball) const {
  if (ball.prime() != p_ || ball.dim() != dim_) {
    throw std::invalid_argument("pairing ball has the wrong shape");
  }
  CycAccumulator acc(p_);
  for (const auto& [weight, atom] : atoms_) {
    acc.add(weight * atom_pair_indicator(p_, atom, ball));
  }
  return acc.take();
}

CycScalar Distribution::pair(const SBFunction& phi) const {
  if (phi.prime() != p_ || phi.dim() != dim_) {
    throw std::invalid_argument("test function has the wrong shape");
  }
  CycAccumulator acc(p_);
  for (const auto& t : phi.terms()) {
    acc.add(t.coef * pair_indicator(t.ball));
  }
  return acc.take();
}

CycScalar Distribution::modulated_pair(const SBFunction& phi, const PAdicPoint& eta) const {
  if (phi.prime() != p_ || phi.dim() != dim_) {
    throw std::invalid_argument("test function has the wrong shape");
  }
  if (eta.prime() != p_ || eta.dim() != dim_) {
    throw std::invalid_argument("frequency has the wrong shape");
  }
  if (eta.is_zero()) return pair(phi);
  const std::int64_t eta_ord = eta.ord().value();
  CycAccumulator acc(p_);
  for (const auto& t : phi.terms()) {
    const std::int64_t gamma = std::max(t.ball.alpha(), 1 - eta_ord);
    for (const auto& child : t.ball.split(gamma)) {
      const CycScalar v = t.coef * pair_indicator(child);
      if (v.is_zero()) continue;
      const auto [level, exponent] = psi_exponent(p_, child.center().inner(eta));
      acc.add_rotated(v, level, exponent);
    }
  }
  return acc.take();
}

Distribution Distribution::scaled(const CycScalar& c) const {
  std::vector<WeightedAtom> atoms;
  atoms.reserve(atoms_.size());
  for (const auto& [weight, atom] : atoms_) {
    atoms.push_back({weight * c, atom});
  }
  return Distribution(p_, dim_, std::move(atoms));
}

Distribution operator+(const Distribution& u, const Distribution& v) {
  if (u.p_ != v.p_ || u.dim_ != v.dim_) {
    throw std::invalid_argument("adding distributions of different shapes");
  }
  std::vector<WeightedAtom> atoms = u.atoms_;
  atoms.insert(atoms.end(), v.atoms_.begin(), v.atoms_.end());
  return Distribution(u.p_, u.dim_, std::move(atoms));
}

CycScalar pair_raw_terms(const Distribution& u, const std::vector<SBTerm>& raw) {
  CycAccumulator acc(u.prime());
  for (const auto& t : raw) {
    acc.add(t.coef * u.pair_indicator(t.ball));
  }
  return acc.take();
}

bool density_is_zero(const SBFunction& f, std::int64_t probe_depth) {
  const Distribution t_f = Distribution::density(f);
  for (const auto& ball : f.support()) {
    for (std::int64_t r = ball.alpha(); r <= std::max(ball.alpha(), probe_depth); ++r) {
      for (const auto& probe : ball.split(r)) {
        if (!t_f.pair_indicator(probe).is_zero()) return false;
      }
    }
  }
  return true;
}

BasisComparison dist_equal_on_basis(const Distribution& u, const Distribution& v,
                                    std::int64_t depth, const Polydisc& region) {
  for (const auto& ball : region.split(depth)) {
    const CycScalar lhs = u.pair_indicator(ball);
    const CycScalar rhs = v.pair_indicator(ball);
    if (lhs != rhs) {
      return {false, ball, lhs, rhs};
    }
  }
  return {true, std::nullopt, CycScalar::zero(u.prime()), CycScalar::zero(u.prime())};
}

bool finitely_additive_on(const Distribution& u, const Polydisc& region, std::int64_t depth) {
  for (std::int64_t r = region.alpha(); r < depth; ++r) {
    for (const auto& ball : region.split(r)) {
      CycAccumulator acc(u.prime());
      for (const auto& child : ball.split(r + 1)) {
        acc.add(u.pair_indicator(child));
      }
      if (acc.take() != u.pair_indicator(ball)) return false;
    }
  }
  return true;
}

}  // namespace pdk
