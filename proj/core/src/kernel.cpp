#include "pdk/kernel.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pdk {

namespace {

constexpr std::int64_t kUnboundedDepth = 1 << 30;

}  // namespace

Kernel::Kernel(Distribution u, std::int64_t n1, std::int64_t n2)
    : u_(std::move(u)), n1_(n1), n2_(n2) {
  if (n1_ < 1 || n2_ < 1 || u_.dim() != n1_ + n2_) {
    throw std::invalid_argument("kernel split does not match the distribution dimension");
  }
}

Distribution Kernel::apply(const SBFunction& psi) const {
  if (psi.prime() != prime() || psi.dim() != n2_) {
    throw std::invalid_argument("kernel argument has the wrong shape");
  }
  std::vector<WeightedAtom> out;
  for (const auto& [weight, atom] : u_.atoms()) {
    if (const auto* density = std::get_if<DensityAtom>(&atom)) {
      // x -> integral of f(x, y) psi(y) dy, term by term over f = sum c 1_{C x D}.
      std::vector<SBTerm> raw;
      for (const auto& t : density->function.terms()) {
        auto [left, right] = t.ball.product_split(n1_);
        const CycScalar slice = psi.mul_pointwise(SBFunction::indicator(right)).integrate();
        if (!slice.is_zero()) raw.push_back({t.coef * slice, left});
      }
      SBFunction g = SBFunction::from_terms(prime(), n1_, std::move(raw));
      if (!g.is_zero()) out.push_back({weight, DensityAtom{std::move(g)}});
    } else if (const auto* dirac = std::get_if<DiracAtom>(&atom)) {
      const CycScalar value = dirac->weight * psi.eval(dirac->point.last(n2_));
      if (!value.is_zero()) {
        out.push_back({weight, DiracAtom{dirac->point.first(n1_), value}});
      }
    } else if (std::get_if<DiagonalAtom>(&atom)) {
      if (n1_ != n2_) {
        throw std::invalid_argument("diagonal kernel requires a symmetric split");
      }
      if (!psi.is_zero()) out.push_back({weight, DensityAtom{psi}});
    } else {
      const auto& custom = std::get<CustomAtom>(atom);
      const std::int64_t limit = custom.depth_limit();
      CustomAtom applied(
          [custom, psi, n1 = n1_](const Polydisc& ball) {
            CycAccumulator acc(ball.prime());
            const SBFunction probe = SBFunction::indicator(ball).tensor(psi);
            for (const auto& t : probe.terms()) {
              acc.add(t.coef * custom.pair_indicator(t.ball));
            }
            return acc.take();
          },
          limit);
      out.push_back({weight, std::move(applied)});
    }
  }
  return Distribution(prime(), n1_, std::move(out));
}

Distribution Kernel::apply_generic(const SBFunction& psi) const {
  if (psi.prime() != prime() || psi.dim() != n2_) {
    throw std::invalid_argument("kernel argument has the wrong shape");
  }
  std::int64_t limit = kUnboundedDepth;
  for (const auto& [weight, atom] : u_.atoms()) {
    if (const auto* custom = std::get_if<CustomAtom>(&atom)) {
      limit = std::min(limit, custom->depth_limit());
    }
  }
  CustomAtom wrapped(
      [u = u_, psi](const Polydisc& ball) {
        return u.pair(SBFunction::indicator(ball).tensor(psi));
      },
      limit);
  return Distribution::custom(prime(), n1_, std::move(wrapped));
}

CycScalar Kernel::pairing(const SBFunction& phi, const SBFunction& psi) const {
  return apply(psi).pair(phi);
}

KernelOracle oracle_from_kernel(const Kernel& k) {
  return [k](const Polydisc& test_ball, const Polydisc& arg_ball) {
    return k.apply(SBFunction::indicator(arg_ball)).pair(SBFunction::indicator(test_ball));
  };
}

Distribution reconstruct(std::int64_t p, std::int64_t n1, std::int64_t n2,
                         const KernelOracle& oracle, std::int64_t depth) {
  CustomAtom atom(
      [oracle, n1](const Polydisc& ball) {
        auto [left, right] = ball.product_split(n1);
        return oracle(left, right);
      },
      depth);
  return Distribution::custom(p, n1 + n2, std::move(atom));
}

IndependenceReport independence_check(const Distribution& u, const SBFunction& phi,
                                      std::int64_t trials, std::uint64_t seed) {
  IndependenceReport report;
  report.trials = trials;
  report.seed = seed;
  report.reference = pair_raw_terms(u, phi.terms());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> extra(0, 2);
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    std::vector<SBTerm> resplit;
    for (const auto& t : phi.terms()) {
      const std::int64_t gamma = t.ball.alpha() + extra(rng);
      for (const auto& child : t.ball.split(gamma)) {
        resplit.push_back({t.coef, child});
      }
    }
    std::shuffle(resplit.begin(), resplit.end(), rng);
    const CycScalar value = pair_raw_terms(u, resplit);
    if (value != report.reference) {
      report.pass = false;
      report.detail = "trial " + std::to_string(trial) + ": got " + value.to_string() +
                      ", expected " + report.reference.to_string();
      return report;
    }
  }
  return report;
}

std::vector<Polydisc> basis_balls(std::int64_t p, std::int64_t dim, std::int64_t depth) {
  std::vector<Polydisc> out;
  const Polydisc unit = Polydisc::unit(p, dim);
  for (std::int64_t r = 0; r <= depth; ++r) {
    for (const auto& ball : unit.split(r)) {
      out.push_back(ball);
    }
  }
  return out;
}

RoundTripReport kernel_roundtrip(const Kernel& k, std::int64_t depth) {
  RoundTripReport report;
  const auto test_balls = basis_balls(k.prime(), k.n1(), depth);
  const auto arg_balls = basis_balls(k.prime(), k.n2(), depth);

  // Existence: <K psi, phi> = <u, phi tensor psi> on basis pairs.
  for (const auto& c : test_balls) {
    for (const auto& d : arg_balls) {
      const SBFunction phi = SBFunction::indicator(c);
      const SBFunction psi = SBFunction::indicator(d);
      const CycScalar lhs = k.pairing(phi, psi);
      const CycScalar rhs = k.distribution().pair(phi.tensor(psi));
      if (lhs != rhs) {
        report.pass = false;
        report.detail = "defining identity fails at C=" + c.to_string() +
                        " D=" + d.to_string() + ": " + lhs.to_string() +
                        " vs " + rhs.to_string();
        return report;
      }
    }
  }

  // Converse + uniqueness: reconstruction from the pairing oracle agrees
  // with u on basis tensors of equal radius.
  const Distribution rebuilt =
      reconstruct(k.prime(), k.n1(), k.n2(), oracle_from_kernel(k), depth + 1);
  for (std::int64_t r = 0; r <= depth; ++r) {
    for (const auto& c : Polydisc::unit(k.prime(), k.n1()).split(r)) {
      for (const auto& d : Polydisc::unit(k.prime(), k.n2()).split(r)) {
        const Polydisc box = Polydisc::product(c, d);
        const CycScalar lhs = rebuilt.pair_indicator(box);
        const CycScalar rhs = k.distribution().pair_indicator(box);
        if (lhs != rhs) {
          report.pass = false;
          report.detail = "reconstruction differs at " + box.to_string() + ": " +
                          lhs.to_string() + " vs " + rhs.to_string();
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace pdk
