#include "pdk/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pdk::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& msg) {
    if (ok && !cond) {
      ok = false;
      detail = msg;
    }
  }
};

Rational cell_volume(std::int64_t p, std::int64_t depth, std::int64_t dim) {
  const std::int64_t e = depth * dim;
  if (e >= 0) return make_rational(1, pow_int(p, e));
  return Rational(pow_int(p, -e));
}

std::string scalar_pair(const CycScalar& a, const CycScalar& b) {
  return a.to_string() + " vs " + b.to_string();
}

}  // namespace

CycScalar random_coef(std::mt19937_64& rng, std::int64_t p) {
  switch (rng() % 8) {
    case 0: return CycScalar::from_int(p, 1);
    case 1: return CycScalar::from_int(p, -1);
    case 2: return CycScalar::from_int(p, 2);
    case 3: return CycScalar::from_rational(p, make_rational(1, 2));
    case 4: return CycScalar::from_rational(p, make_rational(-3, 2));
    case 5: return CycScalar::root_of_unity(p, 1, 1);
    case 6: return -CycScalar::root_of_unity(p, 1, 1);
    default: return CycScalar::root_of_unity(p, 2, 1);
  }
}

std::vector<SBTerm> random_raw_terms(std::mt19937_64& rng, std::int64_t p, std::int64_t dim,
                                     std::int64_t max_terms, std::int64_t alpha_lo,
                                     std::int64_t alpha_hi) {
  const std::int64_t count = 1 + static_cast<std::int64_t>(rng() % max_terms);
  const Int centers = pow_int(p, 2);
  std::vector<SBTerm> out;
  for (std::int64_t i = 0; i < count; ++i) {
    CycScalar coef = (rng() % 10 == 0) ? CycScalar::zero(p) : random_coef(rng, p);
    const std::int64_t alpha =
        alpha_lo + static_cast<std::int64_t>(rng() % (alpha_hi - alpha_lo + 1));
    std::vector<Rational> coords;
    for (std::int64_t j = 0; j < dim; ++j) {
      coords.emplace_back(Int(rng() % centers.convert_to<std::uint64_t>()));
    }
    out.push_back({std::move(coef), Polydisc(PAdicPoint(p, std::move(coords)), alpha)});
  }
  return out;
}

SBFunction random_sb(std::mt19937_64& rng, std::int64_t p, std::int64_t dim,
                     std::int64_t max_terms, std::int64_t alpha_lo, std::int64_t alpha_hi) {
  return SBFunction::from_terms(p, dim,
                                random_raw_terms(rng, p, dim, max_terms, alpha_lo, alpha_hi));
}

std::vector<PAdicPoint> digit_points(std::int64_t p, std::int64_t dim, std::int64_t lo,
                                     std::int64_t hi) {
  if (hi < lo) {
    throw std::invalid_argument("bad digit range");
  }
  const std::int64_t digits = hi - lo;
  std::vector<Rational> weights;
  for (std::int64_t i = 0; i < digits; ++i) {
    const std::int64_t pos = lo + i;
    weights.push_back(pos >= 0 ? Rational(pow_int(p, pos))
                               : make_rational(1, pow_int(p, -pos)));
  }
  std::vector<std::int64_t> odo(static_cast<std::size_t>(digits * dim), 0);
  std::vector<PAdicPoint> out;
  while (true) {
    std::vector<Rational> coords(static_cast<std::size_t>(dim), Rational(0));
    for (std::int64_t j = 0; j < dim; ++j) {
      for (std::int64_t i = 0; i < digits; ++i) {
        const std::int64_t d = odo[static_cast<std::size_t>(j * digits + i)];
        if (d != 0) coords[static_cast<std::size_t>(j)] += Rational(d) * weights[i];
      }
    }
    out.emplace_back(p, std::move(coords));
    std::size_t k = 0;
    for (; k < odo.size(); ++k) {
      if (++odo[k] < p) break;
      odo[k] = 0;
    }
    if (k == odo.size()) break;
  }
  return out;
}

Rational volume_by_counting(const Polydisc& ball, std::int64_t depth) {
  if (depth < ball.alpha()) {
    throw std::invalid_argument("counting depth above ball radius");
  }
  const std::int64_t p = ball.prime();
  const std::int64_t lo = ball.min_valuation();
  Int hits = 0;
  for (const auto& r : digit_points(p, ball.dim(), lo, depth)) {
    bool inside = true;
    for (std::int64_t j = 0; j < ball.dim(); ++j) {
      const Rational diff = r[static_cast<std::size_t>(j)] -
                            ball.center()[static_cast<std::size_t>(j)];
      if (ord_rational(diff, p) < Valuation(ball.alpha())) {
        inside = false;
        break;
      }
    }
    if (inside) ++hits;
  }
  return Rational(hits) * cell_volume(p, depth, ball.dim());
}

CycScalar fourier_char_sum(const SBFunction& f, const PAdicPoint& xi,
                           std::int64_t support_floor, std::int64_t depth) {
  const std::int64_t p = f.prime();
  const Rational vol = cell_volume(p, depth, f.dim());
  CycAccumulator acc(p);
  for (const auto& r : digit_points(p, f.dim(), support_floor, depth)) {
    const CycScalar value = f.eval(r);
    if (value.is_zero()) continue;
    const auto [level, exponent] = psi_exponent(p, r.inner(xi));
    acc.add_rotated(value * vol, level, exponent);
  }
  return acc.take();
}

CycScalar convolve_char_sum(const SBFunction& f, const SBFunction& g, const PAdicPoint& y,
                            std::int64_t support_floor, std::int64_t depth) {
  const std::int64_t p = f.prime();
  const Rational vol = cell_volume(p, depth, f.dim());
  CycAccumulator acc(p);
  for (const auto& r : digit_points(p, f.dim(), support_floor, depth)) {
    const CycScalar fv = f.eval(r);
    if (fv.is_zero()) continue;
    const CycScalar gv = g.eval(y - r);
    if (gv.is_zero()) continue;
    acc.add(fv * gv * vol);
  }
  return acc.take();
}

namespace {

// 1. Decomposition theorem: canonicalize is idempotent, disjoint, and
//    eval-equivalent to the raw sum.  The four (p, m) blocks are
//    independent pure sweeps and run concurrently.
Check decomposition_block(std::uint64_t seed, std::int64_t p, std::int64_t m) {
  Check check;
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(p) << 8) ^
                      static_cast<std::uint64_t>(m));
  const auto probes = digit_points(p, m, -1, 3);
  for (int trial = 0; trial < 100 && check.ok; ++trial) {
    const auto raw = random_raw_terms(rng, p, m, 6, -1, 2);
    const SBFunction f = SBFunction::from_terms(p, m, raw);
    const SBFunction again = SBFunction::from_terms(p, m, f.terms());
    check.expect(again == f, "canonicalize not idempotent");
    for (std::size_t i = 0; i < f.terms().size() && check.ok; ++i) {
      for (std::size_t j = i + 1; j < f.terms().size(); ++j) {
        if (compare(f.terms()[i].ball, f.terms()[j].ball) != BallRelation::Disjoint) {
          check.expect(false, "canonical terms not pairwise disjoint");
          break;
        }
      }
    }
    for (const auto& x : probes) {
      if (f.eval(x) != eval_raw_terms(p, raw, x)) {
        check.expect(false, "canonical form disagrees with raw sum at " + x.to_string());
        break;
      }
    }
  }
  return check;
}

Check criterion_decomposition(std::uint64_t seed, std::int64_t) {
  std::vector<std::future<Check>> blocks;
  for (std::int64_t p : {2, 3}) {
    for (std::int64_t m : {1, 2}) {
      blocks.push_back(std::async(std::launch::async, decomposition_block, seed, p, m));
    }
  }
  Check check;
  for (auto& block : blocks) {
    const Check result = block.get();
    if (check.ok && !result.ok) check = result;
  }
  return check;
}

// 2. Haar normalization and ball volumes against partition counting.
Check criterion_haar(std::uint64_t, std::int64_t) {
  Check check;
  for (std::int64_t p : {2, 3}) {
    for (std::int64_t m : {1, 2}) {
      const SBFunction unit = SBFunction::indicator(Polydisc::unit(p, m));
      check.expect(unit.integrate() == CycScalar::one(p), "vol(Z_p^m) != 1");
      for (std::int64_t alpha = -1; alpha <= 2; ++alpha) {
        for (const Rational& c :
             {Rational(0), Rational(1), make_rational(1, p)}) {
          const Polydisc ball(
              PAdicPoint(p, std::vector<Rational>(static_cast<std::size_t>(m), c)), alpha);
          const CycScalar vol = SBFunction::indicator(ball).integrate();
          const Rational expected = cell_volume(p, alpha, m);
          check.expect(vol == CycScalar::from_rational(p, expected),
                       "vol " + ball.to_string() + " != p^-alpha*m");
          check.expect(volume_by_counting(ball, alpha + 2) == expected,
                       "partition count disagrees at " + ball.to_string());
        }
      }
    }
  }
  return check;
}

// 3. Fourier transform against the character-sum oracle; double transform
//    is p^{-m} times reflection.
Check criterion_fourier(std::uint64_t seed, std::int64_t) {
  Check check;
  for (std::int64_t p : {2, 3}) {
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(p) << 16));
    const auto freqs = digit_points(p, 1, -2, 2);
    for (int trial = 0; trial < 50 && check.ok; ++trial) {
      const SBFunction f = random_sb(rng, p, 1, 4, -1, 2);
      const SBFunction fhat = f.fourier();
      for (const auto& xi : freqs) {
        if (fhat.eval(xi) != fourier_char_sum(f, xi, -1, 3)) {
          check.expect(false, "fourier disagrees with character sum at xi=" + xi.to_string());
          break;
        }
      }
      const SBFunction twice = fhat.fourier();
      const SBFunction expected = f.reflect().scale(make_rational(1, p));
      check.expect(twice == expected, "double transform is not p^-m reflection");
    }
  }
  return check;
}

// 4. Convolution against brute-force residue sums; the local-constancy
//    identity holds at alpha+ and fails below it.
Check criterion_convolution(std::uint64_t seed, std::int64_t) {
  Check check;
  for (std::int64_t p : {2, 3}) {
    const auto balls = basis_balls(p, 1, 2);
    const auto points = digit_points(p, 1, 0, 3);
    for (const auto& b1 : balls) {
      for (const auto& b2 : balls) {
        const SBFunction f = SBFunction::indicator(b1);
        const SBFunction g = SBFunction::indicator(b2);
        const SBFunction conv = f.convolve(g);
        for (const auto& y : points) {
          if (conv.eval(y) != convolve_char_sum(f, g, y, 0, 3)) {
            check.expect(false, "convolution disagrees with residue sum at y=" +
                                    y.to_string());
            break;
          }
        }
        if (!check.ok) return check;
      }
    }
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(p));
    for (int trial = 0; trial < 10; ++trial) {
      SBFunction f = random_sb(rng, p, 1, 4, -1, 2);
      if (f.is_zero()) continue;
      const std::int64_t aplus = f.constancy_radius();
      for (std::int64_t alpha : {aplus, aplus + 1}) {
        // p^{alpha m} 1_{B(0, alpha)}, the normalized mollifier
        const SBFunction mollifier =
            SBFunction::indicator(Polydisc(PAdicPoint::zero(p, 1), alpha))
                .scale(cell_volume(p, -alpha, 1));
        check.expect(f.convolve(mollifier) == f,
                     "identity f * p^{alpha m} 1_{B(0,alpha)} failed at alpha >= alpha+");
      }
    }
    // witness family: the identity must fail below the constancy radius
    const SBFunction f = SBFunction::indicator(Polydisc(PAdicPoint::zero(p, 1), 1));
    const SBFunction coarse = SBFunction::indicator(Polydisc(PAdicPoint::zero(p, 1), 0));
    check.expect(f.convolve(coarse) != f,
                 "identity unexpectedly holds below the constancy radius");
  }
  return check;
}

std::vector<Distribution> sample_product_distributions(std::mt19937_64& rng, std::int64_t p) {
  std::vector<Distribution> out;
  SBFunction f = random_sb(rng, p, 2, 4, 0, 2);
  if (f.is_zero()) f = SBFunction::indicator(Polydisc::unit(p, 2));
  out.push_back(Distribution::density(std::move(f)));
  out.push_back(Distribution::dirac(
      PAdicPoint(p, {Rational(1), make_rational(1, p)})));
  out.push_back(Distribution::diagonal(p, 1));
  return out;
}

// 5. Kernel theorem, existence: <u, phi tensor psi> = <K psi, phi> on all
//    basis pairs.
Check criterion_kernel_existence(std::uint64_t seed, std::int64_t extra) {
  Check check;
  for (std::int64_t p : {2, 3}) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(p * 31));
    const auto balls = basis_balls(p, 1, 2 + extra);
    for (const auto& u : sample_product_distributions(rng, p)) {
      const Kernel k(u, 1, 1);
      for (const auto& c : balls) {
        for (const auto& d : balls) {
          const SBFunction phi = SBFunction::indicator(c);
          const SBFunction psi = SBFunction::indicator(d);
          const CycScalar lhs = k.pairing(phi, psi);
          const CycScalar rhs = u.pair(phi.tensor(psi));
          if (lhs != rhs) {
            check.expect(false, "defining identity fails at C=" + c.to_string() +
                                    " D=" + d.to_string() + ": " + scalar_pair(lhs, rhs));
            return check;
          }
        }
      }
    }
  }
  return check;
}

// 6. Kernel theorem, converse + uniqueness: reconstruction matches u on
//    basis tensors; pairing sums are decomposition-independent.
Check criterion_kernel_converse(std::uint64_t seed, std::int64_t extra) {
  Check check;
  for (std::int64_t p : {2, 3}) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(p * 77));
    for (const auto& u : sample_product_distributions(rng, p)) {
      const Kernel k(u, 1, 1);
      const Distribution rebuilt =
          reconstruct(p, 1, 1, oracle_from_kernel(k), 3 + extra);
      for (const auto& box : basis_balls(p, 2, 2 + extra)) {
        const CycScalar lhs = rebuilt.pair_indicator(box);
        const CycScalar rhs = u.pair_indicator(box);
        if (lhs != rhs) {
          check.expect(false, "reconstruction differs at " + box.to_string() + ": " +
                                  scalar_pair(lhs, rhs));
          return check;
        }
      }
    }
    SBFunction phi = random_sb(rng, p, 2, 4, 0, 2);
    if (phi.is_zero()) phi = SBFunction::indicator(Polydisc::unit(p, 2));
    const auto report =
        independence_check(Distribution::diagonal(p, 1), phi, 200, seed ^ 0xD1A6);
    check.expect(report.pass, "independence sweep failed: " + report.detail);
  }
  return check;
}

// 7. Diagonal example: K psi = T_psi as distributions.
Check criterion_diagonal_example(std::uint64_t seed, std::int64_t extra) {
  Check check;
  for (std::int64_t p : {2, 3}) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(p * 131));
    const Kernel k(Distribution::diagonal(p, 1), 1, 1);
    const Polydisc region(PAdicPoint::zero(p, 1), -1);
    for (int trial = 0; trial < 10; ++trial) {
      const SBFunction psi = random_sb(rng, p, 1, 4, -1, 2);
      const Distribution expected = Distribution::density(psi);
      for (const Distribution& got : {k.apply(psi), k.apply_generic(psi)}) {
        const auto cmp = dist_equal_on_basis(got, expected, 3 + extra, region);
        if (!cmp.equal) {
          check.expect(false, "K psi != T_psi at " + cmp.witness->to_string() + ": " +
                                  scalar_pair(cmp.lhs, cmp.rhs));
          return check;
        }
      }
    }
  }
  return check;
}

// 8. Injectivity: the pairing probe agrees with canonical-form emptiness.
Check criterion_injectivity(std::uint64_t seed, std::int64_t) {
  Check check;
  for (std::int64_t p : {2, 3}) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(p * 211));
    for (int trial = 0; trial < 50 && check.ok; ++trial) {
      auto raw = random_raw_terms(rng, p, 1, 4, -1, 2);
      if (trial % 2 == 1) {
        // telescoping zero: cancel every term against its own split
        std::vector<SBTerm> cancel;
        for (const auto& t : raw) {
          for (const auto& child : t.ball.split(t.ball.alpha() + 1 + rng() % 2)) {
            cancel.push_back({-t.coef, child});
          }
        }
        raw.insert(raw.end(), cancel.begin(), cancel.end());
      }
      const SBFunction f = SBFunction::from_terms(p, 1, raw);
      if (trial % 2 == 1) {
        check.expect(f.is_zero(), "telescoping sum did not cancel");
      }
      check.expect(density_is_zero(f, 2) == f.is_zero(),
                   "probe verdict disagrees with canonical emptiness");
    }
  }
  return check;
}

// 9. Wave fronts of the three closed-form atoms: certificates for
//    densities replay exhaustively, point-mass witnesses replay to
//    unit-modulus scalars, diagonal verdicts match the conormal rule.
Check criterion_wavefront(std::uint64_t seed, std::int64_t extra) {
  Check check;
  for (std::int64_t p : {2, 3}) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(p * 401));
    const LambdaGroup full = LambdaGroup::full_group(p);

    // densities: empty wave front, certificates replay to zero
    for (int trial = 0; trial < 3; ++trial) {
      SBFunction f = random_sb(rng, p, 1, 3, -1, 2);
      if (f.is_zero()) f = SBFunction::indicator(Polydisc::unit(p, 1));
      const Distribution u = Distribution::density(f);
      check.expect(wf_closed_form(u).empty(), "density wave front not empty");
      for (const Rational& x0 : {Rational(0), Rational(1)}) {
        for (const Rational& xi0 : {Rational(1), make_rational(1, p)}) {
          const MicrolocalQuery q{u, PAdicPoint(p, {x0}), PAdicPoint(p, {xi0}),
                                  full, 1, 2 + extra, -4};
          const auto verdict = is_smooth_at(q);
          const auto* cert = std::get_if<SmoothCertificate>(&verdict);
          check.expect(cert != nullptr, "density query did not certify");
          if (cert) {
            check.expect(replay_certificate(u, *cert, full, 2, -4),
                         "density certificate failed replay");
          }
        }
      }
    }

    // point masses: witnesses at the point, unit-modulus replays
    for (const Rational& a : {Rational(0), Rational(1)}) {
      const PAdicPoint point(p, {a});
      const Distribution u = Distribution::dirac(point);
      const MicrolocalQuery at{u, point, PAdicPoint(p, {Rational(1)}), full, 1, 2, -4};
      const auto verdict = is_smooth_at(at);
      const auto* witness = std::get_if<NotSmoothWitness>(&verdict);
      check.expect(witness != nullptr, "point mass query did not witness");
      if (witness) {
        for (const auto& lam : full.representatives(-4, 0)) {
          const CycScalar value = u.modulated_pair(witness->phi, lam * witness->xi);
          check.expect(value.is_unit_modulus(),
                       "point-mass witness pairing is not unit modulus");
        }
      }
      const PAdicPoint away(p, {a + 1});
      const MicrolocalQuery off{u, away, PAdicPoint(p, {Rational(1)}), full, 1, 2, -4};
      check.expect(std::holds_alternative<SmoothCertificate>(is_smooth_at(off)),
                   "point mass query away from the mass did not certify");
    }

    // diagonal: verdicts across a grid match the conormal closed form
    const Distribution diag = Distribution::diagonal(p, 1);
    const auto desc = wf_closed_form(diag);
    std::vector<Rational> coords{Rational(0), Rational(1), make_rational(1, p)};
    if (p == 3) coords.push_back(Rational(2));
    std::vector<std::pair<Rational, Rational>> freqs;
    for (std::int64_t s = 1; s < p; ++s) {
      freqs.emplace_back(Rational(s), Rational(-s));
      freqs.emplace_back(Rational(s), Rational(1));
      if (p == 3) freqs.emplace_back(Rational(s), Rational(2));
    }
    std::int64_t grid_points = 0;
    for (const auto& a : coords) {
      for (const auto& b : coords) {
        for (const auto& [s, t] : freqs) {
          ++grid_points;
          const PAdicPoint x0(p, {a, b});
          const PAdicPoint xi0(p, {s, t});
          const MicrolocalQuery q{diag, x0, xi0, full, 2, 2, -4};
          const bool member = desc.contains(x0, xi0);
          const auto verdict = is_smooth_at(q);
          if (member != std::holds_alternative<NotSmoothWitness>(verdict)) {
            check.expect(false, "diagonal verdict disagrees with the conormal rule at x0=" +
                                    x0.to_string() + " xi0=" + xi0.to_string());
            return check;
          }
          if (const auto* w = std::get_if<NotSmoothWitness>(&verdict)) {
            check.expect(replay_witness(diag, *w), "diagonal witness failed replay");
          }
        }
      }
    }
    check.expect(grid_points >= pow_int(p, 4), "diagonal grid too small");
  }
  return check;
}

// 10. Wave-front inclusion for kernels over both Lambda choices.
Check criterion_wf_inclusion(std::uint64_t seed, std::int64_t extra) {
  Check check;
  for (std::int64_t p : {2, 3}) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(p * 8191));
    std::vector<std::pair<PAdicPoint, PAdicPoint>> grid;
    const std::vector<Rational> xs{Rational(0),          Rational(1),
                                   Rational(2),          Rational(3),
                                   Rational(p),          make_rational(1, p),
                                   Rational(1) + make_rational(1, p),
                                   Rational(2) + make_rational(1, p)};
    const std::vector<Rational> xis{Rational(1),          Rational(2),
                                    Rational(3),          Rational(p),
                                    make_rational(1, p),
                                    Rational(1) + make_rational(1, p),
                                    Rational(-1)};
    for (const auto& x : xs) {
      for (const auto& xi : xis) {
        grid.emplace_back(PAdicPoint(p, {x}), PAdicPoint(p, {xi}));
      }
    }
    // >= 50 points across the two primes and four distributions
    const std::vector<LambdaGroup> lambdas{LambdaGroup::full_group(p),
                                           LambdaGroup::congruence_subgroup(p, 2)};
    auto us = sample_product_distributions(rng, p);
    us.push_back(Distribution::dirac(PAdicPoint(p, {Rational(1), Rational(0)})));
    for (const auto& u : us) {
      const Kernel k(u, 1, 1);
      for (int trial = 0; trial < 10; ++trial) {
        const SBFunction psi = random_sb(rng, p, 1, 3, -1, 2);
        for (const auto& lambda : lambdas) {
          const auto report = check_wf_inclusion(k, psi, grid, lambda, 1, 2 + extra, -3);
          if (report.violations != 0) {
            check.expect(false, "wave-front inclusion violated at " +
                                    std::to_string(report.violations) + " grid points");
            return check;
          }
        }
      }
    }
  }
  return check;
}

struct Criterion {
  int id;
  const char* name;
  Check (*run)(std::uint64_t, std::int64_t);
};

constexpr Criterion kCriteria[] = {
    {1, "decomposition-canonical-form", criterion_decomposition},
    {2, "haar-normalization-volumes", criterion_haar},
    {3, "fourier-character-sum-oracle", criterion_fourier},
    {4, "convolution-closed-form-and-identity", criterion_convolution},
    {5, "kernel-existence-direction", criterion_kernel_existence},
    {6, "kernel-converse-uniqueness", criterion_kernel_converse},
    {7, "diagonal-kernel-example", criterion_diagonal_example},
    {8, "density-injectivity-probe", criterion_injectivity},
    {9, "wavefront-closed-forms", criterion_wavefront},
    {10, "wavefront-kernel-inclusion", criterion_wf_inclusion},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed, std::int64_t extra_depth) {
  for (const auto& c : kCriteria) {
    if (c.id != id) continue;
    CriterionResult result;
    result.id = c.id;
    result.name = c.name;
    const auto start = Clock::now();
    try {
      const Check check = c.run(seed, extra_depth);
      result.pass = check.ok;
      result.detail = check.detail;
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  }
  throw std::invalid_argument("unknown criterion id");
}

std::vector<CriterionResult> run_all(std::uint64_t seed, std::int64_t extra_depth) {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    out.push_back(run_criterion(c.id, seed, extra_depth));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name;
  out.precision(2);
  out << " (" << std::fixed << r.seconds << "s)";
  if (!r.pass && !r.detail.empty()) out << " -- " << r.detail;
  return out.str();
}

}  // namespace pdk::verify
