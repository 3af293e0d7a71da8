#include "pdk/wavefront.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pdk {

namespace {

struct NormalizedAtoms {
  std::optional<SBFunction> density;  // merged; absent when zero
  std::vector<std::pair<PAdicPoint, CycScalar>> diracs;  // merged, nonzero
  CycScalar diagonal_weight;
  bool has_diagonal = false;
  std::int64_t half_dim = 0;
  bool has_custom = false;
};

NormalizedAtoms normalize_atoms(const Distribution& u) {
  NormalizedAtoms out;
  out.diagonal_weight = CycScalar::zero(u.prime());
  SBFunction density_sum = SBFunction::zero(u.prime(), u.dim());
  bool saw_density = false;
  for (const auto& [weight, atom] : u.atoms()) {
    if (const auto* density = std::get_if<DensityAtom>(&atom)) {
      density_sum = density_sum + density->function.scale(weight);
      saw_density = true;
    } else if (const auto* dirac = std::get_if<DiracAtom>(&atom)) {
      const CycScalar w = weight * dirac->weight;
      bool merged = false;
      for (auto& [point, acc] : out.diracs) {
        if (point == dirac->point) {
          acc += w;
          merged = true;
          break;
        }
      }
      if (!merged) out.diracs.emplace_back(dirac->point, w);
    } else if (const auto* diag = std::get_if<DiagonalAtom>(&atom)) {
      out.diagonal_weight += weight;
      out.half_dim = diag->half_dim;
      out.has_diagonal = true;
    } else {
      out.has_custom = true;
    }
  }
  if (saw_density && !density_sum.is_zero()) out.density = std::move(density_sum);
  std::erase_if(out.diracs, [](const auto& e) { return e.second.is_zero(); });
  std::sort(out.diracs.begin(), out.diracs.end(), [](const auto& a, const auto& b) {
    return a.first.coords() < b.first.coords();
  });
  if (out.has_diagonal && out.diagonal_weight.is_zero()) out.has_diagonal = false;
  return out;
}

Rational most_negative_lambda(const LambdaGroup& lambda, std::int64_t ord_floor) {
  const auto reps = lambda.representatives(ord_floor, 0);
  return reps.empty() ? Rational(1) : reps.front();
}

SmoothnessVerdict bounded_search(const MicrolocalQuery& q, const Polydisc& U,
                                 const Polydisc& Ucheck, std::int64_t probe_depth) {
  const auto lambdas = q.lambda.representatives(q.ord_floor, 0);
  std::int64_t probes = 0;
  for (const auto& phi_ball : U.split(probe_depth)) {
    const SBFunction phi = SBFunction::indicator(phi_ball);
    for (const auto& xi : Ucheck.representatives(probe_depth)) {
      for (const auto& lam : lambdas) {
        ++probes;
        if (!q.u.modulated_pair(phi, lam * xi).is_zero()) {
          return NotSmoothWitness{phi, lam, xi};
        }
      }
    }
  }
  return InconclusiveBounded{U, Ucheck, probe_depth, q.ord_floor, probes};
}

}  // namespace

std::pair<Polydisc, Polydisc> query_neighborhoods(const MicrolocalQuery& q) {
  const Polydisc U(q.x0, q.nbhd_radius);
  std::int64_t r = q.nbhd_radius;
  const Valuation v = q.xi0.ord();
  if (!(v < Valuation(r))) {
    r = v.value() + 1;  // the smallest polydisc radius around xi0 avoiding 0
  }
  return {U, Polydisc(q.xi0, r)};
}

SmoothnessVerdict is_smooth_at(const MicrolocalQuery& q) {
  if (q.x0.prime() != q.u.prime() || q.x0.dim() != q.u.dim() ||
      q.xi0.prime() != q.u.prime() || q.xi0.dim() != q.u.dim()) {
    throw std::invalid_argument("query point has the wrong shape");
  }
  if (q.xi0.is_zero()) {
    throw std::invalid_argument("query frequency must be nonzero");
  }
  if (q.probe_depth < q.nbhd_radius) {
    throw std::invalid_argument("probe depth must be at least the neighborhood radius");
  }
  const auto [U, Ucheck] = query_neighborhoods(q);
  const std::int64_t probe_depth = std::max(q.probe_depth, Ucheck.alpha());

  const NormalizedAtoms atoms = normalize_atoms(q.u);
  const int kinds = (atoms.density ? 1 : 0) + (atoms.diracs.empty() ? 0 : 1) +
                    (atoms.has_diagonal ? 1 : 0);
  if (atoms.has_custom || kinds > 1) {
    return bounded_search(q, U, Ucheck, probe_depth);
  }

  if (kinds == 0) {
    // The zero distribution: every pairing vanishes.
    return SmoothCertificate{U, Ucheck, 0, true};
  }

  if (atoms.density) {
    // <T_f, phi Psi(<., lambda xi>)> is the Fourier transform of f phi at
    // lambda xi; its support is bounded by the constancy radius, and
    // ord(xi) is constant on Ucheck.
    const std::int64_t aplus = std::max(atoms.density->constancy_radius(), probe_depth);
    const std::int64_t v0 = Ucheck.center().ord().value();
    return SmoothCertificate{U, Ucheck, 1 - aplus - v0, true};
  }

  if (!atoms.diracs.empty()) {
    std::vector<const PAdicPoint*> inside;
    for (const auto& [point, weight] : atoms.diracs) {
      if (U.contains(point)) inside.push_back(&point);
    }
    if (inside.empty()) {
      // Every phi supported in U vanishes at every mass point.
      return SmoothCertificate{U, Ucheck, 0, true};
    }
    const PAdicPoint& a = *inside.front();
    // Isolate the chosen point from the other masses inside U.
    std::int64_t gamma = probe_depth;
    for (const PAdicPoint* other : inside) {
      if (*other == a) continue;
      gamma = std::max(gamma, (a - *other).ord().value() + 1);
    }
    return NotSmoothWitness{SBFunction::indicator(Polydisc(a, gamma)),
                            most_negative_lambda(q.lambda, q.ord_floor), q.xi0};
  }

  // Diagonal: <u_D, phi Psi(<., lambda (xi, eta)>)> = g^(lambda (xi + eta))
  // with g(x) = phi(x, x).
  const std::int64_t m = atoms.half_dim;
  const PAdicPoint a = q.x0.first(m);
  const PAdicPoint b = q.x0.last(m);
  if (a != b) {
    // Shrink U until it misses the diagonal; then g = 0 for all phi in U.
    const std::int64_t d = (a - b).ord().value();
    const Polydisc away(q.x0, std::max(q.nbhd_radius, d + 1));
    return SmoothCertificate{away, Ucheck, 0, true};
  }
  const PAdicPoint freq_sum = q.xi0.first(m) + q.xi0.last(m);
  if (freq_sum.ord() >= Valuation(Ucheck.alpha())) {
    // Ucheck contains an exactly conormal frequency (xi, -xi); at it the
    // pairing is the full integral of g, nonzero for a small indicator.
    const PAdicPoint xi_left = q.xi0.first(m);
    const PAdicPoint conormal = PAdicPoint::concat(xi_left, -xi_left);
    return NotSmoothWitness{SBFunction::indicator(Polydisc(q.x0, probe_depth)),
                            most_negative_lambda(q.lambda, q.ord_floor), conormal};
  }
  const std::int64_t vs = freq_sum.ord().value();  // constant over Ucheck
  return SmoothCertificate{U, Ucheck, 1 - probe_depth - vs, true};
}

bool WavefrontDescription::contains(const PAdicPoint& x0, const PAdicPoint& xi0) const {
  if (xi0.is_zero()) return false;
  for (const auto& a : dirac_points) {
    if (a == x0) return true;
  }
  if (conormal_diagonal) {
    if (x0.first(half_dim) == x0.last(half_dim) &&
        xi0.last(half_dim) == -xi0.first(half_dim)) {
      return true;
    }
  }
  return false;
}

std::string WavefrontDescription::to_string() const {
  if (empty()) return "{}";
  std::ostringstream out;
  bool first = true;
  for (const auto& a : dirac_points) {
    if (!first) out << " u ";
    out << "{" << a.to_string() << "} x (nonzero)";
    first = false;
  }
  if (conormal_diagonal) {
    if (!first) out << " u ";
    out << "{((x,x),(xi,-xi)) : xi != 0}";
  }
  return out.str();
}

WavefrontDescription wf_closed_form(const Distribution& u) {
  const NormalizedAtoms atoms = normalize_atoms(u);
  if (atoms.has_custom) {
    throw std::invalid_argument("custom atom has no closed-form wave front");
  }
  WavefrontDescription out;
  out.p = u.prime();
  out.dim = u.dim();
  for (const auto& [point, weight] : atoms.diracs) {
    out.dirac_points.push_back(point);
  }
  out.conormal_diagonal = atoms.has_diagonal;
  out.half_dim = atoms.half_dim;
  return out;
}

InclusionReport check_wf_inclusion(const Kernel& k, const SBFunction& psi,
                                   const std::vector<std::pair<PAdicPoint, PAdicPoint>>& grid,
                                   const LambdaGroup& lambda, std::int64_t nbhd_radius,
                                   std::int64_t probe_depth, std::int64_t ord_floor) {
  InclusionReport report;
  const Distribution applied = k.apply(psi);

  bool closed_form = true;
  for (const auto& [w, atom] : k.distribution().atoms()) {
    if (std::holds_alternative<CustomAtom>(atom)) closed_form = false;
  }
  report.bounded = !closed_form;

  std::optional<WavefrontDescription> lhs_desc;
  std::optional<WavefrontDescription> u_desc;
  if (closed_form) {
    lhs_desc = wf_closed_form(applied);
    u_desc = wf_closed_form(k.distribution());
  }

  for (const auto& [x0, xi0] : grid) {
    InclusionPoint pt{x0, xi0, false, false, false};
    if (closed_form) {
      pt.lhs_member = lhs_desc->contains(x0, xi0);
      // exists y in supp psi with ((x0, y), (xi0, 0)) in WF(u)?
      for (const auto& point : u_desc->dirac_points) {
        if (point.first(k.n1()) == x0 && !psi.eval(point.last(k.n2())).is_zero()) {
          pt.rhs_member = true;
          break;
        }
      }
      // The conormal never meets frequencies of the form (xi0, 0) with
      // xi0 != 0, so the diagonal contributes nothing to the right side.
    } else {
      MicrolocalQuery lhs_query{applied, x0, xi0, lambda, nbhd_radius, probe_depth, ord_floor};
      pt.lhs_member = std::holds_alternative<NotSmoothWitness>(is_smooth_at(lhs_query));
      const PAdicPoint xi_prod =
          PAdicPoint::concat(xi0, PAdicPoint::zero(k.prime(), k.n2()));
      for (const auto& ball : psi.support()) {
        for (const auto& y : ball.representatives(probe_depth)) {
          MicrolocalQuery rhs_query{k.distribution(), PAdicPoint::concat(x0, y), xi_prod,
                                    lambda, nbhd_radius, probe_depth, ord_floor};
          if (std::holds_alternative<NotSmoothWitness>(is_smooth_at(rhs_query))) {
            pt.rhs_member = true;
            break;
          }
        }
        if (pt.rhs_member) break;
      }
    }
    pt.violation = pt.lhs_member && !pt.rhs_member;
    if (pt.violation) ++report.violations;
    report.points.push_back(std::move(pt));
  }
  return report;
}

bool replay_witness(const Distribution& u, const NotSmoothWitness& w) {
  return !u.modulated_pair(w.phi, w.lambda_value * w.xi).is_zero();
}

bool replay_certificate(const Distribution& u, const SmoothCertificate& cert,
                        const LambdaGroup& lambda, std::int64_t probe_depth,
                        std::int64_t ord_floor) {
  const std::int64_t depth_u = std::max(probe_depth, cert.U.alpha());
  const std::int64_t depth_xi = std::max(probe_depth, cert.Ucheck.alpha());
  const auto lambdas = lambda.representatives(ord_floor, cert.N);
  for (const auto& phi_ball : cert.U.split(depth_u)) {
    const SBFunction phi = SBFunction::indicator(phi_ball);
    for (const auto& xi : cert.Ucheck.representatives(depth_xi)) {
      for (const auto& lam : lambdas) {
        if (!u.modulated_pair(phi, lam * xi).is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace pdk
