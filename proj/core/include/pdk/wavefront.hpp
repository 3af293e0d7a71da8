#pragma once

#include "pdk/kernel.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pdk {

/// One microlocal smoothness question: is u Lambda-microlocally smooth at
/// (x0, xi0), probed with polydisc neighborhoods of radius nbhd_radius,
/// test indicators at probe_depth, and lambda valuations down to ord_floor?
struct MicrolocalQuery {
  Distribution u;
  PAdicPoint x0;
  PAdicPoint xi0;
  LambdaGroup lambda;
  std::int64_t nbhd_radius = 1;
  std::int64_t probe_depth = 2;
  std::int64_t ord_floor = -4;
};

/// Pairings <u, phi Psi(<., lambda xi>)> vanish for every phi supported in
/// U with constancy depth probe_depth, every xi in Ucheck, and every
/// lambda in Lambda with ord lambda < N.  full_basis records that the
/// vanishing is proved for all Schwartz-Bruhat phi supported in U, not
/// just the probed basis.
struct SmoothCertificate {
  Polydisc U;
  Polydisc Ucheck;
  std::int64_t N = 0;
  bool full_basis = false;
};

/// A replayable non-smoothness datum: supp phi inside U, xi in Ucheck,
/// lambda in Lambda below every probed N, and the modulated pairing is
/// nonzero.
struct NotSmoothWitness {
  SBFunction phi;
  Rational lambda_value;
  PAdicPoint xi;
};

/// Every probe vanished but the search was bounded; nothing is certified.
struct InconclusiveBounded {
  Polydisc U;
  Polydisc Ucheck;
  std::int64_t probe_depth = 0;
  std::int64_t ord_floor = 0;
  std::int64_t probes = 0;
};

using SmoothnessVerdict = std::variant<SmoothCertificate, NotSmoothWitness, InconclusiveBounded>;

/// Decides the query exactly for closed-form atom combinations (densities
/// always certify; point masses witness iff their point lies in U; the
/// diagonal follows the conormal rule).  Mixed kinds and custom atoms get
/// a bounded basis sweep that can produce witnesses but never a false
/// certificate.
SmoothnessVerdict is_smooth_at(const MicrolocalQuery& q);

/// Exact wave front set of a closed-form distribution, as a finite
/// symbolic union: empty for densities, {a} x (Q_p^m \ 0) per point mass,
/// the conormal {((x,x),(xi,-xi)) : xi != 0} for the diagonal.
struct WavefrontDescription {
  std::int64_t p = 2;
  std::int64_t dim = 1;
  std::vector<PAdicPoint> dirac_points;
  bool conormal_diagonal = false;
  std::int64_t half_dim = 0;

  bool empty() const { return dirac_points.empty() && !conormal_diagonal; }
  /// Exact membership of ((x0), (xi0)) with xi0 != 0.
  bool contains(const PAdicPoint& x0, const PAdicPoint& xi0) const;
  std::string to_string() const;
};

/// Requires all atoms to be Density/Dirac/Diagonal.
WavefrontDescription wf_closed_form(const Distribution& u);

struct InclusionPoint {
  PAdicPoint x0;
  PAdicPoint xi0;
  bool lhs_member = false;
  bool rhs_member = false;
  bool violation = false;
};

struct InclusionReport {
  std::vector<InclusionPoint> points;
  std::int64_t violations = 0;
  bool bounded = false;  // custom atoms forced bounded membership tests
};

/// Checks WF(K psi) against the projected wave front of u over supp psi at
/// each grid point: a violation is a grid point microlocally bad for K psi
/// with no y in supp psi making ((x0, y), (xi0, 0)) bad for u.
InclusionReport check_wf_inclusion(const Kernel& k, const SBFunction& psi,
                                   const std::vector<std::pair<PAdicPoint, PAdicPoint>>& grid,
                                   const LambdaGroup& lambda, std::int64_t nbhd_radius,
                                   std::int64_t probe_depth, std::int64_t ord_floor);

/// Exact replay of a witness: the modulated pairing must be nonzero.
bool replay_witness(const Distribution& u, const NotSmoothWitness& w);

/// Exhaustive bounded replay of a certificate: every basis pairing with
/// ord lambda in [ord_floor, N) must vanish.
bool replay_certificate(const Distribution& u, const SmoothCertificate& cert,
                        const LambdaGroup& lambda, std::int64_t probe_depth,
                        std::int64_t ord_floor);

/// The neighborhoods a query actually uses: U = B(x0, nbhd_radius) and
/// Ucheck = B(xi0, r) with r enlarged just enough to exclude 0.
std::pair<Polydisc, Polydisc> query_neighborhoods(const MicrolocalQuery& q);

}  // namespace pdk
