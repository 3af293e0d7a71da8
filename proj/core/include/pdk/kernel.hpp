#pragma once

#include "pdk/distribution.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace pdk {

/// Kernel of a distribution u on Q_p^{n1} x Q_p^{n2}: the unique linear
/// map K with <u, phi tensor psi> = <K psi, phi>.
class Kernel {
 public:
  Kernel(Distribution u, std::int64_t n1, std::int64_t n2);

  const Distribution& distribution() const { return u_; }
  std::int64_t n1() const { return n1_; }
  std::int64_t n2() const { return n2_; }
  std::int64_t prime() const { return u_.prime(); }

  /// K psi as a distribution on the first factor, with atoms specialized:
  /// densities map to partial integrals, point masses evaluate psi at the
  /// second component, the diagonal maps psi to its own density; custom
  /// atoms stay custom.
  Distribution apply(const SBFunction& psi) const;

  /// K psi as a single custom atom C -> <u, 1_C tensor psi>, with no
  /// specialization; the reference the closed forms are checked against.
  Distribution apply_generic(const SBFunction& psi) const;

  /// <K psi, phi>; equals <u, phi tensor psi>.
  CycScalar pairing(const SBFunction& phi, const SBFunction& psi) const;

 private:
  Distribution u_;
  std::int64_t n1_;
  std::int64_t n2_;
};

/// Values <K 1_D, 1_C> of a linear map K on indicator pairs; all the
/// reconstruction needs.
using KernelOracle = std::function<CycScalar(const Polydisc& test_ball /*C*/,
                                             const Polydisc& arg_ball /*D*/)>;

KernelOracle oracle_from_kernel(const Kernel& k);

/// The distribution u with <u, phi> = sum of c_i <K 1_{D_i}, 1_{C_i}> over
/// the canonical product decomposition of phi.  depth bounds how deep the
/// resulting custom atom may be probed.
Distribution reconstruct(std::int64_t p, std::int64_t n1, std::int64_t n2,
                         const KernelOracle& oracle, std::int64_t depth);

struct IndependenceReport {
  bool pass = true;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  CycScalar reference;
  std::string detail;
};

/// Pairs u against `trials` random redundant decompositions of phi
/// (random over-splitting of the canonical terms) and checks that every
/// decomposition yields the same scalar.
IndependenceReport independence_check(const Distribution& u, const SBFunction& phi,
                                      std::int64_t trials, std::uint64_t seed);

struct RoundTripReport {
  bool pass = true;
  std::string detail;
};

/// Existence direction: <K psi, phi> = <u, phi tensor psi> on all basis
/// pairs to the given depth.  Converse direction: reconstructing from the
/// pairing oracle of K reproduces u on all basis tensors.
RoundTripReport kernel_roundtrip(const Kernel& k, std::int64_t depth);

/// All sub-balls of Z_p^dim of radius 0..depth; the standard basis sweep.
std::vector<Polydisc> basis_balls(std::int64_t p, std::int64_t dim, std::int64_t depth);

}  // namespace pdk
