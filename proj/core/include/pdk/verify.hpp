#pragma once

#include "pdk/wavefront.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace pdk::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// extra_depth widens the basis and probe sweeps beyond the pinned
/// acceptance parameters; 0 runs exactly the acceptance configuration.
CriterionResult run_criterion(int id, std::uint64_t seed, std::int64_t extra_depth = 0);
std::vector<CriterionResult> run_all(std::uint64_t seed, std::int64_t extra_depth = 0);

/// One line per criterion: "PASS  3  fourier-oracle ..." style.
std::string format_result(const CriterionResult& r);

// ---- seeded generators -------------------------------------------------

/// Coefficient pool: small rationals and low-level roots of unity.
CycScalar random_coef(std::mt19937_64& rng, std::int64_t p);

/// Raw (non-canonical) indicator terms: radius exponents in
/// [alpha_lo, alpha_hi], integer centers mod p^2, occasional zero
/// coefficients.
std::vector<SBTerm> random_raw_terms(std::mt19937_64& rng, std::int64_t p, std::int64_t dim,
                                     std::int64_t max_terms, std::int64_t alpha_lo,
                                     std::int64_t alpha_hi);

SBFunction random_sb(std::mt19937_64& rng, std::int64_t p, std::int64_t dim,
                     std::int64_t max_terms, std::int64_t alpha_lo, std::int64_t alpha_hi);

// ---- independent brute-force oracles ------------------------------------
// These are written against raw digit enumeration and pointwise
// evaluation only, never against the closed forms they check.

/// All points whose coordinates are sums of digits d_i p^i over positions
/// i in [lo, hi): the depth-hi representatives of the box B(0, lo)^dim.
std::vector<PAdicPoint> digit_points(std::int64_t p, std::int64_t dim, std::int64_t lo,
                                     std::int64_t hi);

/// Haar volume of the ball by counting depth-`depth` representative cells
/// inside it.  Requires depth >= alpha.
Rational volume_by_counting(const Polydisc& ball, std::int64_t depth);

/// Riemann character sum for the Fourier transform at xi: the cells have
/// depth `depth`, which must be at least the constancy radius of f and at
/// least 1 - ord(xi); support_floor must bound supp f from below.
CycScalar fourier_char_sum(const SBFunction& f, const PAdicPoint& xi,
                           std::int64_t support_floor, std::int64_t depth);

/// Riemann sum for (f * g)(y) over cells of the given depth.
CycScalar convolve_char_sum(const SBFunction& f, const SBFunction& g, const PAdicPoint& y,
                            std::int64_t support_floor, std::int64_t depth);

}  // namespace pdk::verify
