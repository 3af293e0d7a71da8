#pragma once

#include "pdk/schwartz.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pdk {

/// T_f for a Schwartz-Bruhat density f: phi -> integral of f phi.
struct DensityAtom {
  SBFunction function;
};

/// phi -> weight * phi(point).
struct DiracAtom {
  PAdicPoint point;
  CycScalar weight;
};

/// On dim 2m: phi -> integral of phi(x, x) dx.
struct DiagonalAtom {
  std::int64_t half_dim;
};

/// A finitely additive pairing given on the polydisc basis, either by a
/// pure function or by an explicit finite table.  Balls deeper than
/// depth_limit cannot be paired.
class CustomAtom {
 public:
  using PairFn = std::function<CycScalar(const Polydisc&)>;
  struct TableEntry {
    Polydisc ball;
    CycScalar value;
  };

  CustomAtom(PairFn fn, std::int64_t depth_limit);
  static CustomAtom from_table(std::int64_t p, std::int64_t dim,
                               std::vector<TableEntry> entries, std::int64_t depth_limit);

  CycScalar pair_indicator(const Polydisc& ball) const;
  std::int64_t depth_limit() const { return depth_limit_; }
  /// Present only for table-backed atoms (the serializable kind).
  const std::optional<std::vector<TableEntry>>& table() const { return table_; }

 private:
  PairFn fn_;
  std::int64_t depth_limit_;
  std::optional<std::vector<TableEntry>> table_;
};

using DistAtom = std::variant<DensityAtom, DiracAtom, DiagonalAtom, CustomAtom>;

struct WeightedAtom {
  CycScalar weight;
  DistAtom atom;
};

/// Linear form on the Schwartz-Bruhat space, represented as a combination
/// of pairing atoms.  Pairing distributes over the canonical decomposition
/// of the test function, so it is linear and decomposition-independent by
/// construction.
class Distribution {
 public:
  Distribution(std::int64_t p, std::int64_t dim, std::vector<WeightedAtom> atoms);

  static Distribution zero(std::int64_t p, std::int64_t dim);
  static Distribution density(SBFunction f);
  static Distribution dirac(PAdicPoint point);
  static Distribution dirac(PAdicPoint point, CycScalar weight);
  static Distribution diagonal(std::int64_t p, std::int64_t half_dim);
  static Distribution custom(std::int64_t p, std::int64_t dim, CustomAtom atom);

  std::int64_t prime() const { return p_; }
  std::int64_t dim() const { return dim_; }
  const std::vector<WeightedAtom>& atoms() const { return atoms_; }

  /// <u, 1_B>.
  CycScalar pair_indicator(const Polydisc& ball) const;
  /// <u, phi>.
  CycScalar pair(const SBFunction& phi) const;
  /// <u, phi Psi(<., eta>)>, computed without materializing the modulation.
  CycScalar modulated_pair(const SBFunction& phi, const PAdicPoint& eta) const;

  Distribution scaled(const CycScalar& c) const;
  friend Distribution operator+(const Distribution& u, const Distribution& v);

 private:
  std::int64_t p_;
  std::int64_t dim_;
  std::vector<WeightedAtom> atoms_;
};

/// Sum of c_i <u, 1_{B_i}> over a raw term list; the decomposition-
/// independence statements quantify over exactly these sums.
CycScalar pair_raw_terms(const Distribution& u, const std::vector<SBTerm>& raw);

/// Probes T_f against every polydisc indicator of radius <= probe_depth
/// with center in supp f; true iff every pairing vanishes.  Equivalent to
/// f = 0 for Schwartz-Bruhat densities.
bool density_is_zero(const SBFunction& f, std::int64_t probe_depth);

struct BasisComparison {
  bool equal = true;
  std::optional<Polydisc> witness;
  CycScalar lhs;
  CycScalar rhs;
};

/// Compares <u, 1_B> with <v, 1_B> over all radius-depth sub-balls of the
/// region; reports the first counterexample ball.
BasisComparison dist_equal_on_basis(const Distribution& u, const Distribution& v,
                                    std::int64_t depth, const Polydisc& region);

/// Checks <u, 1_B> = sum over children of <u, 1_child> for every sub-ball
/// of the region down to the given depth.
bool finitely_additive_on(const Distribution& u, const Polydisc& region, std::int64_t depth);

}  // namespace pdk
