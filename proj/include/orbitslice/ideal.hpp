#pragma once

// Rank conditions of an orbit closure and the minor ideal they cut out of a
// slice.

#include <vector>

#include "orbitslice/clan.hpp"
#include "orbitslice/matrix.hpp"
#include "orbitslice/slice.hpp"

namespace orbitslice {

enum class ConditionKind : std::uint8_t { SW, SE, AUX };

/// i and j are 1-based prefix lengths (j unused except for AUX).
struct RankCondition {
  ConditionKind kind;
  int i;
  int j;
  int bound;
  int minor_size;
  int rows;
  int cols;
  bool vacuous;

  friend bool operator==(const RankCondition&, const RankCondition&) = default;
};

std::string_view to_string(ConditionKind kind);

/// All conditions: SW(i), SE(i) for i = 1..n, then AUX(i,j) for i < j.
std::vector<RankCondition> rank_conditions(const Clan& gamma);

/// n x (i+j): the first i columns of minv with the last q rows zeroed, then
/// the first j columns of minv. Error(BadIndices) unless 1 <= i < j <= n.
PolyMatrix aux_matrix(const PolyMatrix& minv, int i, int j, int q);
RationalMatrix aux_matrix(const RationalMatrix& minv, int i, int j, int q);

struct MarsSpringerIdeal {
  Clan gamma;
  Clan alpha;
  RingPtr ring;
  /// Primitive, deduplicated, nonzero minors in generation order.
  std::vector<Polynomial> generators;
  /// The non-vacuous conditions, with the number of minors each produced.
  std::vector<RankCondition> conditions;
  std::vector<std::size_t> minors_computed;
};

/// Error(NotComparable) unless alpha <= gamma by the rank oracle.
MarsSpringerIdeal generators(const Clan& gamma, const Clan& alpha);

/// Does the invertible matrix m satisfy gamma's rank conditions?
/// Error(SingularPoint) if m is not invertible.
bool point_satisfies(const RationalMatrix& m, const Clan& gamma);

}  // namespace orbitslice
