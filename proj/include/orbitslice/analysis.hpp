#pragma once

// Geometry of slice varieties: dimension, smoothness at the base point,
// singular loci, interval isomorphisms and order-ideal checks.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "orbitslice/groebner.hpp"
#include "orbitslice/ideal.hpp"
#include "orbitslice/patterns.hpp"

namespace orbitslice {

/// Ideal and reduced basis for one pair, built once and shared.
struct PairData {
  MarsSpringerIdeal ideal;
  GroebnerBasis gb;
};

std::shared_ptr<const PairData> pair_data(const Clan& gamma, const Clan& alpha, const GroebnerOptions& options = {});

/// Krull dimension of the slice variety. Error(DimensionMismatch) if it is not
/// l(gamma) - l(alpha).
int variety_dimension(const Clan& gamma, const Clan& alpha, const GroebnerOptions& options = {});

struct SingularityReport {
  Clan gamma;
  Clan alpha;
  int variety_dim;
  int tangent_dim;
  bool smooth;
  /// Always set: the verdict reads the tangent space off the generators,
  /// which is exact only if they generate a radical ideal.
  bool radicality_caveat = true;
};

SingularityReport smooth_at(const Clan& gamma, const Clan& alpha, const GroebnerOptions& options = {});

/// Maximal alpha <= gamma along which Y_gamma is singular, in Clan order.
std::vector<Clan> maxsing(const Clan& gamma, const GroebnerOptions& options = {});

struct TableRow {
  Clan gamma;
  int length;
  std::vector<Clan> maxsing;
};

/// One row per singular (p,q)-clan: longest first, then Clan order.
std::vector<TableRow> singularity_table(int p, int q, const GroebnerOptions& options = {});

struct IsoVerification {
  IntervalEmbedding embedding;
  /// For each S_alpha variable, the S_beta variable at the matching position.
  std::vector<int> variable_map;
  /// S_beta variables in deleted rows or columns.
  std::vector<int> deleted_vars;
  bool dims_equal = false;
  bool deleted_vars_vanish = false;
  bool mapped_gens_in_radical = false;

  bool verified() const { return dims_equal && deleted_vars_vanish && mapped_gens_in_radical; }
};

/// Error(PositionMapMismatch) if the kept part of M_beta does not match
/// M_alpha entry by entry.
IsoVerification verify_interval_iso(const IntervalEmbedding& e, const GroebnerOptions& options = {});

/// Predicate on a pair (alpha, gamma) with alpha <= gamma.
using PairPredicate = std::function<bool(const Clan& alpha, const Clan& gamma)>;

struct UpperIdealReport {
  std::size_t pairs_checked = 0;
  std::size_t downward_checks = 0;
  std::size_t embeddings_checked = 0;
  std::vector<std::string> violations;
};

/// Checks that the pairs satisfying `pred` form an upper order ideal:
/// pred(alpha, gamma) implies pred(alpha', gamma) for alpha' <= alpha, and
/// pred(Phi(alpha), theta) for every interval embedding of [alpha, gamma] into
/// an interval under a (p,q)-clan theta, small intervals ranging over every
/// strictly smaller signature.
UpperIdealReport upper_ideal_check(int p, int q, const PairPredicate& pred);

}  // namespace orbitslice
