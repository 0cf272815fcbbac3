#pragma once

// Pattern inclusion, interval pattern embeddings and the completion map Phi.

#include <optional>
#include <span>
#include <vector>

#include "orbitslice/clan.hpp"

namespace orbitslice {

/// Increasing 0-based positions of the big clan, one per small position.
using Witness = std::vector<int>;

/// Does `indices` carry small into big (signs equal, matchings to matchings)?
bool is_witness(const Clan& big, const Clan& small, std::span<const int> indices);

/// Lexicographically least witness, if any.
std::optional<Witness> includes(const Clan& big, const Clan& small);
/// Every witness, lexicographic order.
std::vector<Witness> all_witnesses(const Clan& big, const Clan& small);

bool avoids_all(const Clan& c, std::span<const Clan> patterns);

/// 1+-1, 1-+1, 1212, 1+221, 1-221, 122+1, 122-1, 122331.
const std::vector<Clan>& mcgovern_patterns();
bool mcgovern_smooth(const Clan& c);

/// The clan equal to alpha on `indices` and to theta elsewhere.
/// Error(IllFormedCompletion) if a theta matching has one endpoint in
/// `indices`; Error(BadIndices) if the index set is malformed.
Clan phi(const Clan& alpha, const Clan& theta, std::span<const int> indices);

struct IntervalEmbedding {
  Clan alpha;
  Clan gamma;
  Clan beta;
  Clan theta;
  Witness indices;
  int length_diff;  // l(gamma) - l(alpha)
};

/// Conditions (a) common witness, (b) agreement off the index set and
/// (c) equal length gaps, for comparable pairs. False when either pair is not
/// comparable.
bool interval_contains(const Clan& alpha, const Clan& gamma, const Clan& beta, const Clan& theta,
                       std::span<const int> indices);

/// Every index set embedding [alpha, gamma] into [phi(alpha), theta].
std::vector<IntervalEmbedding> find_interval_embeddings(const Clan& theta, const Clan& alpha, const Clan& gamma);

/// Index sets witnessing gamma in theta for which [alpha, gamma] merely
/// embeds (everything but the length condition).
std::vector<IntervalEmbedding> find_mere_embeddings(const Clan& theta, const Clan& alpha, const Clan& gamma);

}  // namespace orbitslice
