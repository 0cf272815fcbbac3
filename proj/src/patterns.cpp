#include "orbitslice/patterns.hpp"

#include "orbitslice/error.hpp"
#include "orbitslice/order.hpp"

namespace orbitslice {

bool is_witness(const Clan& big, const Clan& small, std::span<const int> indices) {
  if (static_cast<int>(indices.size()) != small.n()) return false;
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (indices[t] < 0 || indices[t] >= big.n() || (t > 0 && indices[t] <= indices[t - 1])) return false;
  }
  for (int t = 0; t < small.n(); ++t) {
    const int b = indices[static_cast<std::size_t>(t)];
    if (small.is_sign(t)) {
      if (!big.is_sign(b) || big[b].slot != small[t].slot) return false;
    } else if (!big.is_matched(b) || big.partner(b) != indices[static_cast<std::size_t>(small.partner(t))]) {
      return false;
    }
  }
  return true;
}

namespace {

// Depth-first search in lexicographic order; stops early when `first_only`.
void search(const Clan& big, const Clan& small, Witness& cur, bool first_only, std::vector<Witness>& out) {
  const int t = static_cast<int>(cur.size());
  if (t == small.n()) {
    out.push_back(cur);
    return;
  }
  const int start = t == 0 ? 0 : cur.back() + 1;
  for (int b = start; b <= big.n() - (small.n() - t); ++b) {
    if (small.is_sign(t)) {
      if (!big.is_sign(b) || big[b].slot != small[t].slot) continue;
    } else if (!big.is_matched(b)) {
      continue;
    } else if (small.is_right_end(t) && big.partner(b) != cur[static_cast<std::size_t>(small.partner(t))]) {
      continue;
    } else if (small.is_left_end(t) && big.partner(b) < b) {
      continue;
    }
    cur.push_back(b);
    search(big, small, cur, first_only, out);
    cur.pop_back();
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

std::optional<Witness> includes(const Clan& big, const Clan& small) {
  std::vector<Witness> out;
  Witness cur;
  search(big, small, cur, true, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<Witness> all_witnesses(const Clan& big, const Clan& small) {
  std::vector<Witness> out;
  Witness cur;
  search(big, small, cur, false, out);
  return out;
}

bool avoids_all(const Clan& c, std::span<const Clan> patterns) {
  for (const Clan& pat : patterns) {
    if (includes(c, pat)) return false;
  }
  return true;
}

const std::vector<Clan>& mcgovern_patterns() {
  static const std::vector<Clan> list = [] {
    std::vector<Clan> v;
    for (const char* s : {"1+-1", "1-+1", "1212", "1+221", "1-221", "122+1", "122-1", "122331"}) v.push_back(Clan::parse(s));
    return v;
  }();
  return list;
}

bool mcgovern_smooth(const Clan& c) { return avoids_all(c, mcgovern_patterns()); }

Clan phi(const Clan& alpha, const Clan& theta, std::span<const int> indices) {
  const int n = theta.n();
  if (static_cast<int>(indices.size()) != alpha.n()) {
    throw Error(ErrorCode::BadIndices, "index set size differs from the length of " + alpha.str());
  }
  std::vector<int> slot_of(static_cast<std::size_t>(n), -1);
  for (std::size_t t = 0; t < indices.size(); ++t) {
    const int b = indices[t];
    if (b < 0 || b >= n || (t > 0 && b <= indices[t - 1])) throw Error(ErrorCode::BadIndices, "index set is not increasing within range");
    slot_of[static_cast<std::size_t>(b)] = static_cast<int>(t);
  }
  std::vector<ClanEntry> e(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) {
    const int t = slot_of[static_cast<std::size_t>(b)];
    if (t >= 0) {
      const ClanEntry& src = alpha[t];
      e[static_cast<std::size_t>(b)] = src.slot == Slot::Matched
                                           ? ClanEntry{Slot::Matched, indices[static_cast<std::size_t>(src.partner)]}
                                           : ClanEntry{src.slot, -1};
    } else {
      if (theta.is_matched(b) && slot_of[static_cast<std::size_t>(theta.partner(b))] >= 0) {
        throw Error(ErrorCode::IllFormedCompletion,
                    "a matching of " + theta.str() + " has exactly one endpoint in the index set");
      }
      e[static_cast<std::size_t>(b)] = theta[b];
    }
  }
  return Clan(std::move(e));
}

static bool comparable(const Clan& lo, const Clan& hi) {
  return lo.p() == hi.p() && lo.q() == hi.q() && leq(lo, hi);
}

bool interval_contains(const Clan& alpha, const Clan& gamma, const Clan& beta, const Clan& theta,
                       std::span<const int> indices) {
  if (alpha.n() != gamma.n() || beta.n() != theta.n()) return false;
  if (!comparable(alpha, gamma) || !comparable(beta, theta)) return false;
  if (!is_witness(theta, gamma, indices) || !is_witness(beta, alpha, indices)) return false;
  std::vector<bool> in(static_cast<std::size_t>(theta.n()), false);
  for (int b : indices) in[static_cast<std::size_t>(b)] = true;
  for (int b = 0; b < theta.n(); ++b) {
    if (!in[static_cast<std::size_t>(b)] && !(theta[b] == beta[b])) return false;
  }
  return length(theta) - length(beta) == length(gamma) - length(alpha);
}

static std::vector<IntervalEmbedding> embeddings(const Clan& theta, const Clan& alpha, const Clan& gamma, bool need_length) {
  std::vector<IntervalEmbedding> out;
  if (alpha.n() != gamma.n() || !comparable(alpha, gamma)) return out;
  const int gap = length(gamma) - length(alpha);
  for (Witness& w : all_witnesses(theta, gamma)) {
    Clan beta = phi(alpha, theta, w);
    if (need_length && (length(theta) - length(beta) != gap || !leq(beta, theta))) continue;
    out.push_back({alpha, gamma, std::move(beta), theta, std::move(w), gap});
  }
  return out;
}

std::vector<IntervalEmbedding> find_interval_embeddings(const Clan& theta, const Clan& alpha, const Clan& gamma) {
  return embeddings(theta, alpha, gamma, true);
}

std::vector<IntervalEmbedding> find_mere_embeddings(const Clan& theta, const Clan& alpha, const Clan& gamma) {
  return embeddings(theta, alpha, gamma, false);
}

}  // namespace orbitslice
