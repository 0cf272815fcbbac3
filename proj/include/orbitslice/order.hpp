#pragma once

// Closure order on (p,q)-clans.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbitslice/clan.hpp"

namespace orbitslice {

/// T1 +- -> 11, T2 -+ -> 11, T3 11+ -> 1+1, T4 11- -> 1-1, T5 +11 -> 1+1,
/// T6 -11 -> 1-1, T7 1122 -> 1212, T8 1122 -> 1+-1, T9 1122 -> 1-+1,
/// T10 1212 -> 1221. Patterns occur as subsequences.
struct TranspositionMove {
  int rule;                 // 1..10
  std::vector<int> positions;  // 0-based, increasing
  Clan result;
};

std::vector<TranspositionMove> transpositions(const Clan& c);

/// Transposition results one longer than c, deduplicated, in Clan order.
std::vector<Clan> covers(const Clan& c);

/// Closed form of l(c') - l(c) for a T7 move at positions i<j<k<l (0-based).
int t7_length_difference(const Clan& c, int i, int j, int k, int l);

class ClanPoset {
 public:
  ClanPoset(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Clan>& elements() const { return elements_; }
  const Clan& element(int k) const { return elements_[static_cast<std::size_t>(k)]; }
  int length(int k) const { return lengths_[static_cast<std::size_t>(k)]; }
  /// Indices of the elements covering element k.
  const std::vector<int>& up(int k) const { return up_[static_cast<std::size_t>(k)]; }
  int index_of(const Clan& c) const;
  /// element(a) <= element(b)
  bool leq(int a, int b) const;
  std::size_t edge_count() const;

 private:
  int p_, q_;
  std::vector<Clan> elements_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<std::uint64_t>> above_;  // reachability bitsets
  std::unordered_map<std::string, int> index_;
};

/// Shared, built once per (p,q).
std::shared_ptr<const ClanPoset> hasse(int p, int q);

/// Error(MixedSignature) when the signatures differ.
bool leq(const Clan& a, const Clan& b);
/// Base point of a satisfies the rank conditions of b.
bool leq_rank_oracle(const Clan& a, const Clan& b);

struct ClanInterval {
  std::vector<Clan> elements;             // poset order
  std::vector<std::pair<int, int>> edges;  // covers, as (lower, upper) local indices
};

/// [a, b]; Error(NotComparable) unless a <= b.
ClanInterval interval(const Clan& a, const Clan& b);

}  // namespace orbitslice
