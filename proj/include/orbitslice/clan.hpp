#pragma once

// (p,q)-clans: signed partial matchings on {1..n}.
//
// Positions are 0-based throughout the C++ API. Text and JSON forms use the
// usual 1-based conventions.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitslice {

enum class Slot : std::uint8_t { Plus, Minus, Matched };

struct ClanEntry {
  Slot slot = Slot::Plus;
  int partner = -1;  // valid only when slot == Matched

  friend bool operator==(const ClanEntry&, const ClanEntry&) = default;
};

struct Matching {
  int left;
  int right;

  friend bool operator==(const Matching&, const Matching&) = default;
};

class Clan {
 public:
  Clan() = default;

  /// Validates the involution; throws Error(UnbalancedLabel) on a broken
  /// partner link and Error(EmptyInput) on an empty sequence.
  explicit Clan(std::vector<ClanEntry> entries);

  /// Accepts "1+12-2" (one character per token) or the comma-delimited form
  /// "1,+,1,10,-,10" needed once labels reach 10. U+2212 is read as '-'.
  static Clan parse(std::string_view text);

  int n() const { return static_cast<int>(entries_.size()); }
  int p() const { return p_; }
  int q() const { return q_; }

  const ClanEntry& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<ClanEntry>& entries() const { return entries_; }

  bool is_plus(int i) const { return (*this)[i].slot == Slot::Plus; }
  bool is_minus(int i) const { return (*this)[i].slot == Slot::Minus; }
  bool is_sign(int i) const { return (*this)[i].slot != Slot::Matched; }
  bool is_matched(int i) const { return (*this)[i].slot == Slot::Matched; }
  bool is_left_end(int i) const { return is_matched(i) && (*this)[i].partner > i; }
  bool is_right_end(int i) const { return is_matched(i) && (*this)[i].partner < i; }
  int partner(int i) const { return (*this)[i].partner; }

  /// Matchings sorted by left endpoint.
  std::vector<Matching> matchings() const;
  int matching_count() const;
  bool matchless() const;

  /// Matchings numbered 1,2,3,... by first occurrence.
  std::string str() const;

  /// Label of each position under first-occurrence numbering (0 for signs).
  std::vector<int> labels() const;

  friend bool operator==(const Clan& a, const Clan& b) { return a.entries_ == b.entries_; }
  /// Lexicographic on canonical token sequences with + < - < 1 < 2 < ...
  friend std::strong_ordering operator<=>(const Clan& a, const Clan& b);

 private:
  std::vector<ClanEntry> entries_;
  int p_ = 0;
  int q_ = 0;
};

/// Per-position counts that drive the rank conditions. Index i of plus/minus
/// holds the count for the first i+1 positions; cross(i, j) is the count for
/// prefixes of length i+1 and j+1.
struct ClanStats {
  int length = 0;
  std::vector<int> plus;
  std::vector<int> minus;
  int n = 0;
  std::vector<int> cross_table;  // row-major n x n, meaningful for i < j

  int cross(int i, int j) const { return cross_table[static_cast<std::size_t>(i * n + j)]; }
};

/// All (p,q)-clans in Clan ordering.
std::vector<Clan> enumerate_clans(int p, int q);

/// Closed-form count: sum_k C(n,2k) (2k-1)!! C(n-2k, p-k).
std::uint64_t clan_count(int p, int q);

/// Sum over label pairs of j-i-#{label pairs s<i<t<j}, read off the string.
int length_by_labels(const Clan& c);
/// Sum over matchings of C(a,b) = b-a-#incoming matchings.
int length_by_crossings(const Clan& c);
/// Common value of the two length formulas.
int length(const Clan& c);

ClanStats stats(const Clan& c);

/// 0-based permutation fixing signs and swapping matched pairs.
std::vector<int> underlying_involution(const Clan& c);

/// The unique (p,q)-clan of maximal length pq.
Clan top_clan(int p, int q);

}  // namespace orbitslice
