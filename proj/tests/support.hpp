#pragma once

// Shared helpers for the test binaries: seeded generators, fixture loading and
// brute-force oracles that do not go through the library's own algorithms.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbitslice/clan.hpp"
#include "orbitslice/matrix.hpp"
#include "orbitslice/polynomial.hpp"

namespace testing {

using namespace orbitslice;

inline std::string fixture(const std::string& name) {
  std::ifstream in(std::string(ORBITSLICE_FIXTURES) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Per-line trim, trailing blank lines dropped.
inline std::string normalize(const std::string& text) {
  std::stringstream in(text);
  std::string line, out;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    const auto a = line.find_first_not_of(" \t\r");
    const auto b = line.find_last_not_of(" \t\r");
    lines.push_back(a == std::string::npos ? "" : line.substr(a, b - a + 1));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (const auto& l : lines) out += l + "\n";
  return out;
}

/// Uniform-ish random clan on n positions: a random partial matching, signs
/// on the rest.
inline Clan random_clan(std::mt19937& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int pairs = std::uniform_int_distribution<int>(0, n / 2)(rng);
  std::vector<ClanEntry> e(static_cast<std::size_t>(n));
  for (int k = 0; k < pairs; ++k) {
    const int a = order[2 * k], b = order[2 * k + 1];
    e[a] = {Slot::Matched, b};
    e[b] = {Slot::Matched, a};
  }
  for (int k = 2 * pairs; k < n; ++k) e[order[k]] = {rng() % 2 ? Slot::Plus : Slot::Minus, -1};
  return Clan(e);
}

inline Clan random_clan_pq(std::mt19937& rng, int p, int q) {
  for (;;) {
    Clan c = random_clan(rng, p + q);
    if (c.p() == p && c.q() == q) return c;
  }
}

/// Every (p,q)-clan by recursion over the first free position; order is not
/// canonical.
inline std::vector<Clan> all_clans_brute(int p, int q) {
  std::vector<ClanEntry> e(static_cast<std::size_t>(p + q), ClanEntry{Slot::Plus, -1});
  std::vector<std::vector<ClanEntry>> raw;
  std::vector<Clan> out;
  struct Rec {
    static void go(std::vector<ClanEntry>& e, int pos, int p, int q, std::vector<std::vector<ClanEntry>>& raw) {
      const int n = static_cast<int>(e.size());
      while (pos < n && e[pos].slot == Slot::Matched && e[pos].partner < pos) ++pos;
      if (pos == n) {
        if (p == 0 && q == 0) raw.push_back(e);
        return;
      }
      if (p > 0) {
        e[pos] = {Slot::Plus, -1};
        go(e, pos + 1, p - 1, q, raw);
      }
      if (q > 0) {
        e[pos] = {Slot::Minus, -1};
        go(e, pos + 1, p, q - 1, raw);
      }
      if (p > 0 && q > 0) {
        for (int b = pos + 1; b < n; ++b) {
          if (e[b].slot == Slot::Matched && e[b].partner < b) continue;
          e[pos] = {Slot::Matched, b};
          e[b] = {Slot::Matched, pos};
          go(e, pos + 1, p - 1, q - 1, raw);
          e[b] = {Slot::Plus, -1};
        }
      }
      e[pos] = {Slot::Plus, -1};
    }
  };
  Rec::go(e, 0, p, q, raw);
  for (auto& r : raw) out.emplace_back(r);
  return out;
}

/// Length straight from the definition: sum over matchings (a<b) of
/// b - a - #{(c<d) : c < a < d < b}.
inline int length_oracle(const Clan& c) {
  const auto ms = c.matchings();
  int total = 0;
  for (const auto& m : ms) {
    int incoming = 0;
    for (const auto& o : ms) incoming += o.left < m.left && m.left < o.right && o.right < m.right;
    total += m.right - m.left - incoming;
  }
  return total;
}

/// gamma(i;+) for a 1-based prefix length i.
inline int plus_count(const Clan& c, int i) {
  int k = 0;
  for (int t = 0; t < i; ++t) k += c.is_plus(t) || (c.is_left_end(t) && c.partner(t) < i);
  return k;
}
inline int minus_count(const Clan& c, int i) {
  int k = 0;
  for (int t = 0; t < i; ++t) k += c.is_minus(t) || (c.is_left_end(t) && c.partner(t) < i);
  return k;
}
/// gamma(i;j): matchings (a<b) with a <= i < j < b, 1-based.
inline int cross_count(const Clan& c, int i, int j) {
  int k = 0;
  for (const auto& m : c.matchings()) k += m.left + 1 <= i && m.right + 1 > j;
  return k;
}

/// Determinant by the Leibniz formula.
inline Rational leibniz_det(const RationalMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    Rational term = inversions % 2 ? -1 : 1;
    for (int r = 0; r < n && term != 0; ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank by textbook Gaussian elimination over Q.
inline int gauss_rank(RationalMatrix m) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m(r, c) != 0) pivot = r;
    if (pivot < 0) continue;
    for (int k = 0; k < m.cols(); ++k) std::swap(m(rank, k), m(pivot, k));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(rank, c);
      for (int k = 0; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

inline std::vector<Rational> random_point(std::mt19937& rng, int size, int range = 5) {
  std::vector<Rational> pt;
  for (int k = 0; k < size; ++k) pt.emplace_back(std::uniform_int_distribution<int>(-range, range)(rng));
  return pt;
}

}  // namespace testing
