#include <random>

#include "doctest.h"
#include "orbitslice/error.hpp"
#include "orbitslice/order.hpp"
#include "orbitslice/patterns.hpp"
#include "support.hpp"

using namespace orbitslice;

namespace {

/// The clan seen through `indices`, canonicalized, or empty if a matching
/// leaves the index set.
std::optional<Clan> restrict_to(const Clan& big, const std::vector<int>& indices) {
  std::vector<ClanEntry> e;
  for (int i : indices) {
    if (big.is_sign(i)) {
      e.push_back(big[i]);
      continue;
    }
    const auto at = std::find(indices.begin(), indices.end(), big.partner(i));
    if (at == indices.end()) return std::nullopt;
    e.push_back({Slot::Matched, static_cast<int>(at - indices.begin())});
  }
  return Clan(e);
}

/// Every increasing k-subset of {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("the eight smoothness patterns") {
  std::vector<std::string> names;
  for (const Clan& c : mcgovern_patterns()) names.push_back(c.str());
  CHECK(names == std::vector<std::string>{"1+-1", "1-+1", "1212", "1+221", "1-221", "122+1", "122-1", "122331"});
  CHECK(mcgovern_smooth(Clan::parse("+-")));
  CHECK(mcgovern_smooth(Clan::parse("11")));
  CHECK_FALSE(mcgovern_smooth(Clan::parse("1+-1")));
  CHECK_FALSE(mcgovern_smooth(Clan::parse("12+12")));
  CHECK(mcgovern_smooth(Clan::parse("+-+-")));
}

TEST_CASE("inclusion agrees with exhaustive search") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 400; ++trial) {
    const Clan big = testing::random_clan(rng, 2 + static_cast<int>(rng() % 6));
    const Clan small = testing::random_clan(rng, 1 + static_cast<int>(rng() % std::min(4, big.n())));
    CAPTURE(big.str());
    CAPTURE(small.str());
    std::vector<std::vector<int>> hits;
    for (const auto& s : subsets(big.n(), small.n())) {
      const auto r = restrict_to(big, s);
      if (r && *r == small) hits.push_back(s);
    }
    CHECK(all_witnesses(big, small) == hits);
    const auto w = includes(big, small);
    CHECK(w.has_value() == !hits.empty());
    if (w) CHECK(*w == hits.front());
    for (const auto& h : hits) CHECK(is_witness(big, small, h));
  }
}

TEST_CASE("completion map") {
  CHECK(phi(Clan::parse("1+-1"), Clan::parse("123231"), std::vector<int>{0, 1, 3, 5}).str() == "1+2-21");
  CHECK(phi(Clan::parse("1221"), Clan::parse("123231"), std::vector<int>{0, 1, 3, 5}) == Clan::parse("123231"));
  try {
    (void)phi(Clan::parse("+-"), Clan::parse("1212"), std::vector<int>{0, 1});
    FAIL("expected IllFormedCompletion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllFormedCompletion);
  }
  for (const std::vector<int>& bad : {std::vector<int>{1, 0}, std::vector<int>{0}, std::vector<int>{0, 9}}) {
    try {
      (void)phi(Clan::parse("+-"), Clan::parse("1212"), bad);
      FAIL("expected BadIndices");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadIndices);
    }
  }
}

TEST_CASE("interval embeddings of the running example") {
  const auto es = find_interval_embeddings(Clan::parse("123231"), Clan::parse("1+-1"), Clan::parse("1221"));
  REQUIRE(es.size() == 2);
  CHECK(es[0].indices == std::vector<int>{0, 1, 3, 5});
  CHECK(es[0].beta.str() == "1+2-21");
  CHECK(es[1].indices == std::vector<int>{0, 2, 4, 5});
  CHECK(es[1].beta.str() == "12+2-1");
  for (const auto& e : es) CHECK(e.length_diff == 1);
  const auto full = find_interval_embeddings(Clan::parse("123231"), Clan::parse("1+--+1"), Clan::parse("123231"));
  REQUIRE(full.size() == 1);
  CHECK(full[0].indices == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("found embeddings satisfy the containment conditions") {
  std::mt19937 rng(17);
  int seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 3), q = 1 + static_cast<int>(rng() % 2);
    const auto big = enumerate_clans(p, q);
    const Clan theta = big[rng() % big.size()];
    const int sp = static_cast<int>(rng() % (p + 1)), sq = static_cast<int>(rng() % (q + 1));
    if (sp + sq == 0) continue;
    const auto small = enumerate_clans(sp, sq);
    const Clan a = small[rng() % small.size()], g = small[rng() % small.size()];
    if (!leq(a, g)) continue;
    const auto found = find_interval_embeddings(theta, a, g);
    const auto mere = find_mere_embeddings(theta, a, g);
    CHECK(found.size() <= mere.size());
    for (const auto& e : found) {
      ++seen;
      CHECK(interval_contains(a, g, e.beta, theta, e.indices));
      CHECK(length(theta) - length(e.beta) == length(g) - length(a));
      CHECK(leq(e.beta, theta));
      CHECK(is_witness(theta, g, e.indices));
      CHECK(is_witness(e.beta, a, e.indices));
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("an interval embeds in itself") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Clan g = testing::random_clan(rng, 2 + static_cast<int>(rng() % 4));
    const auto all = enumerate_clans(g.p(), g.q());
    const Clan a = all[rng() % all.size()];
    if (!leq(a, g)) continue;
    std::vector<int> id(static_cast<std::size_t>(g.n()));
    std::iota(id.begin(), id.end(), 0);
    CHECK(interval_contains(a, g, a, g, id));
  }
}
