#include <set>

#include "doctest.h"
#include "orbitslice/analysis.hpp"
#include "orbitslice/error.hpp"
#include "orbitslice/interop.hpp"
#include "orbitslice/order.hpp"
#include "support.hpp"

using namespace orbitslice;

namespace {

struct ExpectedRow {
  std::string gamma;
  int length;
  std::set<std::string> maxsing;
};

// "(12+12, 5, {-+++-, +1-1+}, {})": the fourth field is not computed in-core.
std::vector<ExpectedRow> load_table(const std::string& text) {
  std::vector<ExpectedRow> rows;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ExpectedRow row;
    const auto c1 = line.find(", ");
    row.gamma = line.substr(1, c1 - 1);
    const auto c2 = line.find(", ", c1 + 2);
    row.length = std::stoi(line.substr(c1 + 2, c2 - c1 - 2));
    const auto open = line.find('{', c2), close = line.find('}', open);
    std::stringstream set(line.substr(open + 1, close - open - 1));
    std::string item;
    while (std::getline(set, item, ',')) {
      while (!item.empty() && item.front() == ' ') item.erase(item.begin());
      row.maxsing.insert(item);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("smoothness verdict for 123231 along 1+--+1") {
  const auto r = smooth_at(Clan::parse("123231"), Clan::parse("1+--+1"));
  CHECK_FALSE(r.smooth);
  CHECK(r.variety_dim == 3);
  CHECK(r.tangent_dim == 4);
  CHECK(r.radicality_caveat);
  CHECK(smooth_at(Clan::parse("123231"), Clan::parse("123231")).smooth);
}

TEST_CASE("dimension law on every comparable pair up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      const auto h = hasse(p, n - p);
      for (int g = 0; g < h->size(); ++g) {
        for (int a = 0; a < h->size(); ++a) {
          if (!h->leq(a, g)) continue;
          CAPTURE(h->element(g).str());
          CAPTURE(h->element(a).str());
          CHECK(variety_dimension(h->element(g), h->element(a)) == h->length(g) - h->length(a));
        }
      }
    }
  }
}

TEST_CASE("maximal singular orbits") {
  std::vector<std::string> ms;
  for (const Clan& c : maxsing(Clan::parse("12+12"))) ms.push_back(c.str());
  CHECK(ms == std::vector<std::string>{"+1-1+", "-+++-"});
  CHECK(maxsing(Clan::parse("1221")).empty());
  CHECK(maxsing(Clan::parse("11")).empty());
}

TEST_CASE("empty singular locus is equivalent to pattern avoidance") {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (const Clan& g : enumerate_clans(p, n - p)) {
        CAPTURE(g.str());
        CHECK(maxsing(g).empty() == mcgovern_smooth(g));
      }
    }
  }
}

TEST_CASE("singular table for (3,2) matches the fixture") {
  const auto expected = load_table(testing::fixture("singular_table_3_2.txt"));
  REQUIRE(expected.size() == 14);
  const auto rows = singularity_table(3, 2);
  REQUIRE(rows.size() == expected.size());
  std::map<std::string, const TableRow*> by_gamma;
  for (const auto& r : rows) by_gamma[r.gamma.str()] = &r;
  for (const auto& e : expected) {
    CAPTURE(e.gamma);
    REQUIRE(by_gamma.contains(e.gamma));
    const TableRow& r = *by_gamma[e.gamma];
    CHECK(r.length == e.length);
    std::set<std::string> got;
    for (const Clan& c : r.maxsing) got.insert(c.str());
    CHECK(got == e.maxsing);
  }
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k - 1].length >= rows[k].length);
  CHECK(format_tuple(rows[0]) == "(1+221, 5, {++1-1})");
}

TEST_CASE("interval isomorphism for the running example") {
  const auto es = find_interval_embeddings(Clan::parse("123231"), Clan::parse("1+-1"), Clan::parse("1221"));
  REQUIRE(!es.empty());
  for (const auto& e : es) {
    const IsoVerification v = verify_interval_iso(e);
    CHECK(v.verified());
    CHECK(v.variable_map.size() == static_cast<std::size_t>(free_variable_count(e.alpha)));
  }
  const auto self = find_interval_embeddings(Clan::parse("123231"), Clan::parse("1+--+1"), Clan::parse("123231"));
  REQUIRE(self.size() == 1);
  CHECK(verify_interval_iso(self[0]).verified());
}

TEST_CASE("interval isomorphism for small embeddings") {
  int checked = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      const auto big = enumerate_clans(p, n - p);
      for (int m = 1; m < n; ++m) {
        for (int sp = 0; sp <= std::min(m, p); ++sp) {
          if (m - sp > n - p) continue;
          const auto h = hasse(sp, m - sp);
          for (int g = 0; g < h->size(); ++g) {
            for (int a = 0; a < h->size(); ++a) {
              if (!h->leq(a, g)) continue;
              for (const Clan& theta : big) {
                for (const auto& e : find_interval_embeddings(theta, h->element(a), h->element(g))) {
                  CAPTURE(e.theta.str());
                  CAPTURE(e.beta.str());
                  CHECK(verify_interval_iso(e).verified());
                  ++checked;
                }
              }
            }
          }
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("upper order ideal checks") {
  const PairPredicate singular = [](const Clan& a, const Clan& g) { return !smooth_at(g, a).smooth; };
  const auto r22 = upper_ideal_check(2, 2, singular);
  CHECK(r22.violations.empty());
  CHECK(r22.pairs_checked > 0);
  // Singular pairs first appear at n = 4, so only (3,2) exercises embeddings.
  const auto r32 = upper_ideal_check(3, 2, singular);
  CHECK(r32.violations.empty());
  CHECK(r32.embeddings_checked > 0);
  const auto none = upper_ideal_check(2, 2, [](const Clan&, const Clan&) { return false; });
  CHECK(none.violations.empty());
  CHECK(none.embeddings_checked == 0);
  const auto excess = upper_ideal_check(2, 2, [](const Clan& a, const Clan& g) {
    const auto r = smooth_at(g, a);
    return r.tangent_dim - r.variety_dim >= 1;
  });
  CHECK(excess.violations.empty());
  // Predicates that are not downward closed get caught.
  CHECK_FALSE(upper_ideal_check(1, 1, [](const Clan& a, const Clan&) { return a.str() == "11"; }).violations.empty());
  const auto top_only = upper_ideal_check(2, 2, [](const Clan& a, const Clan& g) { return a == g && g.str() == "1221"; });
  CHECK_FALSE(top_only.violations.empty());
}
