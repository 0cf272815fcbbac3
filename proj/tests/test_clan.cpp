#include <set>

#include "doctest.h"
#include "orbitslice/clan.hpp"
#include "orbitslice/error.hpp"
#include "support.hpp"

using namespace orbitslice;
using testing::all_clans_brute;

namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    (void)Clan::parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse accepted " << text);
  return ErrorCode::BadToken;
}

}  // namespace

TEST_CASE("parse and print canonical strings") {
  CHECK(Clan::parse("1+12-2").str() == "1+12-2");
  CHECK(Clan::parse("2+21-1").str() == "1+12-2");
  CHECK(Clan::parse("1,+,1,2,-,2").str() == "1+12-2");
  CHECK(Clan::parse("1−221+").str() == "1-221+");
  const Clan c = Clan::parse("1+12-2");
  CHECK(c.p() == 3);
  CHECK(c.q() == 3);
  CHECK(c.matching_count() == 2);
  CHECK(c.is_left_end(0));
  CHECK(c.is_right_end(2));
  CHECK(c.partner(3) == 5);
}

TEST_CASE("labels past nine need the comma form") {
  std::string text;
  for (int k = 1; k <= 10; ++k) text += std::to_string(k) + ",";
  for (int k = 1; k <= 10; ++k) text += std::to_string(k) + (k < 10 ? "," : "");
  const Clan c = Clan::parse(text);
  CHECK(c.n() == 20);
  CHECK(c.matching_count() == 10);
  CHECK(c.str() == text);
  CHECK(Clan::parse(c.str()) == c);
}

TEST_CASE("malformed clans are rejected") {
  CHECK(parse_error("") == ErrorCode::EmptyInput);
  CHECK(parse_error("1+2") == ErrorCode::UnbalancedLabel);
  CHECK(parse_error("111") == ErrorCode::UnbalancedLabel);
  CHECK(parse_error("1x1") == ErrorCode::BadToken);
  CHECK(parse_error("1,,1") == ErrorCode::BadToken);
}

TEST_CASE("enumeration matches the closed-form count and a brute-force enumerator") {
  CHECK(enumerate_clans(1, 1).size() == 3);
  CHECK(enumerate_clans(2, 2).size() == 21);
  CHECK(enumerate_clans(3, 2).size() == 55);
  CHECK(enumerate_clans(3, 3).size() == 215);
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= 4; ++q) {
      if (p + q == 0) continue;
      CAPTURE(p);
      CAPTURE(q);
      const auto clans = enumerate_clans(p, q);
      CHECK(clans.size() == clan_count(p, q));
      std::set<std::string> a, b;
      for (const Clan& c : clans) a.insert(c.str());
      for (const Clan& c : all_clans_brute(p, q)) b.insert(c.str());
      CHECK(a == b);
      CHECK(a.size() == clans.size());
      CHECK(std::is_sorted(clans.begin(), clans.end()));
    }
  }
}

TEST_CASE("enumeration order puts + before - before labels") {
  const auto clans = enumerate_clans(1, 1);
  REQUIRE(clans.size() == 3);
  CHECK(clans[0].str() == "+-");
  CHECK(clans[1].str() == "-+");
  CHECK(clans[2].str() == "11");
}

TEST_CASE("length formulas agree with the definition") {
  CHECK(length(Clan::parse("1+212")) == 4);
  CHECK(length(Clan::parse("12+12")) == 5);
  CHECK(length(Clan::parse("1+-1+")) == 3);
  CHECK(length(Clan::parse("++--")) == 0);
  for (int n = 1; n <= 7; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (const Clan& c : enumerate_clans(p, n - p)) {
        CAPTURE(c.str());
        CHECK(length_by_labels(c) == testing::length_oracle(c));
        CHECK(length_by_crossings(c) == testing::length_oracle(c));
      }
    }
  }
}

TEST_CASE("top clan is the unique clan of length pq") {
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= 4; ++q) {
      if (p + q == 0) continue;
      const Clan top = top_clan(p, q);
      CHECK(length(top) == p * q);
      int count = 0;
      for (const Clan& c : enumerate_clans(p, q)) {
        CHECK(length(c) <= p * q);
        count += length(c) == p * q;
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("stats match direct counts on random clans") {
  std::mt19937 rng(1201);
  for (int trial = 0; trial < 300; ++trial) {
    const Clan c = testing::random_clan(rng, 1 + static_cast<int>(rng() % 9));
    CAPTURE(c.str());
    const ClanStats s = stats(c);
    CHECK(s.length == length(c));
    for (int i = 1; i <= c.n(); ++i) {
      CHECK(s.plus[i - 1] == testing::plus_count(c, i));
      CHECK(s.minus[i - 1] == testing::minus_count(c, i));
      for (int j = i + 1; j <= c.n(); ++j) CHECK(s.cross(i - 1, j - 1) == testing::cross_count(c, i, j));
    }
  }
}

TEST_CASE("underlying involution squares to the identity") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Clan c = testing::random_clan(rng, 1 + static_cast<int>(rng() % 10));
    const auto w = underlying_involution(c);
    for (int i = 0; i < c.n(); ++i) {
      CHECK(w[w[i]] == i);
      CHECK((w[i] == i) == c.is_sign(i));
    }
  }
}

TEST_CASE("canonical string round-trips and ordering is total") {
  std::mt19937 rng(5);
  std::vector<Clan> sample;
  for (int trial = 0; trial < 200; ++trial) sample.push_back(testing::random_clan(rng, 1 + static_cast<int>(rng() % 8)));
  for (const Clan& c : sample) CHECK(Clan::parse(c.str()) == c);
  for (const Clan& a : sample) {
    for (const Clan& b : sample) {
      CHECK(((a <=> b) == 0) == (a == b));
      CHECK((a < b) == (b > a));
    }
  }
}
