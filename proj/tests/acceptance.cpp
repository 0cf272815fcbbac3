// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is nonzero only for failures outside kKnownDeviations.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "orbitslice/analysis.hpp"
#include "orbitslice/error.hpp"
#include "orbitslice/interop.hpp"
#include "orbitslice/order.hpp"
#include "orbitslice/patterns.hpp"
#include "orbitslice/slice.hpp"
#include "support.hpp"

using namespace orbitslice;
using testing::fixture;
using testing::normalize;

namespace {

// Runtime limits in seconds.
constexpr double kLimitFixtures = 1.0;
constexpr double kLimitIdeal = 1.0;
constexpr double kLimitTable = 300.0;
constexpr double kLimitMcGovern = 300.0;
constexpr double kLimitDimension = 300.0;
constexpr double kLimitDeterminant = 300.0;
constexpr double kLimitOrder = 300.0;
constexpr double kLimitTranspositions = 60.0;
constexpr double kLimitIso = 300.0;
constexpr double kLimitUpperIdeal = 300.0;
constexpr double kLimitZ64 = 1.0;

// Criteria whose failure is analyzed and expected. Only criterion 1 is
// listed: the displayed inverse of M_{1+--+1} has 1/2 at (3,5) where the
// exact inverse has 1.
const std::set<int> kKnownDeviations = {1};

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<Outcome()> run;
};

std::string one_line(const std::vector<int>& w) {
  std::string s;
  for (int v : w) s += std::to_string(v + 1);
  return s;
}

Outcome fixtures() {
  Outcome o;
  std::vector<std::string> bad;
  const std::pair<const char*, const char*> ws[] = {{"122133", "125436"}, {"1+12-2", "124365"}, {"1+21-2", "123465"}};
  for (auto [clan, w] : ws) {
    if (one_line(w_alpha(Clan::parse(clan))) != w) bad.push_back(std::string("w_") + clan);
  }
  const std::pair<const char*, const char*> mats[] = {
      {"1+12-2", "m_1p12m2.tex"}, {"1+21-2", "m_1p21m2.tex"}, {"123123", "m_123123.tex"}, {"1+--+1", "m_1pmmp1.tex"}};
  for (auto [clan, file] : mats) {
    if (normalize(latex_matrix(generic_matrix(Clan::parse(clan)).to_polynomials())) != normalize(fixture(file))) {
      bad.push_back(std::string("M_") + clan);
    }
  }
  const Clan alpha = Clan::parse("1+--+1");
  const auto data = slice_data(alpha);
  if (normalize(latex_matrix(aux_matrix(data->inv, 2, 4, alpha.q()))) != normalize(fixture("m_1pmmp1_aux_2_4.tex"))) {
    bad.push_back("M^[2;4]");
  }
  const bool exact = is_identity(data->matrix * data->inv) && is_identity(data->inv * data->matrix);
  if (normalize(latex_matrix(data->inv)) != normalize(fixture("m_1pmmp1_inverse.tex"))) {
    bad.push_back(std::string("M_1+--+1^{-1} (entry (3,5): computed ") + data->inv(2, 4).to_string() +
                  ", display 1/2; M*M^{-1}=I " + (exact ? "verified" : "FAILED") + ")");
  }
  o.pass = bad.empty();
  o.detail = "3 permutations, 6 matrices";
  for (const auto& b : bad) o.detail += "; mismatch " + b;
  return o;
}

Outcome ideal_example() {
  const auto I = generators(Clan::parse("123231"), Clan::parse("1+--+1"));
  Outcome o;
  const std::string want = "z_{3,2}z_{5,5}+z_{4,2}z_{5,6}";
  o.pass = I.generators.size() == 1 && I.generators[0].primitive().to_string() == want;
  o.detail = std::to_string(I.generators.size()) + " generator(s)";
  if (!I.generators.empty()) o.detail += ": " + I.generators[0].to_string();
  return o;
}

Outcome table() {
  std::map<std::string, std::pair<int, std::set<std::string>>> expected;
  std::stringstream in(fixture("singular_table_3_2.txt"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(", "), c2 = line.find(", ", c1 + 2);
    const auto open = line.find('{', c2), close = line.find('}', open);
    std::set<std::string> ms;
    std::stringstream set(line.substr(open + 1, close - open - 1));
    std::string item;
    while (std::getline(set, item, ',')) ms.insert(item.substr(item.find_first_not_of(' ')));
    expected[line.substr(1, c1 - 1)] = {std::stoi(line.substr(c1 + 2, c2 - c1 - 2)), ms};
  }
  const auto rows = singularity_table(3, 2);
  Outcome o;
  int matched = 0;
  for (const auto& r : rows) {
    std::set<std::string> ms;
    for (const Clan& c : r.maxsing) ms.insert(c.str());
    const auto it = expected.find(r.gamma.str());
    if (it != expected.end() && it->second.first == r.length && it->second.second == ms) {
      ++matched;
    } else {
      o.pass = false;
      o.detail += " unexpected " + format_tuple(r) + ";";
    }
  }
  o.pass = o.pass && matched == static_cast<int>(expected.size()) && rows.size() == expected.size();
  o.detail = std::to_string(matched) + "/" + std::to_string(expected.size()) + " rows match" + o.detail;
  return o;
}

Outcome mcgovern() {
  std::size_t checked = 0, bad = 0;
  auto check = [&](const Clan& g) {
    ++checked;
    if (maxsing(g).empty() != mcgovern_smooth(g)) ++bad;
  };
  for (int n = 1; n <= 5; ++n)
    for (int p = 0; p <= n; ++p)
      for (const Clan& g : enumerate_clans(p, n - p)) check(g);
  const std::size_t small = checked;
  std::mt19937 rng(33);
  auto big = enumerate_clans(3, 3);
  std::shuffle(big.begin(), big.end(), rng);
  for (std::size_t k = 0; k < 40; ++k) check(big[k]);
  return {bad == 0, std::to_string(small) + " clans with p+q<=5 and " + std::to_string(checked - small) +
                        " sampled (3,3) clans, " + std::to_string(bad) + " discrepancies"};
}

Outcome dimension_law() {
  std::size_t pairs = 0, bad = 0, clans = 0, bad_vars = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      const auto h = hasse(p, n - p);
      for (int g = 0; g < h->size(); ++g) {
        for (int a = 0; a < h->size(); ++a) {
          if (!h->leq(a, g)) continue;
          ++pairs;
          try {
            variety_dimension(h->element(g), h->element(a));
          } catch (const Error&) {
            ++bad;
          }
        }
      }
    }
  }
  for (int n = 1; n <= 7; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (const Clan& c : enumerate_clans(p, n - p)) {
        ++clans;
        bad_vars += free_variable_count(c) != c.p() * c.q() - length(c);
      }
    }
  }
  return {bad == 0 && bad_vars == 0, std::to_string(pairs) + " pairs (" + std::to_string(bad) + " mismatches), " +
                                         std::to_string(clans) + " clans (" + std::to_string(bad_vars) +
                                         " variable-count mismatches)"};
}

Outcome determinants() {
  std::size_t det_checked = 0, det_bad = 0, inv_checked = 0, inv_bad = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (const Clan& c : enumerate_clans(p, n - p)) {
        ++det_checked;
        try {
          if (determinant(c) == 0) ++det_bad;
        } catch (const Error&) {
          ++det_bad;
        }
        if (n > 5) continue;
        ++inv_checked;
        const auto data = slice_data(c);
        if (!is_identity(data->matrix * data->inv)) ++inv_bad;
      }
    }
  }
  return {det_bad == 0 && inv_bad == 0, std::to_string(det_checked) + " constant determinants (" +
                                            std::to_string(det_bad) + " bad), " + std::to_string(inv_checked) +
                                            " inverses (" + std::to_string(inv_bad) + " bad)"};
}

Outcome order_equivalence() {
  std::size_t pairs = 0, bad = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      const auto clans = enumerate_clans(p, n - p);
      for (const Clan& a : clans) {
        for (const Clan& b : clans) {
          ++pairs;
          bad += leq(a, b) != leq_rank_oracle(a, b);
        }
      }
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " discrepancies"};
}

Outcome transpositions_check() {
  std::size_t moves = 0, t7 = 0, bad = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (const Clan& c : enumerate_clans(p, n - p)) {
        const int lc = length(c);
        for (const auto& mv : transpositions(c)) {
          ++moves;
          if (length(mv.result) <= lc) ++bad;
          if (mv.rule == 7) {
            ++t7;
            const auto& x = mv.positions;
            if (t7_length_difference(c, x[0], x[1], x[2], x[3]) != length(mv.result) - lc) ++bad;
          }
        }
      }
    }
  }
  return {bad == 0, std::to_string(moves) + " moves (" + std::to_string(t7) + " of type T7), " + std::to_string(bad) +
                        " failures"};
}

Outcome interval_iso() {
  std::size_t verified = 0, failed = 0, exhausted = 0;
  auto verify = [&](const IntervalEmbedding& e) {
    try {
      if (verify_interval_iso(e).verified()) ++verified;
      else ++failed;
    } catch (const Error& err) {
      if (err.code() == ErrorCode::ResourceLimit) ++exhausted;
      else ++failed;
    }
  };
  const auto example = find_interval_embeddings(Clan::parse("123231"), Clan::parse("1+--+1"), Clan::parse("123231"));
  const auto intro = find_interval_embeddings(Clan::parse("123231"), Clan::parse("1+-1"), Clan::parse("1221"));
  for (const auto& e : example) verify(e);
  for (const auto& e : intro) verify(e);
  const bool examples_ok = failed == 0 && exhausted == 0 && !example.empty() && !intro.empty();
  for (int n = 2; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      const auto thetas = enumerate_clans(p, n - p);
      for (int m = 1; m <= std::min(4, n); ++m) {
        for (int sp = 0; sp <= std::min(m, p); ++sp) {
          if (m - sp > n - p) continue;
          const auto h = hasse(sp, m - sp);
          for (int g = 0; g < h->size(); ++g) {
            for (int a = 0; a < h->size(); ++a) {
              if (!h->leq(a, g)) continue;
              for (const Clan& theta : thetas) {
                for (const auto& e : find_interval_embeddings(theta, h->element(a), h->element(g))) verify(e);
              }
            }
          }
        }
      }
    }
  }
  return {examples_ok && failed == 0 && exhausted == 0,
          std::to_string(verified) + " verified, " + std::to_string(failed) + " failed, " + std::to_string(exhausted) +
              " budget exhausted"};
}

Outcome upper_ideal() {
  const PairPredicate singular = [](const Clan& a, const Clan& g) { return !smooth_at(g, a).smooth; };
  const auto r22 = upper_ideal_check(2, 2, singular);
  const auto r32 = upper_ideal_check(3, 2, singular);
  const std::size_t v = r22.violations.size() + r32.violations.size();
  return {v == 0, "(2,2): " + std::to_string(r22.pairs_checked) + " pairs; (3,2): " + std::to_string(r32.pairs_checked) +
                      " pairs, " + std::to_string(r32.embeddings_checked) + " embeddings; " + std::to_string(v) +
                      " violations"};
}

Outcome z64() {
  const auto data = pair_data(Clan::parse("12-+12"), Clan::parse("-1221+"));
  bool found = false;
  for (const Polynomial& g : data->gb.polynomials()) found = found || g.to_string() == "z_{6,4}";
  std::string basis;
  for (const Polynomial& g : data->gb.polynomials()) basis += (basis.empty() ? "" : ", ") + g.to_string();
  return {found, "reduced basis {" + basis + "}"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "fixture exactness", kLimitFixtures, fixtures},
      {2, "single generator for (123231, 1+--+1)", kLimitIdeal, ideal_example},
      {3, "singular table (3,2)", kLimitTable, table},
      {4, "pattern criterion for smoothness", kLimitMcGovern, mcgovern},
      {5, "dimension law", kLimitDimension, dimension_law},
      {6, "constant determinants and exact inverses", kLimitDeterminant, determinants},
      {7, "cover order equals rank order", kLimitOrder, order_equivalence},
      {8, "transpositions lengthen; T7 formula", kLimitTranspositions, transpositions_check},
      {9, "interval isomorphisms", kLimitIso, interval_iso},
      {10, "singular pairs form an upper order ideal", kLimitUpperIdeal, upper_ideal},
      {11, "z_{6,4} in the reduced basis of (12-+12, -1221+)", kLimitZ64, z64},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit;
    const bool pass = o.pass && in_time;
    std::string note;
    if (!in_time) note = " [over time limit]";
    if (!pass && kKnownDeviations.contains(c.id)) note += " [known deviation]";
    std::printf("%s %2d %s (%.2f s, limit %.0f s): %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                o.detail.c_str(), note.c_str());
    if (!pass && !kKnownDeviations.contains(c.id)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
