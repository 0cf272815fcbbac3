#include "orbitslice/clan.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#include "orbitslice/error.hpp"

namespace orbitslice {

Clan::Clan(std::vector<ClanEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::EmptyInput, "clan has no positions");
  const int size = n();
  int plus = 0, minus = 0, matched = 0;
  for (int i = 0; i < size; ++i) {
    const ClanEntry& e = entries_[static_cast<std::size_t>(i)];
    switch (e.slot) {
      case Slot::Plus: ++plus; break;
      case Slot::Minus: ++minus; break;
      case Slot::Matched: {
        const int j = e.partner;
        if (j < 0 || j >= size || j == i || entries_[static_cast<std::size_t>(j)].slot != Slot::Matched ||
            entries_[static_cast<std::size_t>(j)].partner != i) {
          throw Error(ErrorCode::UnbalancedLabel, "position " + std::to_string(i + 1) + " has no valid partner");
        }
        ++matched;
        break;
      }
    }
  }
  p_ = plus + matched / 2;
  q_ = minus + matched / 2;
}

int Clan::matching_count() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                        [](const ClanEntry& e) { return e.slot == Slot::Matched; })) /
         2;
}

namespace {

int token_rank(const ClanEntry& e, int label) {
  switch (e.slot) {
    case Slot::Plus: return 0;
    case Slot::Minus: return 1;
    case Slot::Matched: return 1 + label;
  }
  return 0;
}

Clan from_tokens(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw Error(ErrorCode::EmptyInput, "empty clan string");
  std::vector<ClanEntry> entries(tokens.size());
  std::map<long, std::vector<int>> occurrences;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (t == "+") {
      entries[i].slot = Slot::Plus;
    } else if (t == "-") {
      entries[i].slot = Slot::Minus;
    } else {
      long label = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), label);
      if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || label <= 0) {
        throw Error(ErrorCode::BadToken, "unrecognized token '" + t + "'");
      }
      entries[i].slot = Slot::Matched;
      occurrences[label].push_back(static_cast<int>(i));
    }
  }
  for (const auto& [label, where] : occurrences) {
    if (where.size() != 2) {
      throw Error(ErrorCode::UnbalancedLabel,
                  "label " + std::to_string(label) + " occurs " + std::to_string(where.size()) + " times");
    }
    entries[static_cast<std::size_t>(where[0])].partner = where[1];
    entries[static_cast<std::size_t>(where[1])].partner = where[0];
  }
  return Clan(std::move(entries));
}

}  // namespace

Clan Clan::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  // Normalize U+2212 (e2 88 92) to '-'.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xe2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
    } else {
      s.push_back(text[i]);
    }
  }
  std::vector<std::string> tokens;
  if (s.find(',') != std::string::npos) {
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) tokens.push_back(tok);
    if (!s.empty() && s.back() == ',') tokens.emplace_back();
  } else {
    for (char ch : s) tokens.emplace_back(1, ch);
  }
  return from_tokens(tokens);
}

std::vector<Matching> Clan::matchings() const {
  std::vector<Matching> out;
  for (int i = 0; i < n(); ++i) {
    if (is_left_end(i)) out.push_back({i, partner(i)});
  }
  return out;
}

bool Clan::matchless() const {
  return std::none_of(entries_.begin(), entries_.end(), [](const ClanEntry& e) { return e.slot == Slot::Matched; });
}

std::vector<int> Clan::labels() const {
  std::vector<int> out(entries_.size(), 0);
  int next = 1;
  for (int i = 0; i < n(); ++i) {
    if (is_left_end(i)) {
      out[static_cast<std::size_t>(i)] = next;
      out[static_cast<std::size_t>(partner(i))] = next;
      ++next;
    }
  }
  return out;
}

std::string Clan::str() const {
  const auto lab = labels();
  const bool delimited = *std::max_element(lab.begin(), lab.end()) >= 10;
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (delimited && i > 0) out.push_back(',');
    switch ((*this)[i].slot) {
      case Slot::Plus: out.push_back('+'); break;
      case Slot::Minus: out.push_back('-'); break;
      case Slot::Matched: out += std::to_string(lab[static_cast<std::size_t>(i)]); break;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Clan& a, const Clan& b) {
  const auto la = a.labels();
  const auto lb = b.labels();
  const int m = std::min(a.n(), b.n());
  for (int i = 0; i < m; ++i) {
    const int ra = token_rank(a[i], la[static_cast<std::size_t>(i)]);
    const int rb = token_rank(b[i], lb[static_cast<std::size_t>(i)]);
    if (ra != rb) return ra <=> rb;
  }
  return a.n() <=> b.n();
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t double_factorial_odd(int m) {  // (2k-1)!! with m = 2k-1, m <= 0 gives 1
  std::uint64_t r = 1;
  for (int i = m; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

void extend(std::vector<ClanEntry>& cur, int pos, int plus_left, int minus_left, int pairs_left,
            std::vector<Clan>& out) {
  const int n = static_cast<int>(cur.size());
  while (pos < n && cur[static_cast<std::size_t>(pos)].slot == Slot::Matched &&
         cur[static_cast<std::size_t>(pos)].partner >= 0) {
    ++pos;
  }
  if (pos == n) {
    if (plus_left == 0 && minus_left == 0 && pairs_left == 0) out.emplace_back(cur);
    return;
  }
  ClanEntry& e = cur[static_cast<std::size_t>(pos)];
  if (plus_left > 0) {
    e = {Slot::Plus, -1};
    extend(cur, pos + 1, plus_left - 1, minus_left, pairs_left, out);
  }
  if (minus_left > 0) {
    e = {Slot::Minus, -1};
    extend(cur, pos + 1, plus_left, minus_left - 1, pairs_left, out);
  }
  if (pairs_left > 0) {
    for (int j = pos + 1; j < n; ++j) {
      ClanEntry& f = cur[static_cast<std::size_t>(j)];
      if (f.slot == Slot::Matched && f.partner >= 0) continue;
      e = {Slot::Matched, j};
      f = {Slot::Matched, pos};
      extend(cur, pos + 1, plus_left, minus_left, pairs_left - 1, out);
      f = {Slot::Matched, -1};
    }
  }
  e = {Slot::Matched, -1};
}

}  // namespace

std::uint64_t clan_count(int p, int q) {
  const int n = p + q;
  std::uint64_t total = 0;
  for (int k = 0; 2 * k <= n && k <= std::min(p, q); ++k) {
    total += binomial(n, 2 * k) * double_factorial_odd(2 * k - 1) * binomial(n - 2 * k, p - k);
  }
  return total;
}

std::vector<Clan> enumerate_clans(int p, int q) {
  std::vector<Clan> out;
  if (p < 0 || q < 0 || p + q < 1) return out;
  for (int k = 0; k <= std::min(p, q); ++k) {
    std::vector<ClanEntry> cur(static_cast<std::size_t>(p + q), ClanEntry{Slot::Matched, -1});
    extend(cur, 0, p - k, q - k, k, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int length_by_labels(const Clan& c) {
  // Works directly on the label string: a pair is two equal labels.
  const auto lab = c.labels();
  const int n = c.n();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    if (lab[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = i + 1; j < n; ++j) {
      if (lab[static_cast<std::size_t>(j)] == lab[static_cast<std::size_t>(i)]) pairs.emplace_back(i, j);
    }
  }
  int total = 0;
  for (auto [i, j] : pairs) {
    int nested_across = 0;
    for (auto [s, t] : pairs) {
      if (s < i && i < t && t < j) ++nested_across;
    }
    total += j - i - nested_across;
  }
  return total;
}

int length_by_crossings(const Clan& c) {
  const auto ms = c.matchings();
  int total = 0;
  for (const Matching& m : ms) {
    int incoming = 0;
    for (const Matching& other : ms) {
      if (other.left < m.left && m.left < other.right && other.right < m.right) ++incoming;
    }
    total += m.right - m.left - incoming;
  }
  return total;
}

int length(const Clan& c) {
  const int a = length_by_labels(c);
  const int b = length_by_crossings(c);
  if (a != b) throw std::logic_error("length formulas disagree on " + c.str());
  return a;
}

ClanStats stats(const Clan& c) {
  ClanStats s;
  s.n = c.n();
  s.length = length(c);
  s.plus.assign(static_cast<std::size_t>(s.n), 0);
  s.minus.assign(static_cast<std::size_t>(s.n), 0);
  s.cross_table.assign(static_cast<std::size_t>(s.n * s.n), 0);
  int plus = 0, minus = 0, closed = 0;
  for (int i = 0; i < s.n; ++i) {
    if (c.is_plus(i)) ++plus;
    if (c.is_minus(i)) ++minus;
    if (c.is_right_end(i)) ++closed;  // both endpoints now inside the prefix
    s.plus[static_cast<std::size_t>(i)] = plus + closed;
    s.minus[static_cast<std::size_t>(i)] = minus + closed;
  }
  const auto ms = c.matchings();
  for (int i = 0; i < s.n; ++i) {
    for (int j = i + 1; j < s.n; ++j) {
      int count = 0;
      for (const Matching& m : ms) {
        if (m.left <= i && m.right > j) ++count;
      }
      s.cross_table[static_cast<std::size_t>(i * s.n + j)] = count;
    }
  }
  return s;
}

std::vector<int> underlying_involution(const Clan& c) {
  std::vector<int> perm(static_cast<std::size_t>(c.n()));
  for (int i = 0; i < c.n(); ++i) perm[static_cast<std::size_t>(i)] = c.is_matched(i) ? c.partner(i) : i;
  return perm;
}

Clan top_clan(int p, int q) {
  // 1 2 ... k (signs) k ... 2 1 with the surplus signs in the middle.
  const int k = std::min(p, q);
  const int n = p + q;
  std::vector<ClanEntry> e(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i) {
    e[static_cast<std::size_t>(i)] = {Slot::Matched, n - 1 - i};
    e[static_cast<std::size_t>(n - 1 - i)] = {Slot::Matched, i};
  }
  const Slot surplus = p > q ? Slot::Plus : Slot::Minus;
  for (int i = k; i < n - k; ++i) e[static_cast<std::size_t>(i)] = {surplus, -1};
  return Clan(std::move(e));
}

}  // namespace orbitslice
