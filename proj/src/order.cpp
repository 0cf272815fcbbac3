#include "orbitslice/order.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "orbitslice/error.hpp"
#include "orbitslice/ideal.hpp"
#include "orbitslice/slice.hpp"

namespace orbitslice {
namespace {

class Editor {
 public:
  explicit Editor(const Clan& c) : e_(c.entries()) {}
  Editor& sign(int i, Slot s) {
    e_[static_cast<std::size_t>(i)] = {s, -1};
    return *this;
  }
  Editor& match(int a, int b) {
    e_[static_cast<std::size_t>(a)] = {Slot::Matched, b};
    e_[static_cast<std::size_t>(b)] = {Slot::Matched, a};
    return *this;
  }
  Clan done() { return Clan(std::move(e_)); }

 private:
  std::vector<ClanEntry> e_;
};

}  // namespace

std::vector<TranspositionMove> transpositions(const Clan& c) {
  std::vector<TranspositionMove> out;
  const int n = c.n();
  // Two signs.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (c.is_plus(i) && c.is_minus(j)) out.push_back({1, {i, j}, Editor(c).match(i, j).done()});
      if (c.is_minus(i) && c.is_plus(j)) out.push_back({2, {i, j}, Editor(c).match(i, j).done()});
    }
  }
  const auto ms = c.matchings();
  // A matching and a sign.
  for (const Matching& m : ms) {
    for (int k = m.right + 1; k < n; ++k) {
      if (c.is_sign(k)) {
        out.push_back({c.is_plus(k) ? 3 : 4, {m.left, m.right, k},
                       Editor(c).match(m.left, k).sign(m.right, c[k].slot).done()});
      }
    }
    for (int i = 0; i < m.left; ++i) {
      if (c.is_sign(i)) {
        out.push_back({c.is_plus(i) ? 5 : 6, {i, m.left, m.right},
                       Editor(c).match(i, m.right).sign(m.left, c[i].slot).done()});
      }
    }
  }
  // Two matchings.
  for (const Matching& a : ms) {
    for (const Matching& b : ms) {
      const int i = a.left, j = a.right, k = b.left, l = b.right;
      if (j < k) {  // 1122
        out.push_back({7, {i, j, k, l}, Editor(c).match(i, k).match(j, l).done()});
        out.push_back({8, {i, j, k, l}, Editor(c).match(i, l).sign(j, Slot::Plus).sign(k, Slot::Minus).done()});
        out.push_back({9, {i, j, k, l}, Editor(c).match(i, l).sign(j, Slot::Minus).sign(k, Slot::Plus).done()});
      } else if (i < k && k < j && j < l) {  // 1212 with a = (i,j), b = (k,l)
        out.push_back({10, {i, k, j, l}, Editor(c).match(i, l).match(k, j).done()});
      }
    }
  }
  return out;
}

std::vector<Clan> covers(const Clan& c) {
  const int target = length(c) + 1;
  std::vector<Clan> out;
  for (TranspositionMove& mv : transpositions(c)) {
    if (length(mv.result) == target) out.push_back(std::move(mv.result));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int t7_length_difference(const Clan& c, int i, int j, int k, int l) {
  int outer = 0;
  for (const Matching& m : c.matchings()) {
    if (m.left < i && j < m.right && m.right < k) ++outer;
    if (j < m.left && m.left < k && l < m.right) ++outer;
  }
  return 2 * (k - j) - 1 - 2 * outer;
}

ClanPoset::ClanPoset(int p, int q) : p_(p), q_(q), elements_(enumerate_clans(p, q)) {
  const std::size_t n = elements_.size();
  lengths_.resize(n);
  up_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    lengths_[k] = orbitslice::length(elements_[k]);
    index_.emplace(elements_[k].str(), static_cast<int>(k));
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (const Clan& c : covers(elements_[k])) up_[k].push_back(index_of(c));
  }
  // Up-sets, longest elements first.
  std::vector<int> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = static_cast<int>(k);
  std::stable_sort(order.begin(), order.end(), [this](int a, int b) { return lengths_[static_cast<std::size_t>(a)] > lengths_[static_cast<std::size_t>(b)]; });
  const std::size_t words = (n + 63) / 64;
  above_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (int k : order) {
    auto& bits = above_[static_cast<std::size_t>(k)];
    bits[static_cast<std::size_t>(k) / 64] |= std::uint64_t{1} << (k % 64);
    for (int u : up_[static_cast<std::size_t>(k)]) {
      const auto& ub = above_[static_cast<std::size_t>(u)];
      for (std::size_t w = 0; w < words; ++w) bits[w] |= ub[w];
    }
  }
}

int ClanPoset::index_of(const Clan& c) const {
  auto it = index_.find(c.str());
  if (it == index_.end() || c.p() != p_ || c.q() != q_) {
    throw Error(ErrorCode::MixedSignature, c.str() + " is not a (" + std::to_string(p_) + "," + std::to_string(q_) + ")-clan");
  }
  return it->second;
}

bool ClanPoset::leq(int a, int b) const {
  return (above_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1u;
}

std::size_t ClanPoset::edge_count() const {
  std::size_t total = 0;
  for (const auto& u : up_) total += u.size();
  return total;
}

std::shared_ptr<const ClanPoset> hasse(int p, int q) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const ClanPoset>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, q}];
  if (!slot) slot = std::make_shared<const ClanPoset>(p, q);
  return slot;
}

static void check_signature(const Clan& a, const Clan& b) {
  if (a.p() != b.p() || a.q() != b.q()) {
    throw Error(ErrorCode::MixedSignature, a.str() + " and " + b.str() + " have different signatures");
  }
}

bool leq(const Clan& a, const Clan& b) {
  check_signature(a, b);
  const auto poset = hasse(a.p(), a.q());
  return poset->leq(poset->index_of(a), poset->index_of(b));
}

bool leq_rank_oracle(const Clan& a, const Clan& b) {
  check_signature(a, b);
  return point_satisfies(base_point(a), b);
}

ClanInterval interval(const Clan& a, const Clan& b) {
  check_signature(a, b);
  const auto poset = hasse(a.p(), a.q());
  const int lo = poset->index_of(a), hi = poset->index_of(b);
  if (!poset->leq(lo, hi)) throw Error(ErrorCode::NotComparable, a.str() + " is not below " + b.str());
  ClanInterval out;
  std::vector<int> local(static_cast<std::size_t>(poset->size()), -1);
  for (int k = 0; k < poset->size(); ++k) {
    if (poset->leq(lo, k) && poset->leq(k, hi)) {
      local[static_cast<std::size_t>(k)] = static_cast<int>(out.elements.size());
      out.elements.push_back(poset->element(k));
    }
  }
  for (int k = 0; k < poset->size(); ++k) {
    if (local[static_cast<std::size_t>(k)] < 0) continue;
    for (int u : poset->up(k)) {
      if (local[static_cast<std::size_t>(u)] >= 0) out.edges.emplace_back(local[static_cast<std::size_t>(k)], local[static_cast<std::size_t>(u)]);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace orbitslice
