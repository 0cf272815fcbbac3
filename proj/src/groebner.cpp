#include "orbitslice/groebner.hpp"

#include <algorithm>
#include <bit>

#include "orbitslice/error.hpp"
#include "orbitslice/matrix.hpp"

namespace orbitslice {
namespace {

struct CriticalPair {
  int i;
  int j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerOptions& options) : ring_(std::move(ring)), options_(options) {}

  GroebnerBasis run(std::span<const Polynomial> generators) {
    for (const Polynomial& g : generators) {
      if (unit_) break;
      add(reduce(g.reorder(ring_)));
    }
    while (!unit_ && !pairs_.empty()) {
      const std::size_t pick = select_pair();
      const CriticalPair pair = pairs_[pick];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(pick));
      ++stats_.pairs_reduced;
      add(reduce(s_polynomial(pair)));
    }
    return GroebnerBasis(ring_, finish(), stats_);
  }

 private:
  const Monomial& lm(int i) const { return polys_[static_cast<std::size_t>(i)].leading_monomial(); }

  void count_step() {
    if (++stats_.reductions > options_.max_reductions) {
      throw Error(ErrorCode::ResourceLimit,
                  "Groebner reduction budget of " + std::to_string(options_.max_reductions) + " steps exhausted");
    }
  }

  // Full reduction modulo the active basis.
  Polynomial reduce(Polynomial f) {
    std::vector<Term> remainder;
    while (!f.is_zero()) {
      const Term& lead = f.leading_term();
      int reducer = -1;
      for (int k : active_) {
        if (lm(k).divides(lead.monomial)) {
          reducer = k;
          break;
        }
      }
      if (reducer < 0) {
        remainder.push_back(lead);
        f = f.tail();
        continue;
      }
      count_step();
      const Polynomial& g = polys_[static_cast<std::size_t>(reducer)];
      f = f.minus_scaled(lead.coeff, lead.monomial / g.leading_monomial(), g);
    }
    return Polynomial::from_terms(ring_, std::move(remainder));
  }

  Polynomial s_polynomial(const CriticalPair& pair) {
    const Polynomial& a = polys_[static_cast<std::size_t>(pair.i)];
    const Polynomial& b = polys_[static_cast<std::size_t>(pair.j)];
    const Polynomial left = Polynomial(ring_).minus_scaled(-1, pair.lcm / a.leading_monomial(), a);
    return left.minus_scaled(1, pair.lcm / b.leading_monomial(), b);
  }

  std::size_t select_pair() const {
    // Normal strategy: smallest lcm first, oldest pair on ties.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (ring_->compare(pairs_[k].lcm, pairs_[best].lcm) < 0) best = k;
    }
    return best;
  }

  void add(Polynomial h) {
    if (h.is_zero()) return;
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    polys_.push_back(h.monic());
    update(static_cast<int>(polys_.size()) - 1);
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(int h) {
    const Monomial& lh = lm(h);
    std::vector<CriticalPair> fresh;
    for (int g : active_) fresh.push_back({g, h, lcm(lm(g), lh)});
    stats_.pairs_considered += fresh.size();

    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const CriticalPair& cand = fresh[a];
      bool keep = lm(cand.i).coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b) {
          if (fresh[b].lcm.divides(cand.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(cand.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(cand);
    }

    std::vector<CriticalPair> next;
    for (const CriticalPair& old : pairs_) {
      const bool chain = lh.divides(old.lcm) && !(lcm(lm(old.i), lh) == old.lcm) && !(lcm(lm(old.j), lh) == old.lcm);
      if (!chain) next.push_back(old);
    }
    for (const CriticalPair& c : kept) {
      if (!lm(c.i).coprime(lh)) next.push_back(c);
    }
    pairs_ = std::move(next);

    std::vector<int> still;
    for (int g : active_) {
      if (!lh.divides(lm(g))) still.push_back(g);
    }
    still.push_back(h);
    active_ = std::move(still);
  }

  std::vector<Polynomial> finish() {
    if (unit_) return {Polynomial::constant(ring_, 1)};
    std::vector<Polynomial> basis;
    for (int k : active_) basis.push_back(polys_[static_cast<std::size_t>(k)]);
    // Tail-reduce each element against the others.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      active_.clear();
      polys_ = basis;
      for (std::size_t other = 0; other < basis.size(); ++other) {
        if (other != k) active_.push_back(static_cast<int>(other));
      }
      const Term lead = basis[k].leading_term();
      basis[k] = (Polynomial::from_terms(ring_, {lead}) + reduce(basis[k].tail())).monic();
    }
    std::sort(basis.begin(), basis.end(), [this](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return basis;
  }

  RingPtr ring_;
  GroebnerOptions options_;
  GroebnerStats stats_;
  std::vector<Polynomial> polys_;
  std::vector<int> active_;
  std::vector<CriticalPair> pairs_;
  bool unit_ = false;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const RingPtr& ring, const GroebnerOptions& options) {
  return Buchberger(with_order(ring, options.order), options).run(generators);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  Polynomial g = f.ring() == ring_ ? f : f.reorder(ring_);
  std::vector<Term> remainder;
  while (!g.is_zero()) {
    const Term lead = g.leading_term();
    const Polynomial* reducer = nullptr;
    for (const Polynomial& b : basis_) {
      if (b.leading_monomial().divides(lead.monomial)) {
        reducer = &b;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(lead);
      g = g.tail();
    } else {
      g = g.minus_scaled(lead.coeff / reducer->leading_coeff(), lead.monomial / reducer->leading_monomial(),
                         *reducer);
    }
  }
  return Polynomial::from_terms(ring_, std::move(remainder));
}

int max_independent_set_size(int nvars, std::span<const Monomial> leading) {
  std::vector<std::uint32_t> supports;
  for (const Monomial& m : leading) {
    std::uint32_t s = 0;
    for (int v = 0; v < nvars; ++v) {
      if (m[v] > 0) s |= 1u << v;
    }
    if (s == 0) return -1;  // a constant: unit ideal
    supports.push_back(s);
  }
  int best = 0;
  auto dfs = [&](auto&& self, int var, std::uint32_t chosen, int count) -> void {
    if (count + (nvars - var) <= best) return;
    if (var == nvars) {
      best = count;
      return;
    }
    const std::uint32_t with = chosen | (1u << var);
    const bool independent =
        std::none_of(supports.begin(), supports.end(), [with](std::uint32_t s) { return (s & ~with) == 0; });
    if (independent) self(self, var + 1, with, count + 1);
    self(self, var + 1, chosen, count);
  };
  dfs(dfs, 0, 0u, 0);
  return best;
}

int GroebnerBasis::dimension() const {
  if (is_unit()) return -1;
  std::vector<Monomial> leading;
  for (const Polynomial& b : basis_) leading.push_back(b.leading_monomial());
  return max_independent_set_size(ring_->size(), leading);
}

bool radical_member(const Polynomial& f, std::span<const Polynomial> generators, const GroebnerOptions& options) {
  if (f.is_zero()) return true;
  return radical_member(f, buchberger(generators, f.ring(), options), options);
}

bool radical_member(const Polynomial& f, const GroebnerBasis& gb, const GroebnerOptions& options) {
  if (f.is_zero() || gb.is_unit()) return true;
  const RingPtr& ring = gb.ring();
  if (gb.contains(f)) return true;
  if (gb.is_zero_ideal()) return false;

  const RingPtr ext = extend_ring(with_order(ring, options.order), Variable{"t", "t"});
  std::vector<int> embed(static_cast<std::size_t>(ring->size()));
  for (int v = 0; v < ring->size(); ++v) embed[static_cast<std::size_t>(v)] = v;
  std::vector<Polynomial> lifted;
  for (const Polynomial& g : gb.polynomials()) lifted.push_back(g.rename(ext, embed));
  const Polynomial t = Polynomial::variable(ext, ring->size());
  lifted.push_back(Polynomial::constant(ext, 1) - t * f.reorder(ring).rename(ext, embed));
  return buchberger(lifted, ext, options).is_unit();
}

int linear_part_rank_at_origin(std::span<const Polynomial> generators) {
  if (generators.empty()) return 0;
  const int nvars = generators.front().ring()->size();
  RationalMatrix jac(static_cast<int>(generators.size()), nvars);
  for (std::size_t r = 0; r < generators.size(); ++r) {
    if (generators[r].constant_term() != 0) {
      throw Error(ErrorCode::NonVanishingAtOrigin, "generator " + generators[r].to_string() + " is nonzero at 0");
    }
    const auto lin = generators[r].linear_coefficients();
    for (int v = 0; v < nvars; ++v) jac(static_cast<int>(r), v) = lin[static_cast<std::size_t>(v)];
  }
  return rank(jac);
}

}  // namespace orbitslice
