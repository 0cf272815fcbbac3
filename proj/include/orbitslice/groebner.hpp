#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orbitslice/polynomial.hpp"

namespace orbitslice {

struct GroebnerOptions {
  TermOrder order = TermOrder::GrevLex;
  /// Elementary reduction steps allowed before Error(ResourceLimit).
  std::size_t max_reductions = 1'000'000;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t reductions = 0;
};

/// Reduced Groebner basis: monic, leading monomials pairwise non-divisible,
/// sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, GroebnerStats stats)
      : ring_(std::move(ring)), basis_(std::move(basis)), stats_(stats) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& polynomials() const { return basis_; }
  const GroebnerStats& stats() const { return stats_; }

  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }
  bool is_zero_ideal() const { return basis_.empty(); }

  /// Remainder of full division by the basis. `f` may come from any ring with
  /// the same variables; the result lives in this basis' ring.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Krull dimension of the quotient ring; -1 for the unit ideal.
  int dimension() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
  GroebnerStats stats_;
};

GroebnerBasis buchberger(std::span<const Polynomial> generators, const RingPtr& ring,
                         const GroebnerOptions& options = {});

/// Is f in the radical of <generators>? Tries plain membership first, then
/// checks 1 in <generators, 1 - t f> over the ring extended by a fresh t.
bool radical_member(const Polynomial& f, std::span<const Polynomial> generators, const GroebnerOptions& options = {});
/// Same, reusing a basis of the ideal.
bool radical_member(const Polynomial& f, const GroebnerBasis& gb, const GroebnerOptions& options = {});

/// Rank of the matrix of degree-1 coefficients. Every generator must vanish
/// at the origin (Error(NonVanishingAtOrigin) otherwise).
int linear_part_rank_at_origin(std::span<const Polynomial> generators);

/// Largest set of variables containing the support of no leading monomial.
int max_independent_set_size(int nvars, std::span<const Monomial> leading);

}  // namespace orbitslice
