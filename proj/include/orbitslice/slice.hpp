#pragma once

// The affine slice S_alpha: the permutation w_alpha, the generic matrix
// M_alpha(z), its base point, determinant and polynomial inverse.

#include <memory>
#include <optional>
#include <vector>

#include "orbitslice/clan.hpp"
#include "orbitslice/matrix.hpp"
#include "orbitslice/polynomial.hpp"

namespace orbitslice {

enum class EntryKind : std::uint8_t { Zero, One, MinusOne, Var, MinusVar };

struct SliceEntry {
  EntryKind kind = EntryKind::Zero;
  int var = -1;  // registry index for Var and MinusVar

  friend bool operator==(const SliceEntry&, const SliceEntry&) = default;
};

/// 0-based matrix position.
struct Position {
  int row;
  int col;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

class SymbolicMatrix {
 public:
  SymbolicMatrix(Matrix<SliceEntry> entries, std::vector<Position> vars);

  int n() const { return entries_.rows(); }
  const SliceEntry& operator()(int r, int c) const { return entries_(r, c); }
  /// Registry: one position per variable, row-major.
  const std::vector<Position>& vars() const { return vars_; }
  int var_count() const { return static_cast<int>(vars_.size()); }
  /// Variable owning position (r, c) as a Var entry, or -1.
  int var_at(int r, int c) const;

  /// Polynomial ring in z_{r,c}, grevlex, registry order.
  const RingPtr& ring() const { return ring_; }
  PolyMatrix to_polynomials() const;
  RationalMatrix evaluate(std::span<const Rational> point) const;

 private:
  Matrix<SliceEntry> entries_;
  std::vector<Position> vars_;
  RingPtr ring_;
};

/// Ring whose variables are named after the given positions.
RingPtr slice_ring(std::span<const Position> vars);

/// 0-based one-line permutation: w[i] is the column of row i's leading 1.
std::vector<int> w_alpha(const Clan& alpha);

SymbolicMatrix generic_matrix(const Clan& alpha);
RationalMatrix base_point(const Clan& alpha);
int free_variable_count(const Clan& alpha);

/// Constant value of det M_alpha(z); Error(NonConstantDeterminant) otherwise.
Rational determinant(const Clan& alpha);
/// M_alpha(z)^{-1} as adjugate / determinant.
PolyMatrix inverse(const Clan& alpha);

/// Everything above, built once per clan and shared.
struct SliceData {
  Clan alpha;
  std::vector<int> w;
  SymbolicMatrix generic;
  PolyMatrix matrix;
  Rational det;
  PolyMatrix inv;
};

std::shared_ptr<const SliceData> slice_data(const Clan& alpha);

}  // namespace orbitslice
