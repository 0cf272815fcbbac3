#include "orbitslice/slice.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "orbitslice/error.hpp"

namespace orbitslice {

SymbolicMatrix::SymbolicMatrix(Matrix<SliceEntry> entries, std::vector<Position> vars)
    : entries_(std::move(entries)), vars_(std::move(vars)), ring_(slice_ring(vars_)) {}

int SymbolicMatrix::var_at(int r, int c) const {
  const SliceEntry& e = entries_(r, c);
  return e.kind == EntryKind::Var ? e.var : -1;
}

PolyMatrix SymbolicMatrix::to_polynomials() const {
  PolyMatrix out(n(), n(), Polynomial(ring_));
  for (int r = 0; r < n(); ++r) {
    for (int c = 0; c < n(); ++c) {
      const SliceEntry& e = entries_(r, c);
      switch (e.kind) {
        case EntryKind::Zero: break;
        case EntryKind::One: out(r, c) = Polynomial::constant(ring_, 1); break;
        case EntryKind::MinusOne: out(r, c) = Polynomial::constant(ring_, -1); break;
        case EntryKind::Var: out(r, c) = Polynomial::variable(ring_, e.var); break;
        case EntryKind::MinusVar: out(r, c) = -Polynomial::variable(ring_, e.var); break;
      }
    }
  }
  return out;
}

RationalMatrix SymbolicMatrix::evaluate(std::span<const Rational> point) const {
  RationalMatrix out(n(), n());
  for (int r = 0; r < n(); ++r) {
    for (int c = 0; c < n(); ++c) {
      const SliceEntry& e = entries_(r, c);
      switch (e.kind) {
        case EntryKind::Zero: break;
        case EntryKind::One: out(r, c) = 1; break;
        case EntryKind::MinusOne: out(r, c) = -1; break;
        case EntryKind::Var: out(r, c) = point[static_cast<std::size_t>(e.var)]; break;
        case EntryKind::MinusVar: out(r, c) = -point[static_cast<std::size_t>(e.var)]; break;
      }
    }
  }
  return out;
}

RingPtr slice_ring(std::span<const Position> vars) {
  std::vector<Variable> names;
  for (const Position& pos : vars) {
    const std::string rc = std::to_string(pos.row + 1) + "," + std::to_string(pos.col + 1);
    names.push_back({"z_{" + rc + "}", "z_(" + rc + ")"});
  }
  return make_ring(std::move(names));
}

std::vector<int> w_alpha(const Clan& alpha) {
  const int n = alpha.n();
  std::vector<int> w(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (alpha.is_plus(i) || alpha.is_left_end(i)) w[static_cast<std::size_t>(i)] = next++;
  }
  for (int i = 0; i < n; ++i) {
    if (alpha.is_minus(i)) {
      w[static_cast<std::size_t>(i)] = next++;
    } else if (alpha.is_left_end(i)) {
      w[static_cast<std::size_t>(alpha.partner(i))] = next++;
    }
  }
  return w;
}

namespace {

enum class Cell : std::uint8_t { Unset, Zero, One, MinusOne, Free };

}  // namespace

SymbolicMatrix generic_matrix(const Clan& alpha) {
  const int n = alpha.n(), p = alpha.p();
  const std::vector<int> w = w_alpha(alpha);
  auto wi = [&](int i) { return w[static_cast<std::size_t>(i)]; };

  Matrix<Cell> cell(n, n, Cell::Unset);
  for (int i = 0; i < n; ++i) {
    cell(i, wi(i)) = Cell::One;
    if (alpha.is_left_end(i)) cell(i, wi(alpha.partner(i))) = Cell::One;
    if (alpha.is_right_end(i)) cell(i, wi(alpha.partner(i))) = Cell::MinusOne;
  }

  // Per column: pivot row, then the -1 (first block) or second 1 (last block).
  std::vector<int> pivot(static_cast<std::size_t>(n), -1), stop(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const Cell v = cell(r, c);
      if (v == Cell::One && pivot[static_cast<std::size_t>(c)] < 0) {
        pivot[static_cast<std::size_t>(c)] = r;
      } else if (c < p ? v == Cell::MinusOne : (v == Cell::One && pivot[static_cast<std::size_t>(c)] >= 0)) {
        if (stop[static_cast<std::size_t>(c)] < 0) stop[static_cast<std::size_t>(c)] = r;
      }
    }
  }

  for (int block = 0; block < 2; ++block) {
    const int c0 = block == 0 ? 0 : p, c1 = block == 0 ? p : n;
    std::vector<bool> has_pivot(static_cast<std::size_t>(n), false);
    for (int c = c0; c < c1; ++c) has_pivot[static_cast<std::size_t>(pivot[static_cast<std::size_t>(c)])] = true;
    for (int r = 0; r < n; ++r) {
      bool past_stop = false;  // a -1 (or second 1) already seen left of here
      for (int c = c0; c < c1; ++c) {
        const int pv = pivot[static_cast<std::size_t>(c)], st = stop[static_cast<std::size_t>(c)];
        if (cell(r, c) == Cell::Unset) {
          const bool zero = has_pivot[static_cast<std::size_t>(r)] || r < pv || (st >= 0 && pv < r && r < st) ||
                            past_stop;
          cell(r, c) = zero ? Cell::Zero : Cell::Free;
        }
        if (st == r) past_stop = true;
      }
    }
  }

  // 1212 identifications: (l, w(k)) is the negated twin of (l, w(i)).
  Matrix<int> twin_of(n, n, -1);  // twin cell -> column of its owner
  for (const Matching& a : alpha.matchings()) {
    for (const Matching& b : alpha.matchings()) {
      if (!(a.left < b.left && b.left < a.right && a.right < b.right)) continue;
      const int row = b.right, owner = wi(a.left), twin = wi(a.right);
      if (cell(row, owner) != Cell::Free || cell(row, twin) != Cell::Free) {
        throw std::logic_error("1212 identification on a specialized position in " + alpha.str());
      }
      twin_of(row, twin) = owner;
    }
  }

  Matrix<SliceEntry> entries(n, n);
  std::vector<Position> vars;
  Matrix<int> index(n, n, -1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (cell(r, c) == Cell::Free && twin_of(r, c) < 0) {
        index(r, c) = static_cast<int>(vars.size());
        vars.push_back({r, c});
      }
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      SliceEntry& e = entries(r, c);
      switch (cell(r, c)) {
        case Cell::One: e.kind = EntryKind::One; break;
        case Cell::MinusOne: e.kind = EntryKind::MinusOne; break;
        case Cell::Free:
          if (twin_of(r, c) >= 0) {
            e = {EntryKind::MinusVar, index(r, twin_of(r, c))};
          } else {
            e = {EntryKind::Var, index(r, c)};
          }
          break;
        default: break;
      }
    }
  }
  return SymbolicMatrix(std::move(entries), std::move(vars));
}

RationalMatrix base_point(const Clan& alpha) {
  const SymbolicMatrix m = generic_matrix(alpha);
  const std::vector<Rational> zero(static_cast<std::size_t>(m.var_count()));
  return m.evaluate(zero);
}

int free_variable_count(const Clan& alpha) { return generic_matrix(alpha).var_count(); }

namespace {

std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : (1u << n) - 1; }

std::shared_ptr<const SliceData> build(const Clan& alpha) {
  auto data = std::make_shared<SliceData>(SliceData{alpha, w_alpha(alpha), generic_matrix(alpha), {}, 0, {}});
  data->matrix = data->generic.to_polynomials();
  const int n = alpha.n();
  MinorEngine minors(data->matrix);
  const std::uint32_t all = full_mask(n);
  const Polynomial det = minors.minor(all, all);
  if (!det.is_constant() || det.is_zero()) {
    throw Error(ErrorCode::NonConstantDeterminant, "det M_" + alpha.str() + " = " + det.to_string());
  }
  data->det = det.constant_term();
  const Rational scale = 1 / data->det;
  const RingPtr& ring = data->generic.ring();
  data->inv = PolyMatrix(n, n, Polynomial(ring));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // inv(i, j) = (-1)^(i+j) det(M without row j, column i) / det M
      const Polynomial cof = minors.minor(all & ~(1u << j), all & ~(1u << i));
      data->inv(i, j) = ((i + j) % 2 == 0 ? scale : Rational(-scale)) * cof;
    }
  }
  return data;
}

}  // namespace

std::shared_ptr<const SliceData> slice_data(const Clan& alpha) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const SliceData>> cache;
  const std::string key = alpha.str();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto data = build(alpha);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(data)).first->second;
}

Rational determinant(const Clan& alpha) { return slice_data(alpha)->det; }

PolyMatrix inverse(const Clan& alpha) { return slice_data(alpha)->inv; }

}  // namespace orbitslice
