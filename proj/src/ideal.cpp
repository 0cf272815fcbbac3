#include "orbitslice/ideal.hpp"

#include <algorithm>

#include "orbitslice/error.hpp"

namespace orbitslice {

std::string_view to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::SW: return "SW";
    case ConditionKind::SE: return "SE";
    case ConditionKind::AUX: return "AUX";
  }
  return "?";
}

std::vector<RankCondition> rank_conditions(const Clan& gamma) {
  const ClanStats s = stats(gamma);
  const int n = gamma.n(), p = gamma.p(), q = gamma.q();
  std::vector<RankCondition> out;
  auto push = [&](ConditionKind kind, int i, int j, int bound, int rows, int cols) {
    const int size = bound + 1;
    out.push_back({kind, i, j, bound, size, rows, cols, size > std::min(rows, cols)});
  };
  for (int i = 1; i <= n; ++i) push(ConditionKind::SW, i, 0, p - s.plus[static_cast<std::size_t>(i - 1)], n - i, p);
  for (int i = 1; i <= n; ++i) push(ConditionKind::SE, i, 0, q - s.minus[static_cast<std::size_t>(i - 1)], n - i, q);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) push(ConditionKind::AUX, i, j, j + s.cross(i - 1, j - 1), n, i + j);
  }
  return out;
}

template <class T>
static Matrix<T> aux(const Matrix<T>& minv, int i, int j, int q, const T& zero) {
  const int n = minv.rows();
  if (minv.cols() != n || i < 1 || j <= i || j > n || q < 0 || q > n) {
    throw Error(ErrorCode::BadIndices, "auxiliary matrix [" + std::to_string(i) + ";" + std::to_string(j) + "]");
  }
  Matrix<T> out(n, i + j, zero);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < i; ++c) {
      if (r < n - q) out(r, c) = minv(r, c);
    }
    for (int c = 0; c < j; ++c) out(r, i + c) = minv(r, c);
  }
  return out;
}

PolyMatrix aux_matrix(const PolyMatrix& minv, int i, int j, int q) {
  const RingPtr ring = minv.rows() > 0 ? minv(0, 0).ring() : RingPtr{};
  return aux(minv, i, j, q, Polynomial(ring));
}

RationalMatrix aux_matrix(const RationalMatrix& minv, int i, int j, int q) { return aux(minv, i, j, q, Rational(0)); }

namespace {

std::uint32_t mask_range(int from, int to) {
  std::uint32_t m = 0;
  for (int k = from; k < to; ++k) m |= 1u << k;
  return m;
}

// Every k-subset of the bits in `universe`, in lexicographic order.
std::vector<std::uint32_t> subsets_within(std::uint32_t universe, int k) {
  std::vector<int> bits;
  for (int b = 0; b < 32; ++b) {
    if (universe & (1u << b)) bits.push_back(b);
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t local : subsets_of_size(static_cast<int>(bits.size()), k)) {
    std::uint32_t m = 0;
    for (std::size_t b = 0; b < bits.size(); ++b) {
      if (local & (1u << b)) m |= 1u << bits[b];
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace

MarsSpringerIdeal generators(const Clan& gamma, const Clan& alpha) {
  if (gamma.p() != alpha.p() || gamma.q() != alpha.q()) {
    throw Error(ErrorCode::MixedSignature, alpha.str() + " and " + gamma.str() + " have different signatures");
  }
  if (!point_satisfies(base_point(alpha), gamma)) {
    throw Error(ErrorCode::NotComparable, alpha.str() + " is not below " + gamma.str());
  }
  const auto data = slice_data(alpha);
  const int n = gamma.n(), p = gamma.p(), q = gamma.q();
  MarsSpringerIdeal ideal{gamma, alpha, data->generic.ring(), {}, {}, {}};

  // SW and SE minors share one engine per column block.
  MinorEngine sw(submatrix(data->matrix, 0, n, 0, p));
  MinorEngine se(submatrix(data->matrix, 0, n, p, q));

  auto add = [&](const Polynomial& minor) {
    if (minor.is_zero()) return;
    Polynomial g = minor.primitive();
    if (std::find(ideal.generators.begin(), ideal.generators.end(), g) == ideal.generators.end()) {
      ideal.generators.push_back(std::move(g));
    }
  };

  for (const RankCondition& cond : rank_conditions(gamma)) {
    if (cond.vacuous) continue;
    std::size_t count = 0;
    if (cond.kind == ConditionKind::AUX) {
      const PolyMatrix m = aux_matrix(data->inv, cond.i, cond.j, q);
      MinorEngine engine(m);
      for (std::uint32_t r : subsets_of_size(m.rows(), cond.minor_size)) {
        for (std::uint32_t c : subsets_of_size(m.cols(), cond.minor_size)) {
          add(engine.minor(r, c));
          ++count;
        }
      }
    } else {
      MinorEngine& engine = cond.kind == ConditionKind::SW ? sw : se;
      for (std::uint32_t r : subsets_within(mask_range(cond.i, n), cond.minor_size)) {
        for (std::uint32_t c : subsets_of_size(cond.cols, cond.minor_size)) {
          add(engine.minor(r, c));
          ++count;
        }
      }
    }
    ideal.conditions.push_back(cond);
    ideal.minors_computed.push_back(count);
  }
  return ideal;
}

bool point_satisfies(const RationalMatrix& m, const Clan& gamma) {
  const auto minv = inverse(m);
  if (!minv) throw Error(ErrorCode::SingularPoint, "matrix is not invertible");
  const int n = gamma.n(), p = gamma.p(), q = gamma.q();
  if (m.rows() != n) throw Error(ErrorCode::BadIndices, "matrix size does not match " + gamma.str());
  for (const RankCondition& cond : rank_conditions(gamma)) {
    if (cond.vacuous) continue;
    int r = 0;
    switch (cond.kind) {
      case ConditionKind::SW: r = rank(submatrix(m, cond.i, n - cond.i, 0, p)); break;
      case ConditionKind::SE: r = rank(submatrix(m, cond.i, n - cond.i, p, q)); break;
      case ConditionKind::AUX: r = rank(aux_matrix(*minv, cond.i, cond.j, q)); break;
    }
    if (r > cond.bound) return false;
  }
  return true;
}

}  // namespace orbitslice
