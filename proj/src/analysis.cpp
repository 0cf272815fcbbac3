#include "orbitslice/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "orbitslice/error.hpp"
#include "orbitslice/order.hpp"
#include "orbitslice/slice.hpp"

namespace orbitslice {

std::shared_ptr<const PairData> pair_data(const Clan& gamma, const Clan& alpha, const GroebnerOptions& options) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const PairData>> cache;
  const std::string key =
      gamma.str() + "|" + alpha.str() + "|" + (options.order == TermOrder::GrevLex ? "grevlex" : "lex");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  MarsSpringerIdeal ideal = generators(gamma, alpha);
  GroebnerBasis gb = buchberger(ideal.generators, ideal.ring, options);
  auto data = std::make_shared<const PairData>(PairData{std::move(ideal), std::move(gb)});
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(data)).first->second;
}

int variety_dimension(const Clan& gamma, const Clan& alpha, const GroebnerOptions& options) {
  const auto data = pair_data(gamma, alpha, options);
  const int dim = data->gb.dimension();
  const int expected = length(gamma) - length(alpha);
  if (dim != expected) {
    throw Error(ErrorCode::DimensionMismatch, "slice variety of (" + gamma.str() + ", " + alpha.str() +
                                                  ") has dimension " + std::to_string(dim) + ", expected " +
                                                  std::to_string(expected));
  }
  return dim;
}

SingularityReport smooth_at(const Clan& gamma, const Clan& alpha, const GroebnerOptions& options) {
  const int dim = variety_dimension(gamma, alpha, options);
  const auto data = pair_data(gamma, alpha, options);
  const int tangent = data->ideal.ring->size() - linear_part_rank_at_origin(data->ideal.generators);
  return {gamma, alpha, dim, tangent, tangent == dim, true};
}

std::vector<Clan> maxsing(const Clan& gamma, const GroebnerOptions& options) {
  const auto poset = hasse(gamma.p(), gamma.q());
  const int top = poset->index_of(gamma);
  std::vector<int> singular;
  for (int k = 0; k < poset->size(); ++k) {
    if (poset->leq(k, top) && !smooth_at(gamma, poset->element(k), options).smooth) singular.push_back(k);
  }
  std::vector<Clan> out;
  for (int a : singular) {
    const bool maximal = std::none_of(singular.begin(), singular.end(), [&](int b) { return b != a && poset->leq(a, b); });
    if (maximal) out.push_back(poset->element(a));
  }
  return out;  // poset elements are already in Clan order
}

std::vector<TableRow> singularity_table(int p, int q, const GroebnerOptions& options) {
  const auto& clans = hasse(p, q)->elements();
  std::vector<std::vector<Clan>> found(clans.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < clans.size();) {
      try {
        found[k] = maxsing(clans[k], options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<TableRow> rows;
  for (std::size_t k = 0; k < clans.size(); ++k) {
    if (!found[k].empty()) rows.push_back({clans[k], length(clans[k]), std::move(found[k])});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return a.length > b.length; });
  return rows;
}

IsoVerification verify_interval_iso(const IntervalEmbedding& e, const GroebnerOptions& options) {
  const auto small = slice_data(e.alpha);
  const auto big = slice_data(e.beta);
  const SymbolicMatrix& ma = small->generic;
  const SymbolicMatrix& mb = big->generic;
  const int n = mb.n(), m = ma.n();

  std::vector<bool> row_kept(static_cast<std::size_t>(n), false), col_kept(static_cast<std::size_t>(n), false);
  for (int i : e.indices) {
    row_kept[static_cast<std::size_t>(i)] = true;
    col_kept[static_cast<std::size_t>(big->w[static_cast<std::size_t>(i)])] = true;
  }
  std::vector<int> cols;
  for (int c = 0; c < n; ++c) {
    if (col_kept[static_cast<std::size_t>(c)]) cols.push_back(c);
  }

  auto mismatch = [&](const std::string& what) {
    return Error(ErrorCode::PositionMapMismatch, "[" + e.alpha.str() + ", " + e.gamma.str() + "] into [" +
                                                     e.beta.str() + ", " + e.theta.str() + "]: " + what);
  };

  IsoVerification out{e, std::vector<int>(static_cast<std::size_t>(ma.var_count()), -1), {}, false, false, false};
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      const int br = e.indices[static_cast<std::size_t>(r)], bc = cols[static_cast<std::size_t>(c)];
      const SliceEntry& a = ma(r, c);
      const SliceEntry& b = mb(br, bc);
      if (a.kind != b.kind) {
        throw mismatch("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") differs from (" +
                       std::to_string(br + 1) + "," + std::to_string(bc + 1) + ")");
      }
      if (a.kind == EntryKind::Var || a.kind == EntryKind::MinusVar) {
        int& slot = out.variable_map[static_cast<std::size_t>(a.var)];
        if (slot >= 0 && slot != b.var) throw mismatch("inconsistent variable correspondence");
        slot = b.var;
      }
    }
  }
  std::vector<int> hits(static_cast<std::size_t>(mb.var_count()), 0);
  for (int v : out.variable_map) {
    if (v < 0) throw mismatch("unmapped variable");
    ++hits[static_cast<std::size_t>(v)];
  }
  for (int v = 0; v < mb.var_count(); ++v) {
    const Position pos = mb.vars()[static_cast<std::size_t>(v)];
    const bool deleted = !row_kept[static_cast<std::size_t>(pos.row)] || !col_kept[static_cast<std::size_t>(pos.col)];
    if (hits[static_cast<std::size_t>(v)] > 1 || (deleted == (hits[static_cast<std::size_t>(v)] == 1))) {
      throw mismatch("variable " + mb.ring()->var(v).latex + " is not matched bijectively");
    }
    if (deleted) out.deleted_vars.push_back(v);
  }

  out.dims_equal = variety_dimension(e.theta, e.beta, options) == variety_dimension(e.gamma, e.alpha, options);
  const auto big_pair = pair_data(e.theta, e.beta, options);
  const auto small_pair = pair_data(e.gamma, e.alpha, options);
  const RingPtr& ring = big_pair->ideal.ring;
  out.deleted_vars_vanish = std::all_of(out.deleted_vars.begin(), out.deleted_vars.end(), [&](int v) {
    return radical_member(Polynomial::variable(ring, v), big_pair->gb, options);
  });
  out.mapped_gens_in_radical =
      std::all_of(small_pair->ideal.generators.begin(), small_pair->ideal.generators.end(), [&](const Polynomial& g) {
        return radical_member(g.rename(ring, out.variable_map), big_pair->gb, options);
      });
  return out;
}

UpperIdealReport upper_ideal_check(int p, int q, const PairPredicate& pred) {
  UpperIdealReport report;
  const auto poset = hasse(p, q);
  for (int g = 0; g < poset->size(); ++g) {
    const Clan& gamma = poset->element(g);
    for (int a = 0; a < poset->size(); ++a) {
      if (!poset->leq(a, g)) continue;
      ++report.pairs_checked;
      if (!pred(poset->element(a), gamma)) continue;
      for (int b = 0; b < poset->size(); ++b) {
        if (b == a || !poset->leq(b, a)) continue;
        ++report.downward_checks;
        if (!pred(poset->element(b), gamma)) {
          report.violations.push_back("downward: (" + poset->element(a).str() + ", " + gamma.str() + ") holds but (" +
                                      poset->element(b).str() + ", " + gamma.str() + ") does not");
        }
      }
    }
  }
  for (int sp = 0; sp <= p; ++sp) {
    for (int sq = 0; sq <= q; ++sq) {
      if (sp + sq < 1 || sp + sq >= p + q) continue;
      const auto sub = hasse(sp, sq);
      for (int g = 0; g < sub->size(); ++g) {
        for (int a = 0; a < sub->size(); ++a) {
          if (!sub->leq(a, g) || !pred(sub->element(a), sub->element(g))) continue;
          for (const Clan& theta : poset->elements()) {
            for (const IntervalEmbedding& e : find_interval_embeddings(theta, sub->element(a), sub->element(g))) {
              ++report.embeddings_checked;
              if (!pred(e.beta, e.theta)) {
                std::string at;
                for (int i : e.indices) at += (at.empty() ? "" : ",") + std::to_string(i + 1);
                report.violations.push_back("embedding: [" + e.alpha.str() + ", " + e.gamma.str() + "] into [" +
                                            e.beta.str() + ", " + e.theta.str() + "] at {" + at + "}");
              }
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace orbitslice
