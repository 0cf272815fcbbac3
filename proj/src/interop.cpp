#include "orbitslice/interop.hpp"

#include <sstream>

#include "orbitslice/error.hpp"

namespace orbitslice {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadJson, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" is not an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" is not a string");
  return v.get<std::string>();
}

Rational parse_rational(const std::string& s) {
  try {
    Rational q(s, 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    bad("not a rational number: " + s);
  }
}

std::string rational_text(const Rational& q) { return q.get_str(); }

Json index_list(std::span<const int> indices) {
  Json out = Json::array();
  for (int i : indices) out.push_back(i + 1);
  return out;
}

std::vector<int> index_list_from(const Json& j) {
  if (!j.is_array()) bad("index list is not an array");
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) bad("index is not an integer");
    out.push_back(v.get<int>() - 1);
  }
  return out;
}

}  // namespace

Json to_json(const Clan& c) {
  Json entries = Json::array();
  for (int i = 0; i < c.n(); ++i) {
    if (c.is_plus(i)) {
      entries.push_back({{"kind", "+"}});
    } else if (c.is_minus(i)) {
      entries.push_back({{"kind", "-"}});
    } else {
      entries.push_back({{"kind", "m"}, {"partner", c.partner(i) + 1}});
    }
  }
  return {{"string", c.str()}, {"n", c.n()}, {"entries", std::move(entries)}};
}

Clan clan_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != n) bad("clan entries do not match n");
  std::vector<ClanEntry> e;
  for (const Json& x : entries) {
    const std::string kind = string_field(x, "kind");
    if (kind == "+") {
      e.push_back({Slot::Plus, -1});
    } else if (kind == "-") {
      e.push_back({Slot::Minus, -1});
    } else if (kind == "m") {
      e.push_back({Slot::Matched, int_field(x, "partner") - 1});
    } else {
      bad("unknown clan entry kind " + kind);
    }
  }
  for (const ClanEntry& x : e) {
    if (x.slot == Slot::Matched && (x.partner < 0 || x.partner >= n)) bad("partner out of range");
  }
  return Clan(std::move(e));
}

Json to_json(const Ring& ring) {
  Json vars = Json::array();
  for (const Variable& v : ring.vars()) vars.push_back({{"latex", v.latex}, {"m2", v.m2}});
  return {{"order", ring.order() == TermOrder::GrevLex ? "grevlex" : "lex"}, {"variables", std::move(vars)}};
}

RingPtr ring_from_json(const Json& j) {
  const std::string order = string_field(j, "order");
  if (order != "grevlex" && order != "lex") bad("unknown term order " + order);
  std::vector<Variable> vars;
  const Json& list = field(j, "variables");
  if (!list.is_array()) bad("variables is not an array");
  for (const Json& v : list) vars.push_back({string_field(v, "latex"), string_field(v, "m2")});
  return make_ring(std::move(vars), order == "grevlex" ? TermOrder::GrevLex : TermOrder::Lex);
}

Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const Term& t : f.terms()) {
    Json mono = Json::array();
    for (int v = 0; v < f.ring()->size(); ++v) {
      if (t.monomial[v] > 0) mono.push_back({v, t.monomial[v]});
    }
    terms.push_back({rational_text(t.coeff), std::move(mono)});
  }
  return {{"text", f.ring() ? f.to_string() : "0"}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j, const RingPtr& ring) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms is not an array");
  std::vector<Term> out;
  for (const Json& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_array()) bad("malformed term");
    Monomial m;
    for (const Json& ve : t[1]) {
      if (!ve.is_array() || ve.size() != 2 || !ve[0].is_number_integer() || !ve[1].is_number_integer()) bad("malformed exponent");
      const int v = ve[0].get<int>(), e = ve[1].get<int>();
      if (v < 0 || v >= ring->size() || e < 0 || e > 255) bad("exponent out of range");
      m.set(v, e);
    }
    out.push_back({m, parse_rational(t[0].get<std::string>())});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_text(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  const int rows = int_field(j, "rows"), cols = int_field(j, "cols");
  const Json& e = field(j, "entries");
  if (rows < 0 || cols < 0 || !e.is_array() || static_cast<int>(e.size()) != rows) bad("matrix shape mismatch");
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!e[r].is_array() || static_cast<int>(e[r].size()) != cols) bad("matrix shape mismatch");
    for (int c = 0; c < cols; ++c) {
      if (!e[r][c].is_string()) bad("matrix entry is not a string");
      m(r, c) = parse_rational(e[r][c].get<std::string>());
    }
  }
  return m;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

PolyMatrix poly_matrix_from_json(const Json& j, const RingPtr& ring) {
  const int rows = int_field(j, "rows"), cols = int_field(j, "cols");
  const Json& e = field(j, "entries");
  if (rows < 0 || cols < 0 || !e.is_array() || static_cast<int>(e.size()) != rows) bad("matrix shape mismatch");
  PolyMatrix m(rows, cols, Polynomial(ring));
  for (int r = 0; r < rows; ++r) {
    if (!e[r].is_array() || static_cast<int>(e[r].size()) != cols) bad("matrix shape mismatch");
    for (int c = 0; c < cols; ++c) m(r, c) = polynomial_from_json(e[r][c], ring);
  }
  return m;
}

Json to_json(const SymbolicMatrix& m) {
  Json vars = Json::array();
  for (int v = 0; v < m.var_count(); ++v) {
    const Position pos = m.vars()[static_cast<std::size_t>(v)];
    vars.push_back({{"name", m.ring()->var(v).latex}, {"row", pos.row + 1}, {"col", pos.col + 1}});
  }
  Json rows = Json::array();
  for (int r = 0; r < m.n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.n(); ++c) {
      const SliceEntry& e = m(r, c);
      switch (e.kind) {
        case EntryKind::Zero: row.push_back("0"); break;
        case EntryKind::One: row.push_back("1"); break;
        case EntryKind::MinusOne: row.push_back("-1"); break;
        case EntryKind::Var: row.push_back(m.ring()->var(e.var).latex); break;
        case EntryKind::MinusVar: row.push_back("-" + m.ring()->var(e.var).latex); break;
      }
    }
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"variables", std::move(vars)}, {"entries", std::move(rows)}};
}

Json to_json(const RankCondition& c) {
  Json j = {{"kind", std::string(to_string(c.kind))}, {"i", c.i}};
  if (c.kind == ConditionKind::AUX) j["j"] = c.j;
  j["bound"] = c.bound;
  j["minorSize"] = c.minor_size;
  j["rows"] = c.rows;
  j["cols"] = c.cols;
  j["vacuous"] = c.vacuous;
  return j;
}

RankCondition rank_condition_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  RankCondition c{};
  if (kind == "SW") {
    c.kind = ConditionKind::SW;
  } else if (kind == "SE") {
    c.kind = ConditionKind::SE;
  } else if (kind == "AUX") {
    c.kind = ConditionKind::AUX;
    c.j = int_field(j, "j");
  } else {
    bad("unknown condition kind " + kind);
  }
  c.i = int_field(j, "i");
  c.bound = int_field(j, "bound");
  c.minor_size = int_field(j, "minorSize");
  c.rows = int_field(j, "rows");
  c.cols = int_field(j, "cols");
  const Json& v = field(j, "vacuous");
  if (!v.is_boolean()) bad("vacuous is not a boolean");
  c.vacuous = v.get<bool>();
  return c;
}

Json to_json(const MarsSpringerIdeal& ideal) {
  Json gens = Json::array();
  for (const Polynomial& g : ideal.generators) gens.push_back(to_json(g));
  Json conds = Json::array();
  for (std::size_t k = 0; k < ideal.conditions.size(); ++k) {
    Json c = to_json(ideal.conditions[k]);
    c["minorsComputed"] = ideal.minors_computed[k];
    conds.push_back(std::move(c));
  }
  return {{"gamma", to_json(ideal.gamma)},
          {"alpha", to_json(ideal.alpha)},
          {"ring", to_json(*ideal.ring)},
          {"generators", std::move(gens)},
          {"conditions", std::move(conds)}};
}

MarsSpringerIdeal ideal_from_json(const Json& j) {
  MarsSpringerIdeal ideal{clan_from_json(field(j, "gamma")), clan_from_json(field(j, "alpha")),
                          ring_from_json(field(j, "ring")), {}, {}, {}};
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) bad("generators is not an array");
  for (const Json& g : gens) ideal.generators.push_back(polynomial_from_json(g, ideal.ring));
  const Json& conds = field(j, "conditions");
  if (!conds.is_array()) bad("conditions is not an array");
  for (const Json& c : conds) {
    ideal.conditions.push_back(rank_condition_from_json(c));
    const Json& count = field(c, "minorsComputed");
    if (!count.is_number_unsigned()) bad("minorsComputed is not a count");
    ideal.minors_computed.push_back(count.get<std::size_t>());
  }
  return ideal;
}

Json to_json(const GroebnerBasis& gb) {
  Json basis = Json::array();
  for (const Polynomial& g : gb.polynomials()) basis.push_back(to_json(g));
  return {{"ring", to_json(*gb.ring())},
          {"basis", std::move(basis)},
          {"dimension", gb.dimension()},
          {"stats",
           {{"pairsConsidered", gb.stats().pairs_considered},
            {"pairsReduced", gb.stats().pairs_reduced},
            {"reductions", gb.stats().reductions}}}};
}

Json to_json(const IntervalEmbedding& e) {
  return {{"small", {{"alpha", to_json(e.alpha)}, {"gamma", to_json(e.gamma)}}},
          {"big", {{"beta", to_json(e.beta)}, {"theta", to_json(e.theta)}}},
          {"indices", index_list(e.indices)},
          {"lengthDiff", e.length_diff}};
}

IntervalEmbedding embedding_from_json(const Json& j) {
  const Json& small = field(j, "small");
  const Json& big = field(j, "big");
  return {clan_from_json(field(small, "alpha")), clan_from_json(field(small, "gamma")),
          clan_from_json(field(big, "beta")),    clan_from_json(field(big, "theta")),
          index_list_from(field(j, "indices")),  int_field(j, "lengthDiff")};
}

Json to_json(const SingularityReport& r) {
  return {{"gamma", to_json(r.gamma)},
          {"alpha", to_json(r.alpha)},
          {"varietyDim", r.variety_dim},
          {"tangentDim", r.tangent_dim},
          {"verdict", r.smooth ? "Smooth" : "Singular"},
          {"caveat", r.radicality_caveat ? "contingent on radicality of generators" : ""}};
}

SingularityReport report_from_json(const Json& j) {
  const std::string verdict = string_field(j, "verdict");
  if (verdict != "Smooth" && verdict != "Singular") bad("unknown verdict " + verdict);
  return {clan_from_json(field(j, "gamma")), clan_from_json(field(j, "alpha")), int_field(j, "varietyDim"),
          int_field(j, "tangentDim"), verdict == "Smooth", !string_field(j, "caveat").empty()};
}

Json to_json(const IsoVerification& v) {
  return {{"embedding", to_json(v.embedding)},
          {"variableMap", v.variable_map},
          {"deletedVars", v.deleted_vars},
          {"dimsEqual", v.dims_equal},
          {"deletedVarsVanish", v.deleted_vars_vanish},
          {"mappedGensInRadical", v.mapped_gens_in_radical},
          {"verified", v.verified()}};
}

Json to_json(const TableRow& row) {
  Json ms = Json::array();
  for (const Clan& c : row.maxsing) ms.push_back(c.str());
  return {{"clan", row.gamma.str()}, {"length", row.length}, {"maxsing", std::move(ms)}, {"maxnongor", nullptr}};
}

Json to_json(const UpperIdealReport& r) {
  return {{"pairsChecked", r.pairs_checked},
          {"downwardChecks", r.downward_checks},
          {"embeddingsChecked", r.embeddings_checked},
          {"violations", r.violations}};
}

template <class Render>
static std::string latex_rows(int rows, int cols, Render render) {
  std::string out;
  for (int r = 0; r < rows; ++r) {
    out += "    ";
    for (int c = 0; c < cols; ++c) {
      if (c > 0) out += " & ";
      out += render(r, c);
    }
    out += r + 1 < rows ? " \\\\\n" : "\n";
  }
  return out;
}

std::string latex_matrix(const PolyMatrix& m) {
  return latex_rows(m.rows(), m.cols(), [&](int r, int c) { return m(r, c).is_zero() ? std::string("0") : m(r, c).to_string(); });
}

std::string latex_matrix(const RationalMatrix& m) {
  return latex_rows(m.rows(), m.cols(), [&](int r, int c) { return rational_to_string(m(r, c), NameStyle::Latex); });
}

std::string format_tuple(const TableRow& row) {
  std::string out = "(" + row.gamma.str() + ", " + std::to_string(row.length) + ", {";
  for (std::size_t k = 0; k < row.maxsing.size(); ++k) out += (k ? ", " : "") + row.maxsing[k].str();
  return out + "})";
}

static std::string dot_graph(const std::vector<Clan>& nodes, const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream out;
  out << "digraph clans {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    out << "  n" << k << " [label=\"" << nodes[k].str() << " (" << length(nodes[k]) << ")\"];\n";
  }
  for (auto [lo, hi] : edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const ClanPoset& poset) {
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < poset.size(); ++k) {
    for (int u : poset.up(k)) edges.emplace_back(k, u);
  }
  return dot_graph(poset.elements(), edges);
}

std::string emit_dot(const ClanInterval& interval) { return dot_graph(interval.elements, interval.edges); }

CasScript emit_cas(const MarsSpringerIdeal& ideal, unsigned checks) {
  CasScript script{"Macaulay2", "", {}};
  std::ostringstream out;
  const Ring& ring = *ideal.ring;
  const int expected_dim = length(ideal.gamma) - length(ideal.alpha);
  out << "-- slice ideal for gamma = " << ideal.gamma.str() << ", alpha = " << ideal.alpha.str() << "\n";
  out << "-- generators are the nonzero rank-condition minors, scaled to content 1\n";
  out << "R = QQ[";
  for (int v = 0; v < ring.size(); ++v) out << (v ? ", " : "") << ring.var(v).m2;
  out << "];\n";
  if (ideal.generators.empty()) {
    out << "I = ideal(0_R);\n";
  } else {
    out << "I = ideal(\n";
    for (std::size_t k = 0; k < ideal.generators.size(); ++k) {
      out << "    " << ideal.generators[k].to_string(NameStyle::Macaulay2) << (k + 1 < ideal.generators.size() ? ",\n" : "\n");
    }
    out << ");\n";
  }
  if (checks & kCasRadical) {
    script.checks.push_back("radical");
    out << "print(\"radical: \" | toString(radical I == I));\n";
  }
  if (checks & kCasDimension) {
    script.checks.push_back("dim");
    out << "print(\"dim: \" | toString(dim I) | \" (expected " << expected_dim << ")\");\n";
  }
  if (checks & kCasGorensteinType) {
    script.checks.push_back("gorensteinType");
    out << "-- Cohen-Macaulay type: minimal generators of the canonical module Ext^c(R/I, R)\n";
    out << "print(\"type: \" | toString(numgens prune Ext^(codim I)(comodule I, R)));\n";
  }
  if (checks & kCasMultiplicity) {
    script.checks.push_back("tangentCone");
    out << "-- multiplicity at the origin: degree of the tangent cone\n";
    out << "print(\"multiplicity: \" | toString(degree tangentCone I));\n";
  }
  script.text = out.str();
  return script;
}

}  // namespace orbitslice
