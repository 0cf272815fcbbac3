#pragma once

// JSON, LaTeX, DOT and Macaulay2 renderings. JSON positions are 1-based.

#include <string>
#include <vector>

#include "json.hpp"
#include "orbitslice/analysis.hpp"
#include "orbitslice/order.hpp"

namespace orbitslice {

using Json = nlohmann::ordered_json;

// Every *_from_json throws Error(BadJson) on malformed input.

Json to_json(const Clan& c);
Clan clan_from_json(const Json& j);

Json to_json(const Ring& ring);
RingPtr ring_from_json(const Json& j);

/// {"text": latex, "terms": [[coeff, [[var, exp], ...]], ...]} with 0-based var indices.
Json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j, const RingPtr& ring);

Json to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const Json& j);
Json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j, const RingPtr& ring);
Json to_json(const SymbolicMatrix& m);

Json to_json(const RankCondition& c);
RankCondition rank_condition_from_json(const Json& j);
Json to_json(const MarsSpringerIdeal& ideal);
MarsSpringerIdeal ideal_from_json(const Json& j);
Json to_json(const GroebnerBasis& gb);

Json to_json(const IntervalEmbedding& e);
IntervalEmbedding embedding_from_json(const Json& j);
Json to_json(const SingularityReport& r);
SingularityReport report_from_json(const Json& j);
Json to_json(const IsoVerification& v);
Json to_json(const TableRow& row);
Json to_json(const UpperIdealReport& r);

/// Rows of a LaTeX pmatrix body: four-space indent, " & " between entries,
/// " \\" after every row but the last.
std::string latex_matrix(const PolyMatrix& m);
std::string latex_matrix(const RationalMatrix& m);

/// "(12+12, 5, {+1-1+, -+++-})"
std::string format_tuple(const TableRow& row);

/// Hasse diagram, edges pointing up in length.
std::string emit_dot(const ClanPoset& poset);
std::string emit_dot(const ClanInterval& interval);

enum CasCheck : unsigned {
  kCasRadical = 1,
  kCasDimension = 2,
  kCasGorensteinType = 4,
  kCasMultiplicity = 8,
  kCasAll = 15,
};

struct CasScript {
  std::string dialect;  // "Macaulay2"
  std::string text;
  std::vector<std::string> checks;
};

inline constexpr const char* kCasExtension = ".m2.txt";

CasScript emit_cas(const MarsSpringerIdeal& ideal, unsigned checks = kCasAll);

}  // namespace orbitslice
