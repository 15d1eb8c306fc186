#pragma once

// JSON readers and writers for relations, topologies, semigroups,
// groupoids, spectra and reports.
//
// Readers throw ParseError with a 1-based line number: for syntax errors
// from the parser's byte offset, for schema errors by locating the
// offending key or label in the source text.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgpd/fintop.hpp"
#include "tgpd/gpd.hpp"
#include "tgpd/invsemi.hpp"
#include "tgpd/relcore.hpp"
#include "tgpd/report.hpp"
#include "tgpd/spectrum.hpp"

namespace tgpd::io {

using Json = nlohmann::ordered_json;

struct Document {
  std::string source;
  std::string text;
  Json json;
};

Document parse_document(std::string text, std::string source = "<input>");
Document load_document(const std::string &path);

enum class InputKind { Relation, Topology, Semigroup, Groupoid };

/// By schema: "rel" → relation, "opens" → topology, "table" → semigroup,
/// "product" → groupoid.
InputKind detect_kind(const Document &doc);
/// "relation"/"rel", "topology"/"space", "semigroup", "groupoid".
InputKind parse_kind(const std::string &name);
const char *kind_name(InputKind kind);

/// {"elements": [...], "rel": [[a, b], ...]}; duplicate pairs are ignored.
RelStructure read_relation(const Document &doc);

struct TopologyInput {
  Carrier points;
  std::vector<Subset> opens;
  /// Optional "members": a candidate pseudobasis, as lists of point indices.
  std::optional<std::vector<Subset>> members;
  std::vector<std::string> warnings;
};
/// {"points": [...], "opens": [[0], ...]}. A point may be a string or a
/// list of labels (as written by the spectrum output), which is joined into
/// "{a,b}". ∅ and the full set are added with a warning when missing.
TopologyInput read_topology(const Document &doc);

struct SemigroupInput {
  Carrier elements;
  Table table;
  std::optional<std::size_t> zero;
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> prec;
};
/// {"elements", "table" (labels), optional "zero" and "prec" pairs}.
SemigroupInput read_semigroup(const Document &doc);
/// Builds the ordered semigroup; ≺ defaults to ≤. Throws InvalidStructure
/// when the table is not an inverse semigroup or "zero" is not a zero.
OrderedInvSemigroup build_semigroup(const SemigroupInput &in);

struct GroupoidInput {
  FiniteGroupoid groupoid;
  std::optional<std::vector<Subset>> bisections;
};
/// {"elements", "product": [[g, h, gh], ...], optional "inverse" map and
/// "bisections" (lists of labels)}. Missing inverses are derived from the
/// product: h with gh and hg both defined.
GroupoidInput read_groupoid(const Document &doc);
/// A "bisections" array, either at the top level of an object or as the
/// whole document.
std::vector<Subset> read_bisections(const Document &doc, const FiniteGroupoid &g);

Json subset_json(const Subset &s);
Json labels_json(const Carrier &c, const Subset &s);
Json to_json(const RelStructure &rel);
Json to_json(const FiniteSpace &space);
Json to_json(const OrderedInvSemigroup &s);
Json to_json(const FiniteGroupoid &g,
             const std::optional<std::vector<Subset>> &bisections = std::nullopt);
/// {"ok", "checks": [{"name", "passed", "advisory", "witness", "note"}]}.
Json to_json(const ValidationReport &report, const Carrier *carrier = nullptr);
/// {"points": [[labels]], "opens": [[indices]], "O_p": {label: [...]},
/// "O_up": {label: [...]}}.
Json spectrum_json(const SpectrumSpace &sp);

} // namespace tgpd::io
