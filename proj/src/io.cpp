#include "tgpd/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "tgpd/error.hpp"

namespace tgpd::io {

namespace {

std::size_t line_of_offset(const std::string &text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the first occurrence of "token" (quoted) in the source, or 0.
std::size_t line_of_token(const Document &doc, const std::string &token) {
  const auto pos = doc.text.find('"' + token + '"');
  return pos == std::string::npos ? 0 : line_of_offset(doc.text, pos);
}

[[noreturn]] void schema_error(const Document &doc, const std::string &msg,
                               const std::string &token) {
  throw ParseError(doc.source + ": " + msg, line_of_token(doc, token));
}

const Json &require(const Document &doc, const Json &obj, const char *key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(doc.source + ": missing key \"" + std::string(key) + "\"", 1);
  }
  return obj.at(key);
}

const Json &require_array(const Document &doc, const Json &obj, const char *key) {
  const Json &v = require(doc, obj, key);
  if (!v.is_array()) {
    schema_error(doc, "\"" + std::string(key) + "\" must be an array", key);
  }
  return v;
}

std::string as_label(const Document &doc, const Json &v, const char *ctx) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_number_integer()) {
    return std::to_string(v.get<long long>());
  }
  schema_error(doc, std::string(ctx) + ": expected a label, got " + v.dump(), ctx);
}

Carrier carrier_from(const Document &doc, const std::vector<std::string> &names,
                     const char *key) {
  std::set<std::string> seen;
  for (const auto &n : names) {
    if (n.empty()) {
      schema_error(doc, "empty label in \"" + std::string(key) + "\"", key);
    }
    if (!seen.insert(n).second) {
      schema_error(doc, "duplicate label \"" + n + "\"", n);
    }
  }
  if (names.empty()) {
    schema_error(doc, "\"" + std::string(key) + "\" must not be empty", key);
  }
  return Carrier(names);
}

Carrier read_elements(const Document &doc, const char *key = "elements") {
  std::vector<std::string> names;
  for (const auto &v : require_array(doc, doc.json, key)) {
    names.push_back(as_label(doc, v, key));
  }
  return carrier_from(doc, names, key);
}

std::size_t lookup(const Document &doc, const Carrier &c, const Json &v,
                   const char *ctx) {
  const std::string label = as_label(doc, v, ctx);
  if (auto i = c.find(label)) {
    return *i;
  }
  schema_error(doc, std::string(ctx) + ": unknown label \"" + label + "\"", label);
}

std::vector<std::pair<std::size_t, std::size_t>>
read_pairs(const Document &doc, const Carrier &c, const Json &arr, const char *key) {
  if (!arr.is_array()) {
    schema_error(doc, "\"" + std::string(key) + "\" must be an array of pairs", key);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto &p : arr) {
    if (!p.is_array() || p.size() != 2) {
      schema_error(doc, "\"" + std::string(key) + "\": expected [a, b], got " + p.dump(),
                   key);
    }
    out.emplace_back(lookup(doc, c, p[0], key), lookup(doc, c, p[1], key));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subset index_list(const Document &doc, std::size_t width, const Json &arr,
                  const char *key) {
  if (!arr.is_array()) {
    schema_error(doc, "\"" + std::string(key) + "\": expected a list of indices", key);
  }
  Subset s(width);
  for (const auto &v : arr) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= width) {
      schema_error(doc, "\"" + std::string(key) + "\": bad point index " + v.dump(), key);
    }
    s.set(v.get<std::size_t>());
  }
  return s;
}

Subset label_list(const Document &doc, const Carrier &c, const Json &arr,
                  const char *key) {
  if (!arr.is_array()) {
    schema_error(doc, "\"" + std::string(key) + "\": expected a list of labels", key);
  }
  Subset s = c.empty_set();
  for (const auto &v : arr) {
    s.set(lookup(doc, c, v, key));
  }
  return s;
}

Json witness_json(const Witness &w, const Carrier *carrier) {
  Json items = Json::array();
  const bool labelled = carrier != nullptr;
  for (const auto &item : w.items) {
    if (std::holds_alternative<std::size_t>(item)) {
      const std::size_t i = std::get<std::size_t>(item);
      if (labelled && i < carrier->size()) {
        items.push_back(carrier->name(i));
      } else {
        items.push_back(i);
      }
    } else {
      const Subset &s = std::get<Subset>(item);
      if (labelled && s.width() == carrier->size()) {
        items.push_back(labels_json(*carrier, s));
      } else {
        items.push_back(subset_json(s));
      }
    }
  }
  return items;
}

} // namespace

Document parse_document(std::string text, std::string source) {
  Document doc;
  doc.source = std::move(source);
  doc.text = std::move(text);
  try {
    doc.json = Json::parse(doc.text);
  } catch (const Json::parse_error &e) {
    throw ParseError(doc.source + ": malformed JSON (" + std::string(e.what()) + ")",
                     line_of_offset(doc.text, e.byte == 0 ? 0 : e.byte - 1));
  }
  return doc;
}

Document load_document(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

InputKind detect_kind(const Document &doc) {
  const Json &j = doc.json;
  if (!j.is_object()) {
    throw ParseError(doc.source + ": expected a JSON object", 1);
  }
  if (j.contains("rel")) {
    return InputKind::Relation;
  }
  if (j.contains("opens")) {
    return InputKind::Topology;
  }
  if (j.contains("table")) {
    return InputKind::Semigroup;
  }
  if (j.contains("product")) {
    return InputKind::Groupoid;
  }
  throw ParseError(doc.source +
                       ": cannot tell the input kind (expected one of the keys "
                       "\"rel\", \"opens\", \"table\", \"product\")",
                   1);
}

InputKind parse_kind(const std::string &name) {
  if (name == "relation" || name == "rel") {
    return InputKind::Relation;
  }
  if (name == "topology" || name == "space") {
    return InputKind::Topology;
  }
  if (name == "semigroup") {
    return InputKind::Semigroup;
  }
  if (name == "groupoid") {
    return InputKind::Groupoid;
  }
  throw ParseError("unknown kind \"" + name + "\"");
}

const char *kind_name(InputKind kind) {
  switch (kind) {
  case InputKind::Relation:
    return "relation";
  case InputKind::Topology:
    return "topology";
  case InputKind::Semigroup:
    return "semigroup";
  case InputKind::Groupoid:
    return "groupoid";
  }
  return "?";
}

RelStructure read_relation(const Document &doc) {
  Carrier c = read_elements(doc);
  const auto pairs = read_pairs(doc, c, require(doc, doc.json, "rel"), "rel");
  return RelStructure(std::move(c), pairs);
}

TopologyInput read_topology(const Document &doc) {
  TopologyInput in;
  std::vector<std::string> names;
  for (const auto &v : require_array(doc, doc.json, "points")) {
    if (v.is_array()) {
      std::string joined = "{";
      for (std::size_t k = 0; k < v.size(); ++k) {
        joined += (k ? "," : "") + as_label(doc, v[k], "points");
      }
      names.push_back(joined + "}");
    } else {
      names.push_back(as_label(doc, v, "points"));
    }
  }
  in.points = carrier_from(doc, names, "points");
  const std::size_t n = in.points.size();
  bool has_empty = false, has_full = false;
  for (const auto &o : require_array(doc, doc.json, "opens")) {
    Subset s = index_list(doc, n, o, "opens");
    has_empty = has_empty || s.empty();
    has_full = has_full || s.is_full();
    in.opens.push_back(s);
  }
  if (!has_full) {
    in.warnings.push_back("full point set missing from \"opens\"; added");
    in.opens.push_back(Subset::full(n));
  }
  if (!has_empty) {
    in.warnings.push_back("empty set missing from \"opens\"; added");
    in.opens.push_back(Subset(n));
  }
  if (doc.json.contains("members")) {
    std::vector<Subset> members;
    for (const auto &m : require_array(doc, doc.json, "members")) {
      members.push_back(index_list(doc, n, m, "members"));
    }
    in.members = std::move(members);
  }
  return in;
}

SemigroupInput read_semigroup(const Document &doc) {
  SemigroupInput in;
  in.elements = read_elements(doc);
  const std::size_t n = in.elements.size();
  const Json &rows = require_array(doc, doc.json, "table");
  if (rows.size() != n) {
    schema_error(doc, "\"table\" must have one row per element", "table");
  }
  for (const auto &row : rows) {
    if (!row.is_array() || row.size() != n) {
      schema_error(doc, "\"table\" rows must have one entry per element", "table");
    }
    std::vector<std::size_t> r;
    for (const auto &v : row) {
      r.push_back(lookup(doc, in.elements, v, "table"));
    }
    in.table.push_back(std::move(r));
  }
  if (doc.json.contains("zero") && !doc.json.at("zero").is_null()) {
    in.zero = lookup(doc, in.elements, doc.json.at("zero"), "zero");
  }
  if (doc.json.contains("prec")) {
    in.prec = read_pairs(doc, in.elements, doc.json.at("prec"), "prec");
  }
  return in;
}

OrderedInvSemigroup build_semigroup(const SemigroupInput &in) {
  InvSemigroup base(in.elements, in.table);
  if (in.zero && base.zero() != in.zero) {
    throw InvalidStructure("declared zero \"" + in.elements.name(*in.zero) +
                           "\" is not a zero of the table");
  }
  if (!in.prec) {
    return OrderedInvSemigroup(std::move(base));
  }
  RelStructure prec(in.elements, *in.prec);
  return OrderedInvSemigroup(std::move(base), std::move(prec));
}

GroupoidInput read_groupoid(const Document &doc) {
  Carrier c = read_elements(doc);
  const std::size_t n = c.size();
  std::vector<std::vector<std::size_t>> product(n, std::vector<std::size_t>(n, kUndefined));
  for (const auto &t : require_array(doc, doc.json, "product")) {
    if (!t.is_array() || t.size() != 3) {
      schema_error(doc, "\"product\": expected [g, h, gh], got " + t.dump(), "product");
    }
    const std::size_t g = lookup(doc, c, t[0], "product");
    const std::size_t h = lookup(doc, c, t[1], "product");
    const std::size_t gh = lookup(doc, c, t[2], "product");
    if (product[g][h] != kUndefined && product[g][h] != gh) {
      schema_error(doc, "\"product\": two values for " + c.name(g) + "·" + c.name(h),
                   c.name(g));
    }
    product[g][h] = gh;
  }
  std::vector<std::size_t> inv(n, kUndefined);
  if (doc.json.contains("inverse")) {
    const Json &m = doc.json.at("inverse");
    if (!m.is_object()) {
      schema_error(doc, "\"inverse\" must map labels to labels", "inverse");
    }
    for (const auto &[k, v] : m.items()) {
      const std::size_t g = lookup(doc, c, Json(k), "inverse");
      const std::size_t h = lookup(doc, c, v, "inverse");
      inv[g] = h;
      if (inv[h] == kUndefined) {
        inv[h] = g;
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n && inv[g] == kUndefined; ++h) {
      if (product[g][h] != kUndefined && product[h][g] != kUndefined &&
          product[product[g][h]][g] == g) {
        inv[g] = h;
      }
    }
    if (inv[g] == kUndefined) {
      schema_error(doc, "no inverse for \"" + c.name(g) + "\"", c.name(g));
    }
  }
  GroupoidInput out;
  out.groupoid = FiniteGroupoid(c, inv, product);
  if (doc.json.contains("bisections")) {
    out.bisections = read_bisections(doc, out.groupoid);
  }
  return out;
}

std::vector<Subset> read_bisections(const Document &doc, const FiniteGroupoid &g) {
  const Json *arr = &doc.json;
  if (doc.json.is_object()) {
    arr = &require_array(doc, doc.json, "bisections");
  }
  if (!arr->is_array()) {
    throw ParseError(doc.source + ": expected a list of bisections", 1);
  }
  std::vector<Subset> out;
  for (const auto &b : *arr) {
    out.push_back(label_list(doc, g.elements(), b, "bisections"));
  }
  return out;
}

Json subset_json(const Subset &s) {
  Json out = Json::array();
  s.for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

Json labels_json(const Carrier &c, const Subset &s) {
  Json out = Json::array();
  s.for_each([&](std::size_t i) { out.push_back(c.name(i)); });
  return out;
}

Json to_json(const RelStructure &rel) {
  Json out;
  out["elements"] = rel.carrier().names();
  Json pairs = Json::array();
  for (const auto &[a, b] : rel.pairs()) {
    pairs.push_back({rel.carrier().name(a), rel.carrier().name(b)});
  }
  out["rel"] = pairs;
  return out;
}

Json to_json(const FiniteSpace &space) {
  Json out;
  out["points"] = space.points().names();
  Json opens = Json::array();
  for (const auto &o : space.opens()) {
    opens.push_back(subset_json(o));
  }
  out["opens"] = opens;
  return out;
}

Json to_json(const OrderedInvSemigroup &s) {
  const InvSemigroup &b = s.base();
  const Carrier &c = b.elements();
  Json out;
  out["elements"] = c.names();
  Json table = Json::array();
  for (std::size_t x = 0; x < b.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < b.size(); ++y) {
      row.push_back(c.name(b.mul(x, y)));
    }
    table.push_back(row);
  }
  out["table"] = table;
  if (b.zero()) {
    out["zero"] = c.name(*b.zero());
  }
  Json prec = Json::array();
  for (const auto &[x, y] : s.prec().pairs()) {
    prec.push_back({c.name(x), c.name(y)});
  }
  out["prec"] = prec;
  return out;
}

Json to_json(const FiniteGroupoid &g, const std::optional<std::vector<Subset>> &bisections) {
  const Carrier &c = g.elements();
  Json out;
  out["elements"] = c.names();
  Json inv = Json::object();
  for (std::size_t x = 0; x < g.size(); ++x) {
    inv[c.name(x)] = c.name(g.inverse(x));
  }
  out["inverse"] = inv;
  Json product = Json::array();
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (g.composable(x, y)) {
        product.push_back({c.name(x), c.name(y), c.name(g.mul(x, y))});
      }
    }
  }
  out["product"] = product;
  if (bisections) {
    Json bs = Json::array();
    for (const auto &b : *bisections) {
      bs.push_back(labels_json(c, b));
    }
    out["bisections"] = bs;
  }
  return out;
}

Json to_json(const ValidationReport &report, const Carrier *carrier) {
  Json checks = Json::array();
  for (const auto &ch : report.checks()) {
    Json j;
    j["name"] = ch.name;
    j["passed"] = ch.passed;
    j["advisory"] = ch.advisory;
    if (ch.witness) {
      j["witness"] = witness_json(*ch.witness, carrier);
      j["note"] = ch.witness->note;
    } else {
      j["witness"] = nullptr;
      j["note"] = "";
    }
    checks.push_back(j);
  }
  Json out;
  out["ok"] = report.ok();
  out["checks"] = checks;
  return out;
}

Json spectrum_json(const SpectrumSpace &sp) {
  const Carrier &c = sp.base.carrier();
  Json out;
  Json points = Json::array();
  for (const auto &t : sp.points) {
    points.push_back(labels_json(c, t));
  }
  out["points"] = points;
  Json opens = Json::array();
  for (const auto &o : sp.space.opens()) {
    opens.push_back(subset_json(o));
  }
  out["opens"] = opens;
  Json op = Json::object(), oup = Json::object();
  for (std::size_t p = 0; p < c.size(); ++p) {
    op[c.name(p)] = subset_json(sp.O_p[p]);
    oup[c.name(p)] = subset_json(sp.O_up[p]);
  }
  out["O_p"] = op;
  out["O_up"] = oup;
  return out;
}

} // namespace tgpd::io
