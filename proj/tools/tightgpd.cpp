// tightgpd: command-line front end.
//
// Exit codes: 0 success, 1 a validation or check failed, 2 unreadable
// input (bad JSON, schema error, unknown flag, size cap).

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tgpd/battery.hpp"
#include "tgpd/error.hpp"
#include "tgpd/gpd.hpp"
#include "tgpd/io.hpp"
#include "tgpd/spectrum.hpp"
#include "tgpd/tight.hpp"

using namespace tgpd;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string input;
  std::string second;
  std::string kind;
  bool json = false;
  bool dot = false;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_size = 6;
  std::vector<std::string> gen_kinds;
  std::vector<std::string> checks;
  bool fixtures = false;
  unsigned threads = 0;
};

void copy_as_advisory(ValidationReport &into, const ValidationReport &from,
                      const std::string &prefix) {
  for (const auto &c : from.checks()) {
    into.record(prefix + c.name, c.passed, c.witness.value_or(Witness{}), true);
  }
}

int emit(const ValidationReport &report, const Carrier *carrier, bool json) {
  if (json) {
    std::cout << io::to_json(report, carrier).dump(2) << "\n";
  } else {
    std::cout << report.to_text(carrier);
  }
  return report.ok() ? kOk : kFailed;
}

int cmd_validate(const Options &o) {
  const io::Document doc = io::load_document(o.input);
  const io::InputKind kind = o.kind.empty() ? io::detect_kind(doc) : io::parse_kind(o.kind);
  ValidationReport report;
  switch (kind) {
  case io::InputKind::Relation: {
    const RelStructure rel = io::read_relation(doc);
    report = validate_pseudobasis(rel);
    if (report.ok()) {
      copy_as_advisory(report, is_separative(rel), "");
    }
    return emit(report, &rel.carrier(), o.json);
  }
  case io::InputKind::Topology: {
    const io::TopologyInput in = io::read_topology(doc);
    for (const auto &w : in.warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    std::optional<FiniteSpace> space;
    try {
      space.emplace(in.points, in.opens);
      report.pass("topology");
    } catch (const InvalidStructure &e) {
      report.fail("topology", Witness{{}, e.what()});
      return emit(report, nullptr, o.json);
    }
    copy_as_advisory(report, classify(*space), "");
    if (in.members) {
      report.merge(is_pseudobasis(*space, *in.members), "pseudobasis.");
    }
    return emit(report, nullptr, o.json);
  }
  case io::InputKind::Semigroup: {
    const io::SemigroupInput in = io::read_semigroup(doc);
    report = validate_inverse_semigroup(in.elements, in.table);
    if (!report.ok()) {
      return emit(report, &in.elements, o.json);
    }
    const OrderedInvSemigroup s = io::build_semigroup(in);
    report.merge(validate_pseudobasic(s), "ordered.");
    return emit(report, &in.elements, o.json);
  }
  case io::InputKind::Groupoid: {
    const io::GroupoidInput in = io::read_groupoid(doc);
    report = validate_groupoid(in.groupoid);
    if (report.ok() && in.bisections) {
      report.merge(validate_etale_family(in.groupoid, *in.bisections), "etale.");
      report.merge(is_pseudobasis(FiniteSpace::discrete(in.groupoid.elements()),
                                  *in.bisections),
                   "pseudobasis.");
    }
    return emit(report, &in.groupoid.elements(), o.json);
  }
  }
  return kBadInput;
}

int cmd_tight(const Options &o) {
  const RelStructure rel = io::read_relation(io::load_document(o.input));
  const auto sets = enumerate_tight(rel);
  if (o.json) {
    io::Json out = io::Json::array();
    for (const auto &t : sets) {
      out.push_back(io::labels_json(rel.carrier(), t.members()));
    }
    std::cout << out.dump() << "\n";
    return kOk;
  }
  std::cout << "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::cout << (i ? "," : "") << rel.carrier().format(sets[i].members());
  }
  std::cout << "]\n";
  return kOk;
}

int cmd_spectrum(const Options &o) {
  const RelStructure rel = io::read_relation(io::load_document(o.input));
  const SpectrumSpace sp = build_spectrum(rel);
  if (o.dot) {
    std::cout << spectrum_dot(sp);
  } else {
    std::cout << io::spectrum_json(sp).dump(2) << "\n";
  }
  return kOk;
}

int cmd_groupoid(const Options &o) {
  const OrderedInvSemigroup s =
      io::build_semigroup(io::read_semigroup(io::load_document(o.input)));
  const TightGroupoid tg = tight_groupoid(s);
  if (!tg.report.ok()) {
    std::cerr << tg.report.to_text();
    return kFailed;
  }
  if (o.dot) {
    std::cout << groupoid_dot(tg.groupoid);
  } else {
    io::Json out = io::to_json(tg.groupoid, tg.family);
    io::Json idx = io::Json::array();
    for (std::size_t i : tg.family_index) {
      idx.push_back(s.base().elements().name(i));
    }
    out["family_of"] = idx;
    std::cout << out.dump(2) << "\n";
  }
  return kOk;
}

int cmd_recover(const Options &o) {
  const io::Document doc = io::load_document(o.input);
  const io::GroupoidInput in = io::read_groupoid(doc);
  const FiniteGroupoid &g = in.groupoid;
  std::vector<Subset> members;
  if (!o.second.empty()) {
    members = io::read_bisections(io::load_document(o.second), g);
  } else if (in.bisections) {
    members = *in.bisections;
  } else {
    for (std::size_t i = 0; i < g.size(); ++i) {
      members.push_back(Subset::singleton(g.size(), i));
    }
  }
  return emit(recover_groupoid(g, members), &g.elements(), o.json);
}

int cmd_battery(const Options &o) {
  std::vector<InstanceKind> kinds;
  for (const auto &k : o.gen_kinds) {
    try {
      kinds.push_back(parse_instance_kind(k));
    } catch (const PreconditionViolation &e) {
      throw ParseError(e.what());
    }
  }
  if (kinds.empty()) {
    kinds = {InstanceKind::Poset, InstanceKind::RoundTransitive,
             InstanceKind::MeetSemilattice, InstanceKind::InverseSemigroup,
             InstanceKind::DiscretePseudobasis};
  }
  const auto known = all_battery_checks();
  for (const auto &c : o.checks) {
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw ParseError("unknown check \"" + c + "\"");
    }
  }
  std::vector<Instance> instances;
  if (o.fixtures) {
    instances = fixture_instances();
  }
  for (const auto &spec : battery_corpus(o.seed, o.count, o.max_size, kinds)) {
    instances.push_back(gen_instance(spec));
  }
  const BatteryReport rep = run_battery(instances, o.checks, o.threads);
  if (o.json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << rep.to_text();
  }
  return rep.ok() ? kOk : kFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Tight spectra, tight groupoids and their checkers on finite carriers"};
  app.require_subcommand(1);
  Options o;

  auto *validate = app.add_subcommand("validate", "Validate a relation, topology, semigroup or groupoid file");
  validate->add_option("file", o.input, "Input JSON")->required();
  validate->add_option("--kind", o.kind, "relation|topology|semigroup|groupoid (default: by schema)");
  validate->add_flag("--json", o.json, "JSON report");

  auto *tight = app.add_subcommand("tight", "List the tight subsets of a relation");
  tight->add_option("file", o.input, "Relation JSON")->required();
  tight->add_flag("--json", o.json, "JSON output");

  auto *spectrum = app.add_subcommand("spectrum", "Tight spectrum of a relation");
  spectrum->add_option("file", o.input, "Relation JSON")->required();
  spectrum->add_flag("--dot", o.dot, "Graphviz point/open incidence");

  auto *groupoid = app.add_subcommand("groupoid", "Tight groupoid of an inverse semigroup");
  groupoid->add_option("file", o.input, "Semigroup JSON")->required();
  groupoid->add_flag("--dot", o.dot, "Graphviz rendering");

  auto *recover = app.add_subcommand("recover", "Recover a groupoid from an etale pseudobasis");
  recover->add_option("file", o.input, "Groupoid JSON")->required();
  recover->add_option("bisections", o.second, "Bisection list JSON (default: the file's \"bisections\", else singletons)");
  recover->add_flag("--json", o.json, "JSON report");

  auto *battery = app.add_subcommand("battery", "Run the property battery over a seeded corpus");
  battery->add_option("--seed", o.seed, "First seed")->capture_default_str();
  battery->add_option("--count", o.count, "Number of generated instances")->capture_default_str();
  battery->add_option("--max-size", o.max_size, "Element cap per instance")->capture_default_str();
  battery->add_option("--kind", o.gen_kinds, "Instance kinds (repeatable)");
  battery->add_option("--check", o.checks, "Check groups to run (repeatable; default all)");
  battery->add_flag("--fixtures", o.fixtures, "Also run the built-in fixtures");
  battery->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  battery->add_flag("--json", o.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*validate) {
      return cmd_validate(o);
    }
    if (*tight) {
      return cmd_tight(o);
    }
    if (*spectrum) {
      return cmd_spectrum(o);
    }
    if (*groupoid) {
      return cmd_groupoid(o);
    }
    if (*recover) {
      return cmd_recover(o);
    }
    if (*battery) {
      return cmd_battery(o);
    }
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const CapExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Defect &e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return kFailed;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kBadInput;
}
