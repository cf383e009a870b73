#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "gammalab/document.hpp"
#include "gammalab/enumerate.hpp"
#include "gammalab/error.hpp"
#include "gammalab/lab.hpp"
#include "report.hpp"

namespace gammalab::cli {
namespace {

enum Exit { kOk = 0, kCounterexample = 1, kInputError = 2, kCapExceeded = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Usage, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Subset parse_set(std::string_view text, int n) {
  Subset s;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    const int p = std::stoi(digits);
    if (p >= n) throw Error(ErrorCode::PointOutOfRange, "point " + digits + " is not in the space");
    s = s.with(p);
    digits.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      if (digits.size() > 2) throw Error(ErrorCode::PointOutOfRange, "point out of range");
      digits += c;
    } else if (c == ',' || c == ' ' || c == '{' || c == '}') {
      flush();
    } else {
      throw Error(ErrorCode::Usage, "bad set '" + std::string(text) + "'");
    }
  }
  flush();
  return s;
}

const std::map<std::string, ClosedDef> kClosedDefs{{"complement", ClosedDef::Complement},
                                                   {"closurepoint", ClosedDef::ClosurePoint}};

std::vector<ClosedDef> closed_defs(const std::string& name) {
  if (name == "both") return {ClosedDef::Complement, ClosedDef::ClosurePoint};
  return {kClosedDefs.at(name)};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Loaded {
  Document doc;
  const NamedOperation* op = nullptr;
};

Loaded load_op(const std::string& file, const std::string& space, const std::string& op) {
  Loaded l{parse_document(read_file(file)), nullptr};
  l.op = &l.doc.operation(op);
  if (!space.empty() && l.op->space != space) {
    l.doc.space(space);
    throw Error(ErrorCode::UnknownReference, "operation " + op + " is not on space " + space);
  }
  return l;
}

// Shared flags of check, search and audit.
struct LabFlags {
  int max_points = 3;
  std::string ops = "builtins";
  std::string closed_def = "complement";
  std::string open_dir = "paper";
  std::string policy = "union";
  int workers = 1;
  int map_samples = 64;
  std::uint64_t map_seed = 0x5eed;
  std::uint64_t cap = 500'000'000;
  bool mixed_ops = false;

  void add(CLI::App* app) {
    app->add_option("--max-points", max_points, "Largest space size")->check(CLI::Range(1, 6));
    app->add_option("--ops", ops, "builtins, random:K:SEED or exhaustive");
    app->add_option("--closed-def", closed_def, "Closed-set definition")
        ->check(CLI::IsMember({"complement", "closurepoint", "both"}));
    app->add_option("--open-dir", open_dir, "Direction of the open-operation test")
        ->check(CLI::IsMember({"paper", "standard"}));
    app->add_option("--subspace-policy", policy, "Induced subspace operation policy")
        ->check(CLI::IsMember({"union", "flag-ambiguous"}));
    app->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 256));
    app->add_option("--map-samples", map_samples, "Random maps per space pair beyond 3 points")
        ->check(CLI::Range(1, 1 << 20));
    app->add_option("--map-seed", map_seed, "Seed for sampled maps");
    app->add_option("--instance-cap", cap, "Largest grid to visit");
    app->add_flag("--mixed-ops", mixed_ops, "Cross all operations even where a statement names one γ");
  }

  CheckOptions options() const {
    CheckOptions o;
    o.max_points = max_points;
    o.ops = OpSource::parse(ops);
    o.closed_defs = closed_defs(closed_def);
    o.open_dir = open_dir == "paper" ? OpenDirection::Paper : OpenDirection::Standard;
    o.policy = policy == "union" ? SubspacePolicy::Union : SubspacePolicy::FlagAmbiguous;
    o.workers = workers;
    o.map_samples = map_samples;
    o.map_seed = map_seed;
    o.mixed_ops = mixed_ops;
    o.instance_cap = cap;
    return o;
  }
};

std::vector<const TheoremSpec*> theorems(const std::string& selector) {
  auto specs = select_theorems(selector);
  if (specs.empty()) throw Error(ErrorCode::Usage, "no theorem matches '" + selector + "'");
  return specs;
}

void print_document(std::ostream& out, const std::string& doc) {
  std::istringstream lines(doc);
  for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
}

void print_summary(std::ostream& out, const Summary& s) {
  out << std::left << std::setw(20) << s.theorem << ' ' << (s.counterexamples ? "FAILS" : "holds")
      << "  instances=" << s.instances << " holds=" << s.holds << " vacuous=" << s.vacuous
      << " counterexamples=" << s.counterexamples << " skipped=" << s.skipped
      << " not-applicable=" << s.not_applicable << '\n';
  for (const auto& [name, count] : s.skipped_by) out << "    skipped by " << name << ": " << count << '\n';
  if (const auto& v = s.first_counterexample) {
    out << "  first counterexample #" << v->index << " [closed-def=" << to_string(v->config.closed_def)
        << "]: " << v->witness.to_string() << '\n';
    print_document(out, v->recipe.to_document());
  }
}

int cmd_validate(const std::string& file, bool machine, std::ostream& out) {
  const Document doc = parse_document(read_file(file));
  if (machine) {
    out << report::Json{{"type", "validate"},
                        {"valid", true},
                        {"spaces", doc.spaces.size()},
                        {"operations", doc.operations.size()},
                        {"maps", doc.maps.size()}}
               .dump()
        << '\n';
  } else {
    out << "valid: " << doc.spaces.size() << " spaces, " << doc.operations.size() << " operations, "
        << doc.maps.size() << " maps\n";
  }
  return kOk;
}

int cmd_enumerate(int n, bool iso, bool count_only, bool machine, std::ostream& out) {
  const auto spaces = enumerate_topologies(n, iso);
  if (count_only) {
    if (machine) {
      out << report::Json{{"type", "count"}, {"points", n}, {"up_to_iso", iso}, {"count", spaces.size()}}.dump()
          << '\n';
    } else {
      out << spaces.size() << '\n';
    }
    return kOk;
  }
  for (const FiniteSpace& s : spaces) {
    if (machine) {
      report::Json opens = report::Json::array();
      for (Subset u : s.opens()) opens.push_back(report::to_json(u));
      out << report::Json{{"points", n}, {"opens", opens}}.dump() << '\n';
    } else {
      bool first = true;
      for (Subset u : s.opens()) {
        out << (first ? "" : " ") << to_spaced_string(u);
        first = false;
      }
      out << '\n';
    }
  }
  return kOk;
}

int cmd_families(const Loaded& l, bool machine, std::ostream& out) {
  const Operation& op = l.op->op;
  const SemiCalculus comp(op, ClosedDef::Complement);
  const SemiCalculus point(op, ClosedDef::ClosurePoint);
  const std::vector<std::pair<std::string, const SubsetFamily*>> rows{
      {"gamma-open", &comp.gamma_open()},
      {"gamma-closed[complement]", &comp.gamma_closed()},
      {"gamma-closed[closurepoint]", &point.gamma_closed()},
      {"semi-open", &comp.semi_open()},
      {"semi-closed[complement]", &comp.semi_closed()},
      {"semi-closed[closurepoint]", &point.semi_closed()},
  };
  if (machine) {
    report::Json j{{"type", "families"}};
    for (const auto& [name, fam] : rows) {
      report::Json sets = report::Json::array();
      fam->for_each([&](Subset s) { sets.push_back(report::to_json(s)); });
      j[name] = sets;
    }
    out << j.dump() << '\n';
    return kOk;
  }
  for (const auto& [name, fam] : rows) out << name << ": " << to_string(*fam) << '\n';
  return kOk;
}

int cmd_compute(const Loaded& l, const std::string& set, const std::string& what, const std::string& closed_def,
                bool machine, std::ostream& out) {
  const SemiCalculus c(l.op->op, kClosedDefs.at(closed_def));
  const Subset a = parse_set(set, c.points());
  const GammaCalculus& g = c.gamma();
  Subset r;
  if (what == "intg") r = g.int_gamma(a);
  else if (what == "clg") r = g.cl_gamma(a);
  else if (what == "ext") r = g.ext_gamma(a);
  else if (what == "bd") r = g.bd_gamma(a);
  else if (what == "dgamma") r = g.gamma_derived(a);
  else if (what == "scl") r = c.scl(a);
  else if (what == "sint") r = c.sint(a);
  else r = c.sd(a);
  if (machine) {
    out << report::Json{{"type", "compute"}, {"what", what}, {"set", report::to_json(a)}, {"result", report::to_json(r)}}
               .dump()
        << '\n';
  } else {
    out << to_string(r) << '\n';
  }
  return kOk;
}

int cmd_classify_op(const Loaded& l, bool machine, std::ostream& out) {
  const OperationProfile p = profile(l.op->op);
  const std::vector<std::pair<const char*, bool>> rows{{"monotone", p.monotone},
                                                        {"regular", p.regular},
                                                        {"open[paper]", p.open_paper},
                                                        {"open[standard]", p.open_standard},
                                                        {"closed-defs-agree", p.closed_defs_agree}};
  if (machine) {
    report::Json j{{"type", "profile"}};
    for (const auto& [name, v] : rows) j[name] = v;
    out << j.dump() << '\n';
  } else {
    for (const auto& [name, v] : rows) out << name << ": " << yes_no(v) << '\n';
  }
  return kOk;
}

int cmd_classify_map(const std::string& file, const std::string& name, const std::string& closed_def,
                     bool machine, std::ostream& out) {
  const Document doc = parse_document(read_file(file));
  const NamedMap& m = doc.map(name);
  auto op_for = [&](const std::optional<std::string>& op, const std::string& space) {
    if (op) return doc.operation(*op).op;
    return Operation::builtin(doc.space(space).space, OperationKind::Identity);
  };
  const ClosedDef def = kClosedDefs.at(closed_def);
  const SemiCalculus dom(op_for(m.gamma, m.dom), def);
  const SemiCalculus cod(op_for(m.beta, m.cod), def);
  const PointMap f(dom, cod, m.table);
  const std::vector<std::tuple<const char*, MapVerdict, const char*>> rows{
      {"gamma-semi-continuous", is_gamma_semi_continuous(f), "B"},
      {"gamma-semi-open", is_gamma_semi_open_map(f), "U"},
      {"gamma-semi-closed", is_gamma_semi_closed_map(f), "F"},
      {"gamma-beta-continuous", is_gb_continuous(f, ContinuityMode::Pointwise), "V"},
      {"gamma-beta-open", is_gb_open_map(f), "A"},
      {"gamma-beta-closed", is_gb_closed_map(f), "F"},
  };
  report::Json j{{"type", "map-profile"}, {"map", name}};
  for (const auto& [label, v, set_name] : rows) {
    if (machine) {
      report::Json row{{"holds", v.holds}};
      if (!v.holds) {
        row["witness"] = report::Json{{set_name, report::to_json(v.witness)}};
        if (v.point >= 0) row["witness"]["x"] = v.point;
      }
      j[label] = row;
      continue;
    }
    out << label << ": " << yes_no(v.holds);
    if (!v.holds) {
      out << " (" << set_name << " = " << to_string(v.witness);
      if (v.point >= 0) out << ", x = " << v.point;
      out << ')';
    }
    out << '\n';
  }
  if (machine) out << j.dump() << '\n';
  return kOk;
}

int cmd_check(const std::string& selector, const LabFlags& flags, bool all_verdicts, bool machine,
              std::optional<std::uint64_t> shuffle, std::ostream& out) {
  CheckOptions options = flags.options();
  options.keep_all_verdicts = all_verdicts;
  options.shuffle_seed = shuffle;
  bool failed = false;
  for (const TheoremSpec* spec : theorems(selector)) {
    const CheckReport r = check_theorem(*spec, options);
    failed = failed || r.summary.counterexamples > 0;
    if (machine) {
      for (const Verdict& v : r.verdicts) out << report::to_json(v).dump() << '\n';
      out << report::to_json(r.summary).dump() << '\n';
    } else {
      print_summary(out, r.summary);
    }
    out.flush();
  }
  return failed ? kCounterexample : kOk;
}

int cmd_search(const std::string& selector, const std::string& drop_list, const LabFlags& flags,
               std::uint64_t budget, bool machine, std::ostream& out) {
  std::vector<HypothesisKind> drop;
  std::vector<std::string> names;
  std::stringstream ss(drop_list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    const auto kind = parse_hypothesis_kind(item);
    if (!kind) throw Error(ErrorCode::Usage, "unknown hypothesis '" + item + "'");
    drop.push_back(*kind);
    names.push_back(to_string(*kind));
  }
  const CheckOptions options = flags.options();
  bool found = false;
  bool exhausted = false;
  for (const TheoremSpec* spec : theorems(selector)) {
    const SearchResult r = search_counterexample(*spec, drop, options, budget);
    found = found || r.counterexample.has_value();
    exhausted = exhausted || r.budget_exhausted;
    const char* status =
        r.counterexample ? "counterexample" : r.budget_exhausted ? "budget-exhausted" : "grid-exhausted";
    if (machine) {
      report::Json j{{"type", "search"},   {"theorem", spec->id},      {"dropped", names},
                     {"status", status},   {"evaluated", r.evaluated}, {"skipped", r.skipped}};
      if (r.counterexample) j["verdict"] = report::to_json(*r.counterexample);
      out << j.dump() << '\n';
      continue;
    }
    out << spec->id << " without {";
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
    out << "}: " << status << " after " << r.evaluated << " instances (" << r.skipped << " skipped)\n";
    if (r.counterexample) {
      const Verdict& v = *r.counterexample;
      out << "  counterexample #" << v.index << " [closed-def=" << to_string(v.config.closed_def)
          << "]: " << v.witness.to_string() << '\n';
      print_document(out, v.recipe.to_document());
    }
  }
  if (found) return kCounterexample;
  return exhausted ? kCapExceeded : kOk;
}

int cmd_audit(const LabFlags& flags, bool machine, std::ostream& out) {
  const CheckOptions options = flags.options();
  if (!machine) {
    out << std::left << std::setw(20) << "theorem" << std::setw(12) << "variant" << std::right << std::setw(12)
        << "instances" << std::setw(10) << "holds" << std::setw(10) << "vacuous" << std::setw(10) << "fails"
        << std::setw(10) << "skipped" << std::setw(10) << "n/a" << '\n';
  }
  for (const char* group : {"T3.8", "T3.14"}) {
    for (const TheoremSpec* spec : select_theorems(group)) {
      const Summary s = check_theorem(*spec, options).summary;
      if (machine) {
        report::Json j = report::to_json(s);
        j["type"] = "audit";
        j["variant"] = to_string(spec->variant);
        out << j.dump() << '\n';
        continue;
      }
      out << std::left << std::setw(20) << spec->id << std::setw(12) << to_string(spec->variant) << std::right
          << std::setw(12) << s.instances << std::setw(10) << s.holds << std::setw(10) << s.vacuous
          << std::setw(10) << s.counterexamples << std::setw(10) << s.skipped << std::setw(10)
          << s.not_applicable << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-space laboratory for operation-generated topologies", "gammalab"};
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  app.add_flag("--machine", machine, "Line-delimited JSON output");

  std::string file;
  std::string space;
  std::string op;
  std::string closed_def = "complement";

  auto* validate = app.add_subcommand("validate", "Parse and validate a document");
  validate->add_option("file", file, "Document")->required();

  int points = 3;
  bool iso = false;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List topologies on n points");
  enumerate->add_option("--points", points, "Number of points")->required()->check(CLI::Range(1, 6));
  enumerate->add_flag("--up-to-iso", iso, "One space per homeomorphism class");
  enumerate->add_flag("--count-only", count_only, "Print only the count");

  auto add_op_options = [&](CLI::App* sub) {
    sub->add_option("--file", file, "Document")->required();
    sub->add_option("--space", space, "Space name");
    sub->add_option("--op", op, "Operation name")->required();
  };
  auto* families = app.add_subcommand("families", "Print the generated families");
  add_op_options(families);

  std::string set;
  std::string what;
  auto* compute = app.add_subcommand("compute", "Apply a hull or kernel operator to a set");
  add_op_options(compute);
  compute->add_option("--set", set, "Points, e.g. \"0,2\"")->required();
  compute->add_option("--what", what, "Operator")
      ->required()
      ->check(CLI::IsMember({"intg", "clg", "ext", "bd", "dgamma", "scl", "sint", "sd"}));
  compute->add_option("--closed-def", closed_def, "Closed-set definition")
      ->check(CLI::IsMember({"complement", "closurepoint"}));

  auto* classify_op = app.add_subcommand("classify-op", "Profile flags of an operation");
  add_op_options(classify_op);

  std::string map_name;
  auto* classify_map = app.add_subcommand("classify-map", "Map predicates with witnesses");
  classify_map->add_option("--file", file, "Document")->required();
  classify_map->add_option("--map", map_name, "Map name")->required();
  classify_map->add_option("--closed-def", closed_def, "Closed-set definition")
      ->check(CLI::IsMember({"complement", "closurepoint"}));

  std::string theorem;
  LabFlags lab;
  bool all_verdicts = false;
  std::optional<std::uint64_t> shuffle;
  auto* check = app.add_subcommand("check", "Check theorems over the instance grid");
  check->add_option("--theorem", theorem, "Theorem id, group or 'all'")->required();
  lab.add(check);
  check->add_flag("--all-verdicts", all_verdicts, "Emit every verdict, not only counterexamples");
  check->add_option("--shuffle-seed", shuffle, "Permute evaluation order");

  std::string drop;
  std::uint64_t budget = 10'000'000;
  auto* search = app.add_subcommand("search", "Look for a counterexample with hypotheses dropped");
  search->add_option("--theorem", theorem, "Theorem id or group")->required();
  search->add_option("--drop", drop, "Comma-separated hypothesis names");
  search->add_option("--budget", budget, "Largest number of instances to visit");
  lab.add(search);

  auto* audit = app.add_subcommand("audit", "Side-by-side tallies of the T3.8 and T3.14 variants");
  lab.add(audit);

  auto* list = app.add_subcommand("list", "List the theorem registry");

  std::vector<std::string> argv_storage{"gammalab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(file, machine, out);
    if (*enumerate) return cmd_enumerate(points, iso, count_only, machine, out);
    if (*families) return cmd_families(load_op(file, space, op), machine, out);
    if (*compute) return cmd_compute(load_op(file, space, op), set, what, closed_def, machine, out);
    if (*classify_op) return cmd_classify_op(load_op(file, space, op), machine, out);
    if (*classify_map) return cmd_classify_map(file, map_name, closed_def, machine, out);
    if (*check) return cmd_check(theorem, lab, all_verdicts, machine, shuffle, out);
    if (*search) return cmd_search(theorem, drop, lab, budget, machine, out);
    if (*audit) return cmd_audit(lab, machine, out);
    if (*list) {
      for (const TheoremSpec& s : registry()) {
        out << std::left << std::setw(20) << s.id << ' ' << std::setw(12) << to_string(s.shape) << ' '
            << s.statement;
        if (!s.hypotheses.empty()) {
          out << "  [";
          for (std::size_t i = 0; i < s.hypotheses.size(); ++i) out << (i ? ", " : "") << s.hypotheses[i].name();
          out << ']';
        }
        out << '\n';
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::CapExceeded ? kCapExceeded : kInputError;
  }
  return kInputError;
}

}  // namespace gammalab::cli
