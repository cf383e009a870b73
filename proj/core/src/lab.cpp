#include "gammalab/lab.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <thread>

#include "gammalab/document.hpp"
#include "gammalab/enumerate.hpp"
#include "gammalab/error.hpp"

namespace gammalab {

OpEntry make_op_entry(Operation op) {
  OpEntry e{op, profile(op), {}};
  e.calc.emplace_back(op, ClosedDef::Complement);
  e.calc.emplace_back(std::move(op), ClosedDef::ClosurePoint);
  return e;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const int base = text.starts_with("0x") ? 16 : 10;
  if (base == 16) text.remove_prefix(2);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::Usage, "bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

OpSource OpSource::parse(std::string_view text) {
  if (text == "builtins") return OpSource{};
  if (text == "exhaustive") return OpSource{Kind::Exhaustive, 0, 0};
  if (text.starts_with("random:")) {
    text.remove_prefix(7);
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
      const std::uint64_t count = parse_u64(text.substr(0, colon), "operation count");
      const std::uint64_t seed = parse_u64(text.substr(colon + 1), "seed");
      if (count > 100000) throw Error(ErrorCode::Usage, "operation count too large");
      return OpSource{Kind::Random, static_cast<int>(count), seed};
    }
  }
  throw Error(ErrorCode::Usage, "op source must be builtins, random:K:SEED or exhaustive");
}

std::string OpSource::to_string() const {
  switch (kind) {
    case Kind::Builtins: return "builtins";
    case Kind::Exhaustive: return "exhaustive";
    case Kind::Random: return "random:" + std::to_string(count) + ":" + std::to_string(seed);
  }
  return "builtins";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Counterexample: return "counterexample";
    case Outcome::HypothesesNotMet: return "hypotheses-not-met";
    case Outcome::NotApplicable: return "not-applicable";
  }
  return "holds";
}

std::string InstanceRecipe::to_document() const {
  static const char* const space_names[] = {"X", "Y", "Z"};
  static const char* const op_names[] = {"gamma", "beta", "alpha"};
  Document doc;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    doc.spaces.push_back({space_names[i], spaces[i]});
    doc.operations.push_back({op_names[i], space_names[i], ops[i]});
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    doc.maps.push_back({i == 0 ? "f" : "g", space_names[i], space_names[i + 1], maps[i],
                        std::string(op_names[i]), std::string(op_names[i + 1])});
  }
  std::string out = render(doc);
  if (shape == Shape::SpaceSubset) out += "# subset B = " + to_spaced_string(subset) + "\n";
  return out;
}

void Summary::merge(const Summary& other) {
  instances += other.instances;
  holds += other.holds;
  vacuous += other.vacuous;
  counterexamples += other.counterexamples;
  skipped += other.skipped;
  not_applicable += other.not_applicable;
  for (const auto& [name, count] : other.skipped_by) skipped_by[name] += count;
  if (other.first_counterexample &&
      (!first_counterexample || other.first_counterexample->index < first_counterexample->index)) {
    first_counterexample = other.first_counterexample;
  }
}

namespace {

int slot_count(Shape shape) {
  switch (shape) {
    case Shape::Space:
    case Shape::SpaceSubset: return 1;
    case Shape::Map: return 2;
    case Shape::MapPair: return 3;
  }
  return 1;
}

int map_count(Shape shape) { return shape == Shape::MapPair ? 2 : shape == Shape::Map ? 1 : 0; }

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Spaces, their operations and the maps between them, shared read-only by
// every worker.
class Universe {
 public:
  Universe(Shape shape, const CheckOptions& options) : options_(options) {
    if (options.max_points < 1 || options.max_points > kMaxPoints) {
      throw Error(ErrorCode::CapExceeded, "max points must be between 1 and " + std::to_string(kMaxPoints));
    }
    // Triples of labeled spaces are far too many; a map pair is checked on
    // one representative per homeomorphism class.
    const bool up_to_iso = shape == Shape::MapPair;
    for (int n = 1; n <= options.max_points; ++n) {
      for (FiniteSpace& s : enumerate_topologies(n, up_to_iso)) raw_.push_back(std::move(s));
    }
  }

  std::uint64_t op_count(std::size_t space) const {
    const FiniteSpace& s = raw_[space];
    switch (options_.ops.kind) {
      case OpSource::Kind::Builtins: return 3;
      case OpSource::Kind::Random: return 3 + static_cast<std::uint64_t>(options_.ops.count);
      case OpSource::Kind::Exhaustive: {
        const std::uint64_t all = count_operations(s);
        if (all > options_.exhaustive_ops_cap) {
          throw Error(ErrorCode::CapExceeded, "space has " + std::to_string(all) + " operations, cap is " +
                                                  std::to_string(options_.exhaustive_ops_cap));
        }
        return all;  // builtins first, then every other table
      }
    }
    return 3;
  }

  void build() {
    entries_.reserve(raw_.size());
    for (const FiniteSpace& s : raw_) {
      SpaceEntry entry{s, {}};
      std::vector<Operation> builtins = builtin_operations(s);
      for (const Operation& op : builtins) entry.ops.push_back(make_op_entry(op));
      if (options_.ops.kind == OpSource::Kind::Random) {
        const std::uint64_t seed = splitmix(options_.ops.seed ^ splitmix(s.open_family().word() ^
                                                                          static_cast<std::uint64_t>(s.points())));
        for (Operation& op : sample_operations(s, options_.ops.count, seed)) {
          entry.ops.push_back(make_op_entry(std::move(op)));
        }
      } else if (options_.ops.kind == OpSource::Kind::Exhaustive) {
        for_each_operation(s, options_.exhaustive_ops_cap, [&](const Operation& op) {
          for (const Operation& b : builtins) {
            if (b == op) return;
          }
          entry.ops.push_back(make_op_entry(op));
        });
      }
      entries_.push_back(std::move(entry));
    }
  }

  std::size_t spaces() const { return raw_.size(); }
  int points(std::size_t space) const { return raw_[space].points(); }
  const SpaceEntry& entry(std::size_t space) const { return entries_[space]; }

  std::uint64_t map_total(std::size_t from, std::size_t to) const {
    const int a = points(from);
    const int b = points(to);
    if (full_maps(a, b)) return ipow(static_cast<std::uint64_t>(b), a);
    return static_cast<std::uint64_t>(options_.map_samples);
  }

  std::vector<std::vector<int>> maps(std::size_t from, std::size_t to) const {
    const int a = points(from);
    const int b = points(to);
    if (full_maps(a, b)) return all_functions(a, b);
    std::mt19937_64 rng(splitmix(options_.map_seed ^ splitmix((from << 20) ^ to)));
    std::vector<std::vector<int>> out(options_.map_samples, std::vector<int>(a));
    for (auto& table : out) {
      for (int& y : table) y = static_cast<int>(rng() % static_cast<std::uint64_t>(b));
    }
    return out;
  }

 private:
  bool full_maps(int a, int b) const { return a <= options_.all_maps_up_to && b <= options_.all_maps_up_to; }

  const CheckOptions& options_;
  std::vector<FiniteSpace> raw_;
  std::vector<SpaceEntry> entries_;
};

constexpr std::size_t kBuiltins = 3;

struct Block {
  int def = 0;  // index into options.closed_defs
  std::array<std::size_t, 3> space{};
  std::array<std::size_t, 3> op{};
  std::uint64_t count = 0;
  std::uint64_t offset = 0;  // canonical index of the block's first instance
};

std::vector<Block> make_blocks(const TheoremSpec& spec, const Universe& u, const CheckOptions& options) {
  const Shape shape = spec.shape;
  const bool paired = spec.shared_op && !options.mixed_ops;
  const int slots = slot_count(shape);
  std::vector<std::uint64_t> ops(u.spaces());
  for (std::size_t s = 0; s < u.spaces(); ++s) ops[s] = u.op_count(s);

  std::vector<Block> blocks;
  std::uint64_t offset = 0;
  std::array<std::size_t, 3> sp{};
  std::array<std::size_t, 3> op{};
  for (int def = 0; def < static_cast<int>(options.closed_defs.size()); ++def) {
    // Odometers over space tuples, then over operation tuples.
    std::function<void(int)> spaces_rec;
    std::function<void(int)> ops_rec;
    ops_rec = [&](int k) {
      if (k == slots) {
        Block b{def, sp, op, 0, offset};
        switch (shape) {
          case Shape::Space: b.count = 1; break;
          case Shape::SpaceSubset: b.count = (1u << u.points(sp[0])) - 1; break;
          case Shape::Map: b.count = u.map_total(sp[0], sp[1]); break;
          case Shape::MapPair: b.count = u.map_total(sp[0], sp[1]) * u.map_total(sp[1], sp[2]); break;
        }
        offset += b.count;
        if (offset > options.instance_cap) {
          throw Error(ErrorCode::CapExceeded,
                      "instance grid exceeds cap of " + std::to_string(options.instance_cap));
        }
        blocks.push_back(b);
        return;
      }
      if (paired && k > 0 && op[0] < kBuiltins) {
        op[k] = op[0];
        ops_rec(k + 1);
        return;
      }
      for (op[k] = paired && k > 0 ? kBuiltins : 0; op[k] < ops[sp[k]]; ++op[k]) ops_rec(k + 1);
    };
    spaces_rec = [&](int k) {
      if (k == slots) {
        ops_rec(0);
        return;
      }
      for (sp[k] = 0; sp[k] < u.spaces(); ++sp[k]) spaces_rec(k + 1);
    };
    spaces_rec(0);
  }
  return blocks;
}

// Visits every instance of a block in canonical order. The visitor returns
// false to stop.
template <class Visitor>
bool visit_block(const TheoremSpec& spec, const Universe& u, const Block& b, const CheckOptions& options,
                 Visitor&& visit) {
  const LabConfig config{options.closed_defs[b.def], options.open_dir, options.policy};
  Instance inst(spec.shape, config);
  const int slots = slot_count(spec.shape);
  for (int k = 0; k < slots; ++k) {
    const SpaceEntry& e = u.entry(b.space[k]);
    inst.set_slot(k, e, e.ops[b.op[k]]);
  }
  std::uint64_t index = b.offset;
  std::vector<const std::vector<int>*> tables(2, nullptr);
  switch (spec.shape) {
    case Shape::Space:
      return visit(inst, index, tables);
    case Shape::SpaceSubset: {
      const unsigned n = static_cast<unsigned>(u.points(b.space[0]));
      for (unsigned s = 1; s < (1u << n); ++s) {
        inst.set_subset(Subset(s));
        if (!visit(inst, index++, tables)) return false;
      }
      return true;
    }
    case Shape::Map: {
      for (const auto& f : u.maps(b.space[0], b.space[1])) {
        inst.set_f(f);
        tables[0] = &f;
        if (!visit(inst, index++, tables)) return false;
      }
      return true;
    }
    case Shape::MapPair: {
      const auto gs = u.maps(b.space[1], b.space[2]);
      for (const auto& f : u.maps(b.space[0], b.space[1])) {
        inst.set_f(f);
        tables[0] = &f;
        for (const auto& g : gs) {
          inst.set_g(g);
          tables[1] = &g;
          if (!visit(inst, index++, tables)) return false;
        }
      }
      return true;
    }
  }
  return true;
}

InstanceRecipe make_recipe(const Instance& inst, const std::vector<const std::vector<int>*>& tables) {
  InstanceRecipe r;
  r.shape = inst.shape();
  for (int k = 0; k < inst.slots(); ++k) {
    r.spaces.push_back(inst.space_entry(k).space);
    r.ops.push_back(inst.calc(k).op());
  }
  for (int k = 0; k < map_count(inst.shape()); ++k) r.maps.push_back(*tables[k]);
  r.subset = inst.subset();
  return r;
}

struct Evaluation {
  Outcome outcome = Outcome::Holds;
  ClaimResult claim;
  std::vector<std::string> unmet;
};

Evaluation evaluate_instance(const TheoremSpec& spec, const Instance& inst,
                             const std::vector<HypothesisKind>& drop) {
  Evaluation e;
  for (const Hypothesis& h : spec.hypotheses) {
    if (std::find(drop.begin(), drop.end(), h.kind) != drop.end()) continue;
    if (!evaluate(h, inst)) e.unmet.push_back(h.name());
  }
  if (!e.unmet.empty()) {
    e.outcome = Outcome::HypothesesNotMet;
    return e;
  }
  e.claim = spec.claim(inst);
  if (!e.claim.applicable) {
    e.outcome = Outcome::NotApplicable;
  } else if (!e.claim.holds) {
    e.outcome = Outcome::Counterexample;
  }
  return e;
}

Verdict make_verdict(const TheoremSpec& spec, const Instance& inst, std::uint64_t index, Evaluation&& e,
                     const std::vector<const std::vector<int>*>& tables) {
  Verdict v;
  v.theorem = spec.id;
  v.index = index;
  v.outcome = e.outcome;
  v.vacuous = e.claim.vacuous && e.outcome == Outcome::Holds;
  v.witness = std::move(e.claim.witness);
  v.unmet = std::move(e.unmet);
  v.config = inst.config();
  v.recipe = make_recipe(inst, tables);
  return v;
}

bool by_index(const Verdict& a, const Verdict& b) { return a.index < b.index; }

struct WorkerResult {
  Summary summary;
  std::vector<Verdict> kept;
};

void trim(std::vector<Verdict>& kept, std::size_t limit) {
  std::sort(kept.begin(), kept.end(), by_index);
  if (kept.size() > limit) kept.resize(limit);
}

void run_blocks(const TheoremSpec& spec, const Universe& u, const std::vector<Block>& blocks,
                std::span<const std::size_t> order, const CheckOptions& options, WorkerResult& out) {
  const std::size_t limit = static_cast<std::size_t>(std::max(0, options.max_kept_counterexamples));
  const std::vector<HypothesisKind> no_drop;
  Summary& s = out.summary;
  for (std::size_t bi : order) {
    visit_block(spec, u, blocks[bi], options,
                [&](const Instance& inst, std::uint64_t index, const std::vector<const std::vector<int>*>& tables) {
                  Evaluation e = evaluate_instance(spec, inst, no_drop);
                  ++s.instances;
                  switch (e.outcome) {
                    case Outcome::Holds:
                      ++s.holds;
                      if (e.claim.vacuous) ++s.vacuous;
                      break;
                    case Outcome::Counterexample: ++s.counterexamples; break;
                    case Outcome::HypothesesNotMet:
                      ++s.skipped;
                      for (const std::string& name : e.unmet) ++s.skipped_by[name];
                      break;
                    case Outcome::NotApplicable: ++s.not_applicable; break;
                  }
                  const bool counterexample = e.outcome == Outcome::Counterexample;
                  const bool first = counterexample &&
                                     (!s.first_counterexample || index < s.first_counterexample->index);
                  if (!options.keep_all_verdicts && !first && !(counterexample && limit > 0)) return true;
                  Verdict v = make_verdict(spec, inst, index, std::move(e), tables);
                  if (first) s.first_counterexample = v;
                  if (options.keep_all_verdicts || (counterexample && limit > 0)) {
                    out.kept.push_back(std::move(v));
                    if (!options.keep_all_verdicts && out.kept.size() >= 2 * limit) trim(out.kept, limit);
                  }
                  return true;
                });
  }
  if (!options.keep_all_verdicts) trim(out.kept, limit);
}

}  // namespace

std::uint64_t grid_size(const TheoremSpec& spec, const CheckOptions& options) {
  const Universe u(spec.shape, options);
  const std::vector<Block> blocks = make_blocks(spec, u, options);
  return blocks.empty() ? 0 : blocks.back().offset + blocks.back().count;
}

CheckReport check_theorem(const TheoremSpec& spec, const CheckOptions& options) {
  Universe u(spec.shape, options);
  const std::vector<Block> blocks = make_blocks(spec, u, options);
  u.build();

  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  }

  // Contiguous ranges of the block order with roughly equal instance counts.
  const int workers = std::max(1, options.workers);
  const std::uint64_t total = blocks.empty() ? 0 : blocks.back().offset + blocks.back().count;
  std::vector<std::size_t> cuts{0};
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    acc += blocks[order[i]].count;
    const std::uint64_t target = total * cuts.size() / static_cast<std::uint64_t>(workers);
    if (static_cast<int>(cuts.size()) < workers && acc >= target && acc > 0) cuts.push_back(i + 1);
  }
  while (cuts.size() <= static_cast<std::size_t>(workers)) cuts.push_back(order.size());

  std::vector<WorkerResult> results(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](int w) {
    try {
      const std::span<const std::size_t> range(order.data() + cuts[w], cuts[w + 1] - cuts[w]);
      run_blocks(spec, u, blocks, range, options, results[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  CheckReport report;
  report.summary.theorem = spec.id;
  for (WorkerResult& r : results) {
    report.summary.merge(r.summary);
    for (Verdict& v : r.kept) report.verdicts.push_back(std::move(v));
  }
  std::sort(report.verdicts.begin(), report.verdicts.end(), by_index);
  if (!options.keep_all_verdicts &&
      report.verdicts.size() > static_cast<std::size_t>(std::max(0, options.max_kept_counterexamples))) {
    report.verdicts.resize(static_cast<std::size_t>(std::max(0, options.max_kept_counterexamples)));
  }
  return report;
}

SearchResult search_counterexample(const TheoremSpec& spec, const std::vector<HypothesisKind>& drop,
                                   const CheckOptions& options, std::uint64_t budget) {
  for (HypothesisKind k : drop) {
    const bool stated = std::any_of(spec.hypotheses.begin(), spec.hypotheses.end(),
                                    [&](const Hypothesis& h) { return h.kind == k; });
    if (!stated) {
      throw Error(ErrorCode::Usage, std::string(to_string(k)) + " is not a hypothesis of " + spec.id);
    }
  }
  Universe u(spec.shape, options);
  const std::vector<Block> blocks = make_blocks(spec, u, options);
  u.build();

  SearchResult result;
  for (const Block& b : blocks) {
    const bool more = visit_block(
        spec, u, b, options,
        [&](const Instance& inst, std::uint64_t index, const std::vector<const std::vector<int>*>& tables) {
          if (result.evaluated >= budget) {
            result.budget_exhausted = true;
            return false;
          }
          ++result.evaluated;
          Evaluation e = evaluate_instance(spec, inst, drop);
          if (e.outcome == Outcome::HypothesesNotMet) ++result.skipped;
          if (e.outcome != Outcome::Counterexample) return true;
          result.counterexample = make_verdict(spec, inst, index, std::move(e), tables);
          return false;
        });
    if (!more) return result;
  }
  result.grid_exhausted = true;
  return result;
}

ReplayResult replay(const TheoremSpec& spec, const Verdict& verdict) {
  const InstanceRecipe& r = verdict.recipe;
  const int slots = slot_count(spec.shape);
  if (static_cast<int>(r.spaces.size()) != slots || static_cast<int>(r.ops.size()) != slots ||
      static_cast<int>(r.maps.size()) != map_count(spec.shape)) {
    throw Error(ErrorCode::Usage, "recipe does not match the shape of " + spec.id);
  }
  std::vector<SpaceEntry> entries;
  entries.reserve(slots);
  for (int k = 0; k < slots; ++k) {
    SpaceEntry e{r.spaces[k], {}};
    for (const Operation& op : builtin_operations(r.spaces[k])) e.ops.push_back(make_op_entry(op));
    e.ops.push_back(make_op_entry(r.ops[k]));
    entries.push_back(std::move(e));
  }
  Instance inst(spec.shape, verdict.config);
  for (int k = 0; k < slots; ++k) inst.set_slot(k, entries[k], entries[k].ops.back());
  if (map_count(spec.shape) >= 1) inst.set_f(r.maps[0]);
  if (map_count(spec.shape) >= 2) inst.set_g(r.maps[1]);
  inst.set_subset(r.subset);

  ReplayResult out;
  for (const Hypothesis& h : spec.hypotheses) {
    if (!evaluate(h, inst)) out.unmet.push_back(h.name());
  }
  out.claim = spec.claim(inst);
  return out;
}

}  // namespace gammalab
