#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gammalab/theorem.hpp"

namespace gammalab {

struct OpEntry {
  Operation op;
  OperationProfile profile;
  std::vector<SemiCalculus> calc;  // indexed by ClosedDef

  const SemiCalculus& with(ClosedDef def) const { return calc[static_cast<int>(def)]; }
};

/// A space with every operation the grid assigns to it. The three builtins
/// always come first, in the order identity, closure, intcl.
struct SpaceEntry {
  FiniteSpace space;
  std::vector<OpEntry> ops;
};

OpEntry make_op_entry(Operation op);

struct OpSource {
  enum class Kind { Builtins, Random, Exhaustive };
  Kind kind = Kind::Builtins;
  int count = 0;           // random operations per space, on top of the builtins
  std::uint64_t seed = 0;

  /// "builtins", "random:K:SEED" or "exhaustive". Throws Error(Usage).
  static OpSource parse(std::string_view text);
  std::string to_string() const;
};

struct CheckOptions {
  int max_points = 3;
  OpSource ops;
  std::vector<ClosedDef> closed_defs{ClosedDef::Complement};
  OpenDirection open_dir = OpenDirection::Paper;
  SubspacePolicy policy = SubspacePolicy::Union;
  // Cross every operation of one slot with every operation of the others,
  // even for statements about a single γ.
  bool mixed_ops = false;
  // Maps between spaces of at most this many points are enumerated in full;
  // larger pairs get `map_samples` seeded random maps.
  int all_maps_up_to = 3;
  int map_samples = 64;
  std::uint64_t map_seed = 0x5eed;
  int workers = 1;
  bool keep_all_verdicts = false;
  int max_kept_counterexamples = 16;
  std::uint64_t instance_cap = 500'000'000;
  std::uint64_t exhaustive_ops_cap = 1u << 16;
  // Permutes block order before evaluation; counts and counterexample sets
  // are unaffected, only which counterexample comes first.
  std::optional<std::uint64_t> shuffle_seed;
};

enum class Outcome { Holds, Counterexample, HypothesesNotMet, NotApplicable };

const char* to_string(Outcome o);

/// Everything needed to rebuild an instance: spaces X,Y,Z, their operations,
/// the maps f,g and the subset B, in instance slot order.
struct InstanceRecipe {
  Shape shape = Shape::Space;
  std::vector<FiniteSpace> spaces;
  std::vector<Operation> ops;
  std::vector<std::vector<int>> maps;
  Subset subset;

  /// The instance as a document (spaces X,Y,Z; operations gamma,beta,alpha;
  /// maps f,g), followed by a `# subset B = {..}` comment when relevant.
  std::string to_document() const;
};

struct Verdict {
  std::string theorem;
  std::uint64_t index = 0;  // position in the canonical instance order
  Outcome outcome = Outcome::Holds;
  bool vacuous = false;
  Witness witness;
  std::vector<std::string> unmet;  // hypotheses that failed, when skipped
  LabConfig config;
  InstanceRecipe recipe;
};

struct Summary {
  std::string theorem;
  std::uint64_t instances = 0;
  std::uint64_t holds = 0;
  std::uint64_t vacuous = 0;  // included in holds
  std::uint64_t counterexamples = 0;
  std::uint64_t skipped = 0;
  std::uint64_t not_applicable = 0;
  std::map<std::string, std::uint64_t> skipped_by;  // per failing hypothesis
  std::optional<Verdict> first_counterexample;

  void merge(const Summary& other);
};

struct CheckReport {
  Summary summary;
  std::vector<Verdict> verdicts;  // counterexamples, or everything if asked
};

/// Runs the theorem over the whole grid. Deterministic in the options,
/// including the worker count. Throws Error(CapExceeded) when the grid would
/// exceed options.instance_cap instances or the point cap.
CheckReport check_theorem(const TheoremSpec& spec, const CheckOptions& options);

struct SearchResult {
  std::optional<Verdict> counterexample;
  std::uint64_t evaluated = 0;  // instances visited in canonical order
  std::uint64_t skipped = 0;
  bool budget_exhausted = false;
  bool grid_exhausted = false;
};

/// Walks the same grid as check_theorem with the `drop`ped hypothesis kinds
/// not enforced and stops at the first counterexample. At most `budget`
/// instances are visited.
SearchResult search_counterexample(const TheoremSpec& spec, const std::vector<HypothesisKind>& drop,
                                   const CheckOptions& options, std::uint64_t budget);

struct ReplayResult {
  ClaimResult claim;
  std::vector<std::string> unmet;  // stated hypotheses false on the instance
};

/// Rebuilds the instance from the verdict's recipe and re-evaluates claim and
/// hypotheses.
ReplayResult replay(const TheoremSpec& spec, const Verdict& verdict);

/// Number of instances check_theorem would visit.
std::uint64_t grid_size(const TheoremSpec& spec, const CheckOptions& options);

}  // namespace gammalab
