#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammalab/maps.hpp"
#include "gammalab/profile.hpp"

namespace gammalab {

/// What a theorem quantifies over.
enum class Shape {
  Space,        // one space with an operation
  SpaceSubset,  // one space, an operation and a nonempty subset B
  Map,          // f: (X,γ) -> (Y,β)
  MapPair,      // f: (X,γ) -> (Y,β), g: (Y,β) -> (Z,α)
};

const char* to_string(Shape shape);

/// The closed hypothesis vocabulary.
enum class HypothesisKind {
  OpOpen,
  OpMonotone,
  OpRegular,
  MapInjective,
  MapSurjective,
  MapBijective,
  SubspaceUnambiguous,
  ClosedDefsAgree,
};

const char* to_string(HypothesisKind kind);
std::optional<HypothesisKind> parse_hypothesis_kind(std::string_view name);

inline constexpr int kAllSlots = -1;

/// A named hypothesis applied to one slot of the instance: an operation slot
/// (0 = X, 1 = Y, 2 = Z) for op-* kinds, a map slot (0 = f, 1 = g) for map-*
/// kinds, or every slot of that type when `slot` is kAllSlots.
struct Hypothesis {
  HypothesisKind kind;
  int slot = kAllSlots;

  std::string name() const;
};

enum class Variant { AsStated, Corrected, ProofText };

const char* to_string(Variant v);

/// Settings that change what a verdict means; recorded on every verdict.
struct LabConfig {
  ClosedDef closed_def = ClosedDef::Complement;
  OpenDirection open_dir = OpenDirection::Paper;
  SubspacePolicy policy = SubspacePolicy::Union;
};

struct Witness {
  std::vector<std::pair<std::string, Subset>> sets;
  std::vector<std::pair<std::string, int>> points;

  Witness& set(std::string name, Subset s) {
    sets.emplace_back(std::move(name), s);
    return *this;
  }
  Witness& point(std::string name, int p) {
    points.emplace_back(std::move(name), p);
    return *this;
  }

  std::string to_string() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ClaimResult {
  bool holds = true;
  bool vacuous = false;     // an implication whose antecedent is false
  bool applicable = true;   // false when the claim has no meaning on the instance
  Witness witness;

  static ClaimResult ok() { return {}; }
  static ClaimResult vacuously() { return {true, true, true, {}}; }
  static ClaimResult not_applicable() { return {true, false, false, {}}; }
  static ClaimResult fails(Witness w) { return {false, false, true, std::move(w)}; }
};

struct OpEntry;
struct SpaceEntry;

/// One point of an instance grid. Calculi and profiles are borrowed from the
/// grid's universe.
class Instance {
 public:
  Instance(Shape shape, LabConfig config) : shape_(shape), config_(config) {}

  Shape shape() const { return shape_; }
  const LabConfig& config() const { return config_; }
  int slots() const;

  const SemiCalculus& calc(int slot) const;
  const OperationProfile& profile(int slot) const;
  const SpaceEntry& space_entry(int slot) const { return *spaces_[slot]; }

  /// The builtin operation `kind` instantiated on the space in `slot`, with
  /// the instance's closed-set definition.
  const SemiCalculus& builtin_calc(int slot, OperationKind kind) const;

  const PointMap& f() const { return *f_; }
  const PointMap& g() const { return *g_; }
  const PointMap& gf() const;  // g∘f: X -> Z, built on first use
  Subset subset() const { return subset_; }

  void set_slot(int slot, const SpaceEntry& space, const OpEntry& op) {
    spaces_[slot] = &space;
    ops_[slot] = &op;
  }
  void set_f(std::span<const int> table);
  void set_g(std::span<const int> table);
  void set_subset(Subset b) { subset_ = b; }

 private:
  Shape shape_;
  LabConfig config_;
  std::array<const SpaceEntry*, 3> spaces_{};
  std::array<const OpEntry*, 3> ops_{};
  std::optional<PointMap> f_;
  std::optional<PointMap> g_;
  mutable std::optional<PointMap> gf_;
  Subset subset_;
};

using Claim = std::function<ClaimResult(const Instance&)>;

struct TheoremSpec {
  std::string id;         // e.g. "T5.1.1-2": item (1) implies item (2)
  std::string group;      // theorem the entry belongs to, e.g. "T5.1"
  std::string statement;  // one-line rendering of the claim
  Shape shape;
  std::vector<Hypothesis> hypotheses;
  Variant variant = Variant::AsStated;
  Claim claim;
  // The statement names one operation γ for every space. Builtin operations
  // are then paired by kind across slots; non-builtin ones pair freely.
  bool shared_op = false;
};

/// Every checkable statement, in a fixed order.
const std::vector<TheoremSpec>& registry();

const TheoremSpec* find_theorem(std::string_view id);

/// "all", an exact id, or a prefix ending at a '.' boundary ("T3.1" selects
/// T3.1.1-2 ... but not T3.10). Empty when nothing matches.
std::vector<const TheoremSpec*> select_theorems(std::string_view selector);

/// True iff the hypothesis holds on the instance.
bool evaluate(const Hypothesis& h, const Instance& inst);

}  // namespace gammalab
