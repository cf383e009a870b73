#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammalab/gamma_calculus.hpp"

namespace gammalab {

/// Which inclusion the open-operation condition asks of the γ-open set B
/// chosen for a point x and an open nbd U of x.
enum class OpenDirection {
  Paper,     // U^γ ⊆ B
  Standard,  // B ⊆ U^γ
};

const char* to_string(OpenDirection dir);

/// U ⊆ V implies U^γ ⊆ V^γ, over all pairs of open sets.
bool is_monotone(const Operation& op);

/// Any two open nbds U, V of a point admit an open nbd W of it with
/// W^γ ⊆ U^γ ∩ V^γ.
bool is_regular(const Operation& op);

/// Every open nbd U of every point x admits a γ-open B ∋ x related to U^γ by
/// the chosen inclusion.
bool is_open_operation(const GammaCalculus& calc, OpenDirection dir);
bool is_open_operation(const Operation& op, OpenDirection dir);

struct OperationProfile {
  bool monotone = false;
  bool regular = false;
  bool open_paper = false;
  bool open_standard = false;
  bool closed_defs_agree = false;
};

OperationProfile profile(const GammaCalculus& calc);
OperationProfile profile(const Operation& op);

enum class SubspacePolicy { Union, FlagAmbiguous };

struct Ambiguity {
  Subset relative_open;          // in subspace coordinates
  std::vector<Subset> values;    // distinct candidate values, subspace coordinates
};

struct InducedOperation {
  Subspace subspace;
  std::optional<Operation> operation;  // absent under FlagAmbiguous when ambiguous
  std::vector<Ambiguity> ambiguities;

  bool ambiguous() const { return !ambiguities.empty(); }
};

/// γ_B on the subspace B: γ_B(U ∩ B) = U^γ ∩ B. When several parent opens
/// trace to the same relative open with different values, the Union policy
/// takes their union and every conflict is listed in `ambiguities`.
/// Throws Error(EmptySubspace) when b is empty.
InducedOperation induced_subspace_operation(const Operation& op, Subset b,
                                            SubspacePolicy policy = SubspacePolicy::Union);

}  // namespace gammalab
