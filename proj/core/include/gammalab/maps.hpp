#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "gammalab/semi_calculus.hpp"

namespace gammalab {

/// A total function between the points of two spaces, each carrying its own
/// operation (γ on the domain, β on the codomain).
///
/// Holds non-owning references to both calculi; they must outlive the map.
class PointMap {
 public:
  /// Throws Error(PointOutOfRange) when the table has the wrong length or
  /// sends a point outside the codomain.
  PointMap(const SemiCalculus& dom, const SemiCalculus& cod, std::span<const int> images);

  const SemiCalculus& dom() const { return *dom_; }
  const SemiCalculus& cod() const { return *cod_; }
  int operator()(int x) const { return f_[x]; }
  std::vector<int> table() const;

  Subset image(Subset a) const { return image_[a.index()]; }
  Subset preimage(Subset b) const { return preimage_[b.index()]; }

  bool injective() const { return injective_; }
  bool surjective() const { return surjective_; }
  bool bijective() const { return injective_ && surjective_; }

 private:
  const SemiCalculus* dom_;
  const SemiCalculus* cod_;
  std::array<int, kMaxPoints> f_{};
  std::array<Subset, kMaxSubsets> image_{};
  std::array<Subset, kMaxSubsets> preimage_{};
  bool injective_ = false;
  bool surjective_ = false;
};

/// Outcome of a map predicate. On failure `witness` is the set that breaks the
/// defining condition and `point` (when the condition is pointwise) the point.
struct MapVerdict {
  bool holds = true;
  Subset witness;
  int point = -1;
  ClosedDef closed_def = ClosedDef::Complement;

  explicit operator bool() const { return holds; }
};

/// Preimages of γ-open sets of the codomain are γ*-semi-open in the domain.
MapVerdict is_gamma_semi_continuous(const PointMap& m);
/// Images of γ-open sets are γ*-semi-open.
MapVerdict is_gamma_semi_open_map(const PointMap& m);
/// Images of γ-closed sets are γ*-semi-closed.
MapVerdict is_gamma_semi_closed_map(const PointMap& m);

enum class ContinuityMode {
  Pointwise,  // for every x and open V ∋ f(x) some open U ∋ x has f(U^γ) ⊆ V^β
  Preimage,   // preimages of β-open sets are γ-open
};

MapVerdict is_gb_continuous(const PointMap& m, ContinuityMode mode);
/// Images of γ-open sets are β-open.
MapVerdict is_gb_open_map(const PointMap& m);
/// Images of γ-closed sets are β-closed.
MapVerdict is_gb_closed_map(const PointMap& m);

/// Every function from a `from`-point set to a `to`-point set, as image tables
/// in lexicographic order (point 0 is the most significant digit).
std::vector<std::vector<int>> all_functions(int from, int to);

}  // namespace gammalab
