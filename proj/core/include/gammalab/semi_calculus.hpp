#pragma once

#include <array>

#include "gammalab/gamma_calculus.hpp"

namespace gammalab {

/// Second-layer structures: γ*-semi-open and γ*-semi-closed families,
/// semi-closure, semi-interior, semi-neighbourhoods and semi-derived sets.
///
/// The semi-closed family is computed from its own definition (a set between
/// int_γ(F) and some γ-closed F) using the configured γ-closed definition; it
/// is never derived by complementing the semi-open family. Whether the two
/// agree is reported by semi_closed_is_complement_family().
class SemiCalculus {
 public:
  explicit SemiCalculus(Operation op, ClosedDef def = ClosedDef::Complement);

  const GammaCalculus& gamma() const { return gamma_; }
  const Operation& op() const { return gamma_.op(); }
  const FiniteSpace& space() const { return gamma_.space(); }
  int points() const { return gamma_.points(); }
  Subset whole() const { return gamma_.whole(); }
  Subset complement(Subset a) const { return gamma_.complement(a); }
  ClosedDef closed_def() const { return def_; }

  const SubsetFamily& gamma_open() const { return gamma_.gamma_open(); }
  const SubsetFamily& gamma_closed() const { return gamma_.gamma_closed(def_); }
  const SubsetFamily& semi_open() const { return semi_open_; }
  const SubsetFamily& semi_closed() const { return semi_closed_; }

  bool semi_closed_is_complement_family() const { return complement_agrees_; }

  Subset scl(Subset a) const { return scl_[a.index()]; }
  Subset sint(Subset a) const { return sint_[a.index()]; }
  Subset sd(Subset a) const { return sd_[a.index()]; }

  /// True when some semi-open U has x ∈ U ⊆ a.
  bool is_semi_nbd(Subset a, int x) const { return sint_[a.index()].contains(x); }

 private:
  GammaCalculus gamma_;
  ClosedDef def_;
  SubsetFamily semi_open_;
  SubsetFamily semi_closed_;
  bool complement_agrees_ = false;
  std::array<Subset, kMaxSubsets> scl_{};
  std::array<Subset, kMaxSubsets> sint_{};
  std::array<Subset, kMaxSubsets> sd_{};
};

}  // namespace gammalab
