#pragma once

#include <array>

#include "gammalab/operation.hpp"

namespace gammalab {

/// Which definition decides whether a set is γ-closed.
enum class ClosedDef {
  Complement,    // X - A is γ-open
  ClosurePoint,  // cl_γ(A) ⊆ A
};

const char* to_string(ClosedDef def);

/// First-layer structures of a space under an operation: γ-interior, γ-closure,
/// γ-open and γ-closed families, exterior, boundary and γ-derived sets.
/// Every table is filled at construction and indexed by subset encoding, so
/// lookups are O(1) and the object is safe to share across threads.
class GammaCalculus {
 public:
  explicit GammaCalculus(Operation op);

  const Operation& op() const { return op_; }
  const FiniteSpace& space() const { return op_.space(); }
  int points() const { return op_.space().points(); }
  Subset whole() const { return op_.space().whole(); }
  Subset complement(Subset a) const { return a.complement(points()); }

  Subset int_gamma(Subset a) const { return int_[a.index()]; }
  Subset cl_gamma(Subset a) const { return cl_[a.index()]; }
  Subset ext_gamma(Subset a) const { return int_[complement(a).index()]; }
  Subset bd_gamma(Subset a) const { return complement(int_gamma(a) | ext_gamma(a)); }
  Subset gamma_derived(Subset a) const { return derived_[a.index()]; }

  const SubsetFamily& gamma_open() const { return open_; }
  const SubsetFamily& gamma_closed(ClosedDef def) const {
    return def == ClosedDef::Complement ? closed_complement_ : closed_point_;
  }
  bool closed_defs_agree() const { return closed_complement_ == closed_point_; }

 private:
  Operation op_;
  std::array<Subset, kMaxSubsets> int_{};
  std::array<Subset, kMaxSubsets> cl_{};
  std::array<Subset, kMaxSubsets> derived_{};
  SubsetFamily open_;
  SubsetFamily closed_complement_;
  SubsetFamily closed_point_;
};

}  // namespace gammalab
