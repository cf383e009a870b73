#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammalab/subset.hpp"

namespace gammalab {

/// A topology on the points {0..n-1}. Immutable once validated.
class FiniteSpace {
 public:
  int points() const { return n_; }
  Subset whole() const { return Subset::whole(n_); }

  /// Open sets in ascending encoding order.
  const std::vector<Subset>& opens() const { return opens_; }
  const SubsetFamily& open_family() const { return family_; }
  bool is_open(Subset s) const { return family_.contains(s); }

  /// Position of an open set inside opens(), or -1 when `s` is not open.
  int open_index(Subset s) const { return index_[s.index()]; }

  /// Smallest open set containing x.
  Subset minimal_nbd(int x) const { return minimal_nbd_[x]; }

  Subset interior(Subset a) const;
  Subset closure(Subset a) const;

  /// Canonical order: lexicographic on the sorted list of open-set encodings.
  friend std::strong_ordering operator<=>(const FiniteSpace& a, const FiniteSpace& b);
  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.n_ == b.n_ && a.family_.word() == b.family_.word();
  }

  /// Builds a space from a family already known to satisfy the axioms.
  static FiniteSpace from_valid_family(int n, std::uint64_t family_word);

 private:
  FiniteSpace(int n, std::uint64_t family_word);

  int n_ = 0;
  SubsetFamily family_;
  std::vector<Subset> opens_;
  std::array<std::int8_t, kMaxSubsets> index_{};
  std::array<Subset, kMaxPoints> minimal_nbd_{};
};

struct TopologyError {
  enum class Kind {
    PointCountOutOfRange,
    PointOutOfRange,
    MissingEmptyOrWhole,
    NotClosedUnderUnion,
    NotClosedUnderIntersection,
  };
  Kind kind;
  Subset a;
  Subset b;

  std::string message() const;
};

const char* to_string(TopologyError::Kind kind);

struct ValidationResult {
  std::optional<FiniteSpace> space;
  std::vector<TopologyError> errors;

  bool ok() const { return space.has_value(); }
};

/// Checks the topology axioms on `family` over n points. Each violated axiom is
/// reported once, with the first witness pair found in ascending order.
/// Raw values are taken as unsigned so that masks reaching past the point
/// count can be reported rather than silently truncated.
ValidationResult validate_topology(int n, std::span<const unsigned> family);

/// validate_topology, throwing Error(InvalidTopology) listing every violation.
FiniteSpace make_space(int n, std::span<const unsigned> family);

/// Relative topology on a nonempty subset, re-indexed to 0..|b|-1.
struct Subspace {
  FiniteSpace space;
  Subset carrier;                     // b, in parent coordinates
  std::vector<int> parent_point;      // relative point -> parent point
  // traces[i] lists the parent opens U with U ∩ b equal to space.opens()[i].
  std::vector<std::vector<Subset>> traces;

  Subset restrict(Subset parent_set) const;  // (parent_set ∩ b), re-indexed
  Subset lift(Subset relative_set) const;    // back to parent coordinates
};

/// Throws Error(EmptySubspace) when b is empty.
Subspace subspace(const FiniteSpace& space, Subset b);

/// Sierpinski space: opens {}, {0}, {0,1}.
FiniteSpace sierpinski();
FiniteSpace discrete(int n);
FiniteSpace indiscrete(int n);

}  // namespace gammalab
