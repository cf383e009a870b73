#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gammalab/space.hpp"

namespace gammalab {

enum class OperationKind { Identity, Closure, InteriorClosure, Custom };

const char* to_string(OperationKind kind);

/// An operation on the open sets of a space: U ↦ U^γ with U ⊆ U^γ.
/// The table is aligned with space().opens().
class Operation {
 public:
  static Operation builtin(const FiniteSpace& space, OperationKind kind);

  /// Throws Error(NotAnOperation) when some value fails to contain its open set
  /// or leaves the space, Error(IncompleteOperationTable) on a size mismatch.
  static Operation from_table(const FiniteSpace& space, std::vector<Subset> values);

  /// Builds from explicit (open, value) pairs. Every open set must appear
  /// exactly once; keys that are not open are rejected with NotAnOpenSet.
  static Operation from_pairs(const FiniteSpace& space,
                              std::span<const std::pair<Subset, Subset>> pairs);

  const FiniteSpace& space() const { return space_; }
  OperationKind kind() const { return kind_; }
  std::span<const Subset> table() const { return table_; }

  /// U^γ for an open U. Precondition: space().is_open(u).
  Subset apply(Subset u) const { return table_[space_.open_index(u)]; }
  Subset at(std::size_t open_index) const { return table_[open_index]; }

  friend bool operator==(const Operation& a, const Operation& b) {
    return a.space_ == b.space_ && a.table_ == b.table_;
  }

 private:
  Operation(FiniteSpace space, OperationKind kind, std::vector<Subset> table)
      : space_(std::move(space)), kind_(kind), table_(std::move(table)) {}

  FiniteSpace space_;
  OperationKind kind_;
  std::vector<Subset> table_;
};

/// The three builtin operations, in the order identity, closure, intcl.
std::vector<Operation> builtin_operations(const FiniteSpace& space);

/// `count` operations drawn from a seeded generator: for each open U, every
/// point outside U is added independently with probability 1/2.
std::vector<Operation> sample_operations(const FiniteSpace& space, int count, std::uint64_t seed);

/// Number of distinct operations on the space (product over opens of 2^|X-U|).
std::uint64_t count_operations(const FiniteSpace& space);

/// Calls fn for every operation on the space, in mixed-radix table order.
/// Throws Error(CapExceeded) when there are more than `cap` of them.
void for_each_operation(const FiniteSpace& space, std::uint64_t cap,
                        const std::function<void(const Operation&)>& fn);

}  // namespace gammalab
