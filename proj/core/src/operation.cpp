#include "gammalab/operation.hpp"

#include <random>

#include "gammalab/error.hpp"

namespace gammalab {

const char* to_string(OperationKind kind) {
  switch (kind) {
    case OperationKind::Identity: return "identity";
    case OperationKind::Closure: return "closure";
    case OperationKind::InteriorClosure: return "intcl";
    case OperationKind::Custom: return "custom";
  }
  return "custom";
}

Operation Operation::builtin(const FiniteSpace& space, OperationKind kind) {
  std::vector<Subset> table;
  table.reserve(space.opens().size());
  for (Subset u : space.opens()) {
    switch (kind) {
      case OperationKind::Identity: table.push_back(u); break;
      case OperationKind::Closure: table.push_back(space.closure(u)); break;
      case OperationKind::InteriorClosure: table.push_back(space.interior(space.closure(u))); break;
      case OperationKind::Custom:
        throw Error(ErrorCode::Usage, "custom operations need an explicit table");
    }
  }
  return Operation(space, kind, std::move(table));
}

Operation Operation::from_table(const FiniteSpace& space, std::vector<Subset> values) {
  if (values.size() != space.opens().size()) {
    throw Error(ErrorCode::IncompleteOperationTable,
                "operation table has " + std::to_string(values.size()) + " entries for " +
                    std::to_string(space.opens().size()) + " open sets");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Subset u = space.opens()[i];
    if (!values[i].subset_of(space.whole())) {
      throw Error(ErrorCode::PointOutOfRange, "value of " + to_string(u) + " leaves the space");
    }
    if (!u.subset_of(values[i])) {
      throw Error(ErrorCode::NotAnOperation,
                  to_string(u) + " is not contained in its value " + to_string(values[i]));
    }
  }
  return Operation(space, OperationKind::Custom, std::move(values));
}

Operation Operation::from_pairs(const FiniteSpace& space,
                                std::span<const std::pair<Subset, Subset>> pairs) {
  std::vector<Subset> values(space.opens().size());
  std::vector<bool> seen(values.size(), false);
  for (const auto& [u, v] : pairs) {
    const int idx = space.open_index(u);
    if (!u.subset_of(space.whole()) || idx < 0) {
      throw Error(ErrorCode::NotAnOpenSet, to_string(u) + " is not an open set of the space");
    }
    if (seen[idx]) {
      throw Error(ErrorCode::DuplicateName, "operation value for " + to_string(u) + " given twice");
    }
    seen[idx] = true;
    values[idx] = v;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::IncompleteOperationTable,
                  "operation table omits open set " + to_string(space.opens()[i]));
    }
  }
  return from_table(space, std::move(values));
}

std::vector<Operation> builtin_operations(const FiniteSpace& space) {
  return {Operation::builtin(space, OperationKind::Identity),
          Operation::builtin(space, OperationKind::Closure),
          Operation::builtin(space, OperationKind::InteriorClosure)};
}

std::vector<Operation> sample_operations(const FiniteSpace& space, int count, std::uint64_t seed) {
  // mt19937_64 output is fixed by the standard; draws use its top bit directly
  // so sequences do not depend on the library's distribution implementations.
  std::mt19937_64 rng(seed);
  std::vector<Operation> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    std::vector<Subset> values;
    values.reserve(space.opens().size());
    for (Subset u : space.opens()) {
      Subset v = u;
      for (int p : u.complement(space.points()).points()) {
        if (rng() >> 63) v = v.with(p);
      }
      values.push_back(v);
    }
    out.push_back(Operation::from_table(space, std::move(values)));
  }
  return out;
}

std::uint64_t count_operations(const FiniteSpace& space) {
  unsigned bits = 0;
  for (Subset u : space.opens()) bits += space.points() - u.size();
  return bits >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << bits;
}

void for_each_operation(const FiniteSpace& space, std::uint64_t cap,
                        const std::function<void(const Operation&)>& fn) {
  const std::uint64_t total = count_operations(space);
  if (total > cap) {
    throw Error(ErrorCode::CapExceeded, "space has " + std::to_string(total) +
                                            " operations, more than the cap of " + std::to_string(cap));
  }
  const std::vector<Subset>& opens = space.opens();
  std::vector<Subset> outside(opens.size());
  for (std::size_t i = 0; i < opens.size(); ++i) outside[i] = opens[i].complement(space.points());
  // Each open's extra points run through the subsets of its complement like an
  // odometer digit; the first open is the fastest-moving digit.
  std::vector<Subset> extra(opens.size());
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<Subset> values(opens.size());
    for (std::size_t i = 0; i < opens.size(); ++i) values[i] = opens[i] | extra[i];
    fn(Operation::from_table(space, std::move(values)));
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if (extra[i] == outside[i]) {
        extra[i] = Subset();
        continue;
      }
      extra[i] = Subset((extra[i].bits() - outside[i].bits()) & outside[i].bits());
      break;
    }
  }
}

}  // namespace gammalab
