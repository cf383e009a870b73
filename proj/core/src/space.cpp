#include "gammalab/space.hpp"

#include <algorithm>

#include "gammalab/error.hpp"

namespace gammalab {

FiniteSpace::FiniteSpace(int n, std::uint64_t family_word)
    : n_(n), family_(family_word, Recipe::Open) {
  index_.fill(-1);
  opens_ = family_.members();
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    index_[opens_[i].index()] = static_cast<std::int8_t>(i);
  }
  for (int x = 0; x < n_; ++x) {
    Subset nbd = whole();
    for (Subset u : opens_) {
      if (u.contains(x)) nbd &= u;
    }
    minimal_nbd_[x] = nbd;
  }
}

FiniteSpace FiniteSpace::from_valid_family(int n, std::uint64_t family_word) {
  return FiniteSpace(n, family_word);
}

Subset FiniteSpace::interior(Subset a) const {
  Subset out;
  for (int x = 0; x < n_; ++x) {
    if (minimal_nbd_[x].subset_of(a)) out = out.with(x);
  }
  return out;
}

Subset FiniteSpace::closure(Subset a) const {
  return interior(a.complement(n_)).complement(n_);
}

std::strong_ordering operator<=>(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  return std::lexicographical_compare_three_way(a.opens_.begin(), a.opens_.end(),
                                                b.opens_.begin(), b.opens_.end());
}

const char* to_string(TopologyError::Kind kind) {
  switch (kind) {
    case TopologyError::Kind::PointCountOutOfRange: return "PointCountOutOfRange";
    case TopologyError::Kind::PointOutOfRange: return "PointOutOfRange";
    case TopologyError::Kind::MissingEmptyOrWhole: return "MissingEmptyOrWhole";
    case TopologyError::Kind::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case TopologyError::Kind::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
  }
  return "Unknown";
}

std::string TopologyError::message() const {
  std::string out = to_string(kind);
  switch (kind) {
    case Kind::PointCountOutOfRange:
      out += ": point count must be between 1 and " + std::to_string(kMaxPoints);
      break;
    case Kind::PointOutOfRange:
      out += ": open set mask " + std::to_string(a.index()) + " names a point outside the space";
      break;
    case Kind::MissingEmptyOrWhole:
      out += ": the empty set and the whole space must both be open";
      break;
    case Kind::NotClosedUnderUnion:
      out += ": " + to_string(a) + " ∪ " + to_string(b) + " is not open";
      break;
    case Kind::NotClosedUnderIntersection:
      out += ": " + to_string(a) + " ∩ " + to_string(b) + " is not open";
      break;
  }
  return out;
}

ValidationResult validate_topology(int n, std::span<const unsigned> family) {
  ValidationResult result;
  if (n < 1 || n > kMaxPoints) {
    result.errors.push_back({TopologyError::Kind::PointCountOutOfRange, {}, {}});
    return result;
  }
  const unsigned limit = 1u << n;
  std::uint64_t word = 0;
  for (unsigned m : family) {
    if (m >= limit) {
      // Keep the low byte for the witness; the message carries the problem.
      result.errors.push_back({TopologyError::Kind::PointOutOfRange, Subset(m), {}});
      return result;
    }
    word |= std::uint64_t{1} << m;
  }
  const SubsetFamily fam(word);
  if (!fam.contains(Subset()) || !fam.contains(Subset::whole(n))) {
    result.errors.push_back({TopologyError::Kind::MissingEmptyOrWhole, {}, Subset::whole(n)});
  }
  const std::vector<Subset> members = fam.members();
  std::optional<TopologyError> union_err;
  std::optional<TopologyError> inter_err;
  for (std::size_t i = 0; i < members.size() && !(union_err && inter_err); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Subset a = members[i];
      const Subset b = members[j];
      if (!union_err && !fam.contains(a | b)) {
        union_err = TopologyError{TopologyError::Kind::NotClosedUnderUnion, a, b};
      }
      if (!inter_err && !fam.contains(a & b)) {
        inter_err = TopologyError{TopologyError::Kind::NotClosedUnderIntersection, a, b};
      }
    }
  }
  if (union_err) result.errors.push_back(*union_err);
  if (inter_err) result.errors.push_back(*inter_err);
  if (result.errors.empty()) result.space = FiniteSpace::from_valid_family(n, word);
  return result;
}

FiniteSpace make_space(int n, std::span<const unsigned> family) {
  ValidationResult r = validate_topology(n, family);
  if (r.ok()) return std::move(*r.space);
  std::string msg = "invalid topology";
  for (const TopologyError& e : r.errors) msg += "; " + e.message();
  throw Error(ErrorCode::InvalidTopology, msg);
}

Subset Subspace::restrict(Subset parent_set) const {
  Subset out;
  for (std::size_t i = 0; i < parent_point.size(); ++i) {
    if (parent_set.contains(parent_point[i])) out = out.with(static_cast<int>(i));
  }
  return out;
}

Subset Subspace::lift(Subset relative_set) const {
  Subset out;
  for (int i : relative_set.points()) out = out.with(parent_point[i]);
  return out;
}

Subspace subspace(const FiniteSpace& space, Subset b) {
  if (b.empty()) throw Error(ErrorCode::EmptySubspace, "subspace carrier must be nonempty");
  if (!b.subset_of(space.whole())) {
    throw Error(ErrorCode::PointOutOfRange, "subspace carrier " + to_string(b) + " leaves the space");
  }
  std::vector<int> parent_point = b.points();
  auto restrict_to = [&](Subset u) {
    Subset out;
    for (std::size_t i = 0; i < parent_point.size(); ++i) {
      if (u.contains(parent_point[i])) out = out.with(static_cast<int>(i));
    }
    return out;
  };
  std::uint64_t word = 0;
  for (Subset u : space.opens()) word |= std::uint64_t{1} << restrict_to(u).index();
  FiniteSpace rel = FiniteSpace::from_valid_family(static_cast<int>(parent_point.size()), word);
  std::vector<std::vector<Subset>> traces(rel.opens().size());
  for (Subset u : space.opens()) traces[rel.open_index(restrict_to(u))].push_back(u);
  return Subspace{std::move(rel), b, std::move(parent_point), std::move(traces)};
}

FiniteSpace sierpinski() {
  const unsigned fam[] = {0b00, 0b01, 0b11};
  return make_space(2, fam);
}

FiniteSpace discrete(int n) {
  if (n < 1 || n > kMaxPoints) throw Error(ErrorCode::CapExceeded, "point count out of range");
  std::uint64_t word = (n == kMaxPoints) ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1;
  return FiniteSpace::from_valid_family(n, word);
}

FiniteSpace indiscrete(int n) {
  if (n < 1 || n > kMaxPoints) throw Error(ErrorCode::CapExceeded, "point count out of range");
  return FiniteSpace::from_valid_family(n, 1u | (std::uint64_t{1} << ((1u << n) - 1)));
}

}  // namespace gammalab
