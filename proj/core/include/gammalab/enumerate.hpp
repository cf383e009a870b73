#pragma once

#include <cstdint>
#include <vector>

#include "gammalab/space.hpp"

namespace gammalab {

/// Every labeled topology on n points, each exactly once, in canonical order
/// (lexicographic on sorted open-set encodings). With up_to_iso, only the
/// spaces whose encoding is minimal over all point permutations are kept,
/// one per homeomorphism class. Throws Error(CapExceeded) past kMaxPoints.
std::vector<FiniteSpace> enumerate_topologies(int n, bool up_to_iso = false);

/// Minimal encoding of the space over all n! relabelings of its points.
FiniteSpace canonical_form(const FiniteSpace& space);

/// Applies a point relabeling (perm[old] = new) to every open set.
FiniteSpace relabel(const FiniteSpace& space, const std::vector<int>& perm);

}  // namespace gammalab
