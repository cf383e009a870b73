#include "gammalab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "gammalab/error.hpp"

namespace gammalab {
namespace {

// Sorted-list lexicographic order on families that share the whole set as
// their largest member reduces to: a < b iff the lowest subset in which they
// differ belongs to a.
bool family_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

std::uint64_t opens_from_minimal_nbds(int n, const std::array<Subset, kMaxPoints>& nbd) {
  std::uint64_t word = 0;
  for (unsigned s = 0; s < (1u << n); ++s) {
    Subset u;
    for (int x : Subset(s).points()) u |= nbd[x];
    if (u == Subset(s)) word |= std::uint64_t{1} << s;
  }
  return word;
}

// A topology on a finite set is fixed by the minimal open nbd U_x of every
// point, subject to x ∈ U_x and (y ∈ U_x implies U_y ⊆ U_x).
void assign_nbds(int n, int x, std::array<Subset, kMaxPoints>& nbd, std::vector<std::uint64_t>& out) {
  if (x == n) {
    out.push_back(opens_from_minimal_nbds(n, nbd));
    return;
  }
  const Subset others = Subset::whole(n).without(x);
  for_each_subset_of(others, [&](Subset rest) {
    const Subset u = rest.with(x);
    for (int y = 0; y < x; ++y) {
      if (u.contains(y) && !nbd[y].subset_of(u)) return;
      if (nbd[y].contains(x) && !u.subset_of(nbd[y])) return;
    }
    nbd[x] = u;
    assign_nbds(n, x + 1, nbd, out);
  });
}

using MaskPerm = std::array<Mask, kMaxSubsets>;

std::vector<MaskPerm> all_mask_perms(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<MaskPerm> out;
  do {
    MaskPerm table{};
    for (unsigned s = 0; s < (1u << n); ++s) {
      unsigned t = 0;
      for (int p = 0; p < n; ++p) {
        if ((s >> p) & 1u) t |= 1u << perm[p];
      }
      table[s] = static_cast<Mask>(t);
    }
    out.push_back(table);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t apply_perm(std::uint64_t word, const MaskPerm& table) {
  std::uint64_t out = 0;
  for (std::uint64_t w = word; w != 0; w &= w - 1) {
    out |= std::uint64_t{1} << table[std::countr_zero(w)];
  }
  return out;
}

std::uint64_t canonical_word(std::uint64_t word, const std::vector<MaskPerm>& perms) {
  std::uint64_t best = word;
  for (const MaskPerm& p : perms) {
    const std::uint64_t cand = apply_perm(word, p);
    if (family_less(cand, best)) best = cand;
  }
  return best;
}

}  // namespace

std::vector<FiniteSpace> enumerate_topologies(int n, bool up_to_iso) {
  if (n < 1 || n > kMaxPoints) {
    throw Error(ErrorCode::CapExceeded,
                "enumeration supports 1.." + std::to_string(kMaxPoints) + " points");
  }
  std::vector<std::uint64_t> words;
  std::array<Subset, kMaxPoints> nbd{};
  assign_nbds(n, 0, nbd, words);
  std::sort(words.begin(), words.end(), family_less);

  if (up_to_iso) {
    const std::vector<MaskPerm> perms = all_mask_perms(n);
    std::erase_if(words, [&](std::uint64_t w) { return canonical_word(w, perms) != w; });
  }

  std::vector<FiniteSpace> out;
  out.reserve(words.size());
  for (std::uint64_t w : words) out.push_back(FiniteSpace::from_valid_family(n, w));
  return out;
}

FiniteSpace canonical_form(const FiniteSpace& space) {
  const int n = space.points();
  return FiniteSpace::from_valid_family(n, canonical_word(space.open_family().word(), all_mask_perms(n)));
}

FiniteSpace relabel(const FiniteSpace& space, const std::vector<int>& perm) {
  const int n = space.points();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::PointOutOfRange, "relabeling must name every point once");
  }
  std::uint64_t word = 0;
  for (Subset u : space.opens()) {
    Subset v;
    for (int p : u.points()) v = v.with(perm[p]);
    word |= std::uint64_t{1} << v.index();
  }
  return FiniteSpace::from_valid_family(n, word);
}

}  // namespace gammalab
