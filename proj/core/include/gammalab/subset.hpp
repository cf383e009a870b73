#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gammalab {

// Largest point count any space may have. Subsets of a 6-point space are
// 6-bit masks, so a family of subsets fits in one 64-bit word.
inline constexpr int kMaxPoints = 6;
inline constexpr int kMaxSubsets = 1 << kMaxPoints;

using Mask = std::uint8_t;

/// A set of points of some finite space, encoded as a bit mask (bit p = point p).
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(unsigned bits) : bits_(static_cast<Mask>(bits)) {}

  static constexpr Subset whole(int n) { return Subset((1u << n) - 1u); }
  static constexpr Subset point(int p) { return Subset(1u << p); }

  constexpr Mask bits() const { return bits_; }
  constexpr unsigned index() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int p) const { return (bits_ >> p) & 1u; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool meets(Subset other) const { return (bits_ & other.bits_) != 0; }
  constexpr int lowest() const { return std::countr_zero(static_cast<unsigned>(bits_)); }

  constexpr Subset with(int p) const { return Subset(bits_ | (1u << p)); }
  constexpr Subset without(int p) const { return Subset(bits_ & ~(1u << p)); }
  constexpr Subset complement(int n) const { return Subset(~bits_ & ((1u << n) - 1u)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  std::vector<int> points() const;

 private:
  Mask bits_ = 0;
};

/// Renders `{0,2}` style; the empty set renders as `{}`.
std::string to_string(Subset s);

/// Renders `{0 2}` style, the form used by the document format.
std::string to_spaced_string(Subset s);

/// Calls fn(Subset) for every subset of `of`, in ascending mask order.
template <class Fn>
void for_each_subset_of(Subset of, Fn&& fn) {
  const unsigned m = of.bits();
  unsigned s = 0;
  while (true) {
    fn(Subset(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

template <class Fn>
void for_each_subset(int n, Fn&& fn) {
  for (unsigned s = 0; s < (1u << n); ++s) fn(Subset(s));
}

enum class Recipe { GammaOpen, GammaClosed, SemiOpen, SemiClosed, Open, Custom };

std::string to_string(Recipe r);

/// A family of subsets of a space with at most kMaxPoints points, stored as a
/// membership word indexed by subset encoding.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  explicit SubsetFamily(std::uint64_t members, Recipe recipe = Recipe::Custom)
      : members_(members), recipe_(recipe) {}

  bool contains(Subset s) const { return (members_ >> s.index()) & 1u; }
  void insert(Subset s) { members_ |= std::uint64_t{1} << s.index(); }
  int size() const { return std::popcount(members_); }
  std::uint64_t word() const { return members_; }
  Recipe recipe() const { return recipe_; }
  void set_recipe(Recipe r) { recipe_ = r; }

  /// Members in ascending encoding order.
  std::vector<Subset> members() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t w = members_; w != 0; w &= w - 1) fn(Subset(std::countr_zero(w)));
  }

  /// Same members; recipe tags are provenance and do not participate.
  friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) {
    return a.members_ == b.members_;
  }

 private:
  std::uint64_t members_ = 0;
  Recipe recipe_ = Recipe::Custom;
};

std::string to_string(const SubsetFamily& f);

}  // namespace gammalab
