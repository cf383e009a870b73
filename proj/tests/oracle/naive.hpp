#pragma once

// Slow reference implementations written straight from the definitions, on
// std::set. They share no code with the library beyond the conversion
// helpers at the bottom.

#include <map>
#include <set>
#include <vector>

#include "gammalab/lab.hpp"

namespace naive {

using Set = std::set<int>;
using Family = std::set<Set>;

Set whole(int n);
std::vector<Set> all_subsets(int n);
bool subset_of(const Set& a, const Set& b);
bool meets(const Set& a, const Set& b);
Set unite(const Set& a, const Set& b);
Set intersect(const Set& a, const Set& b);
Set minus(const Set& a, const Set& b);

bool is_topology(int n, const Family& family);
// Filters every family of subsets of an n-set; n ≤ 4.
std::size_t count_topologies(int n);

struct Space {
  int n = 0;
  Family opens;
};

struct Op {
  Space space;
  std::map<Set, Set> value;  // one entry per open set
};

Set interior(const Space& x, const Set& a);
Set closure(const Space& x, const Set& a);
Family levine_semi_open(const Space& x);  // { A : A ⊆ cl(int(A)) }

Set int_gamma(const Op& g, const Set& a);
Set cl_gamma(const Op& g, const Set& a);
Family gamma_open(const Op& g);
Family gamma_closed(const Op& g, gammalab::ClosedDef def);
Set gamma_derived(const Op& g, const Set& a);
Family semi_open(const Op& g);
Family semi_closed(const Op& g, gammalab::ClosedDef def);
Set scl(const Op& g, gammalab::ClosedDef def, const Set& a);
Set sint(const Op& g, const Set& a);
Set sd(const Op& g, const Set& a);
bool semi_nbd(const Op& g, const Set& a, int x);

bool monotone(const Op& g);
bool regular(const Op& g);

struct Map {
  Op dom;
  Op cod;
  std::vector<int> f;
  gammalab::ClosedDef def = gammalab::ClosedDef::Complement;

  Set image(const Set& a) const;
  Set preimage(const Set& b) const;
};

bool semi_continuous(const Map& m);
bool semi_open_map(const Map& m);
bool semi_closed_map(const Map& m);

// Conversions from library values.
Set to_set(gammalab::Subset s);
gammalab::Subset from_set(const Set& s);
Space to_space(const gammalab::FiniteSpace& s);
Op to_op(const gammalab::Operation& op);

}  // namespace naive

namespace naive {

// An instance of a registry statement, rebuilt from a recipe.
struct Instance {
  std::vector<Op> ops;                 // X, Y, Z
  std::vector<std::vector<int>> maps;  // f, g
  Set subset;
  gammalab::ClosedDef def = gammalab::ClosedDef::Complement;
  bool open_standard = false;
  bool union_policy = true;
  bool drop_regular = false;  // do not enforce the regularity hypotheses
};

Instance from_recipe(const gammalab::InstanceRecipe& r, const gammalab::LabConfig& config);

struct Outcome {
  bool skipped = false;  // a stated hypothesis fails
  bool holds = true;
  bool vacuous = false;
};

bool open_operation(const Op& g, bool standard);

// γ_B on the subspace B, re-indexed to 0..|B|-1, with the union policy.
// Sets `ambiguous` when two parent opens with the same trace disagree.
Op induced(const Op& g, const Set& b, bool& ambiguous);

// Statements covered: L2.2.*, R5.3.*, P5.*, T5.4.1, L3.12.*, T3.1.*, T3.9,
// T5.5.*, T5.10.*. Returns false in `covered` for anything else.
Outcome evaluate(const std::string& id, const Instance& inst, bool& covered);
bool covers(const std::string& id);

}  // namespace naive
