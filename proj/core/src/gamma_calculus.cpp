#include "gammalab/gamma_calculus.hpp"

namespace gammalab {

const char* to_string(ClosedDef def) {
  return def == ClosedDef::Complement ? "complement" : "closurepoint";
}

GammaCalculus::GammaCalculus(Operation op) : op_(std::move(op)) {
  const FiniteSpace& sp = op_.space();
  const int n = sp.points();
  const auto& opens = sp.opens();

  for_each_subset(n, [&](Subset a) {
    Subset interior;
    Subset closure;
    for (int x = 0; x < n; ++x) {
      bool some_nbd_inside = false;
      bool every_nbd_meets = true;
      for (std::size_t i = 0; i < opens.size(); ++i) {
        if (!opens[i].contains(x)) continue;
        const Subset value = op_.at(i);
        if (value.subset_of(a)) some_nbd_inside = true;
        if (!value.meets(a)) every_nbd_meets = false;
      }
      if (a.contains(x) && some_nbd_inside) interior = interior.with(x);
      if (every_nbd_meets) closure = closure.with(x);
    }
    int_[a.index()] = interior;
    cl_[a.index()] = closure;
    if (interior == a) open_.insert(a);
  });
  open_.set_recipe(Recipe::GammaOpen);

  for_each_subset(n, [&](Subset a) {
    if (open_.contains(complement(a))) closed_complement_.insert(a);
    if (cl_[a.index()].subset_of(a)) closed_point_.insert(a);
  });
  closed_complement_.set_recipe(Recipe::GammaClosed);
  closed_point_.set_recipe(Recipe::GammaClosed);

  // x is a γ-limit point of A when every γ-open set containing x meets A - {x}.
  for_each_subset(n, [&](Subset a) {
    Subset d;
    for (int x = 0; x < n; ++x) {
      bool limit = true;
      open_.for_each([&](Subset u) {
        if (u.contains(x) && !u.meets(a.without(x))) limit = false;
      });
      if (limit) d = d.with(x);
    }
    derived_[a.index()] = d;
  });
}

}  // namespace gammalab
