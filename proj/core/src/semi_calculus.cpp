#include "gammalab/semi_calculus.hpp"

#include <cassert>

namespace gammalab {

SemiCalculus::SemiCalculus(Operation op, ClosedDef def) : gamma_(std::move(op)), def_(def) {
  const int n = gamma_.points();
  const Subset x = gamma_.whole();

  // O ⊆ A ⊆ cl_γ(O) for some γ-open O.
  gamma_.gamma_open().for_each([&](Subset o) {
    const Subset hull = gamma_.cl_gamma(o);
    if (!o.subset_of(hull)) return;
    for_each_subset_of(hull - o, [&](Subset extra) { semi_open_.insert(o | extra); });
  });
  semi_open_.set_recipe(Recipe::SemiOpen);

  // int_γ(F) ⊆ A ⊆ F for some γ-closed F.
  gamma_.gamma_closed(def_).for_each([&](Subset f) {
    const Subset core = gamma_.int_gamma(f);
    for_each_subset_of(f - core, [&](Subset extra) { semi_closed_.insert(core | extra); });
  });
  semi_closed_.set_recipe(Recipe::SemiClosed);

  complement_agrees_ = true;
  for_each_subset(n, [&](Subset a) {
    if (semi_closed_.contains(a) != semi_open_.contains(a.complement(n))) complement_agrees_ = false;
  });

  for_each_subset(n, [&](Subset a) {
    Subset hull = x;
    bool any = false;
    semi_closed_.for_each([&](Subset c) {
      if (a.subset_of(c)) {
        hull &= c;
        any = true;
      }
    });
    // X is always γ-closed and contains int_γ(X), so X is semi-closed.
    assert(any);
    (void)any;
    scl_[a.index()] = hull;

    Subset kernel;
    semi_open_.for_each([&](Subset u) {
      if (u.subset_of(a)) kernel |= u;
    });
    sint_[a.index()] = kernel;

    Subset derived;
    for (int p = 0; p < n; ++p) {
      bool limit = true;
      semi_open_.for_each([&](Subset u) {
        if (u.contains(p) && !u.meets(a.without(p))) limit = false;
      });
      if (limit) derived = derived.with(p);
    }
    sd_[a.index()] = derived;
  });
}

}  // namespace gammalab
