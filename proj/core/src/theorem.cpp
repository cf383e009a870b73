#include "gammalab/theorem.hpp"

#include <algorithm>

#include "gammalab/error.hpp"
#include "gammalab/lab.hpp"

namespace gammalab {

const char* to_string(Shape shape) {
  switch (shape) {
    case Shape::Space: return "space";
    case Shape::SpaceSubset: return "space+subset";
    case Shape::Map: return "map";
    case Shape::MapPair: return "map-pair";
  }
  return "space";
}

const char* to_string(HypothesisKind kind) {
  switch (kind) {
    case HypothesisKind::OpOpen: return "op-open";
    case HypothesisKind::OpMonotone: return "op-monotone";
    case HypothesisKind::OpRegular: return "op-regular";
    case HypothesisKind::MapInjective: return "map-injective";
    case HypothesisKind::MapSurjective: return "map-surjective";
    case HypothesisKind::MapBijective: return "map-bijective";
    case HypothesisKind::SubspaceUnambiguous: return "subspace-gammaB-unambiguous";
    case HypothesisKind::ClosedDefsAgree: return "closed-defs-agree";
  }
  return "?";
}

std::optional<HypothesisKind> parse_hypothesis_kind(std::string_view name) {
  for (auto k : {HypothesisKind::OpOpen, HypothesisKind::OpMonotone, HypothesisKind::OpRegular,
                 HypothesisKind::MapInjective, HypothesisKind::MapSurjective, HypothesisKind::MapBijective,
                 HypothesisKind::SubspaceUnambiguous, HypothesisKind::ClosedDefsAgree}) {
    if (name == to_string(k)) return k;
  }
  if (name == "subspace-γB-unambiguous") return HypothesisKind::SubspaceUnambiguous;
  return std::nullopt;
}

namespace {

bool is_map_kind(HypothesisKind k) {
  return k == HypothesisKind::MapInjective || k == HypothesisKind::MapSurjective ||
         k == HypothesisKind::MapBijective;
}

}  // namespace

std::string Hypothesis::name() const {
  std::string out = to_string(kind);
  if (slot == kAllSlots || kind == HypothesisKind::SubspaceUnambiguous) return out;
  if (is_map_kind(kind)) return out + (slot == 0 ? "[f]" : "[g]");
  return out + "[" + "XYZ"[slot] + "]";
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::AsStated: return "as-stated";
    case Variant::Corrected: return "corrected";
    case Variant::ProofText: return "proof-text";
  }
  return "as-stated";
}

std::string Witness::to_string() const {
  std::string out;
  for (const auto& [name, s] : sets) {
    if (!out.empty()) out += ", ";
    out += name + " = " + gammalab::to_string(s);
  }
  for (const auto& [name, p] : points) {
    if (!out.empty()) out += ", ";
    out += name + " = " + std::to_string(p);
  }
  return out;
}

int Instance::slots() const {
  switch (shape_) {
    case Shape::Space:
    case Shape::SpaceSubset: return 1;
    case Shape::Map: return 2;
    case Shape::MapPair: return 3;
  }
  return 1;
}

const SemiCalculus& Instance::calc(int slot) const { return ops_[slot]->with(config_.closed_def); }
const OperationProfile& Instance::profile(int slot) const { return ops_[slot]->profile; }

const SemiCalculus& Instance::builtin_calc(int slot, OperationKind kind) const {
  return spaces_[slot]->ops[static_cast<int>(kind)].with(config_.closed_def);
}

void Instance::set_f(std::span<const int> table) {
  f_.emplace(calc(0), calc(1), table);
  gf_.reset();
}

void Instance::set_g(std::span<const int> table) {
  g_.emplace(calc(1), calc(2), table);
  gf_.reset();
}

const PointMap& Instance::gf() const {
  if (!gf_) {
    std::vector<int> table(calc(0).points());
    for (int x = 0; x < calc(0).points(); ++x) table[x] = (*g_)((*f_)(x));
    gf_.emplace(calc(0), calc(2), table);
  }
  return *gf_;
}

namespace {

bool op_flag(HypothesisKind kind, const OperationProfile& p, OpenDirection dir) {
  switch (kind) {
    case HypothesisKind::OpOpen: return dir == OpenDirection::Paper ? p.open_paper : p.open_standard;
    case HypothesisKind::OpMonotone: return p.monotone;
    case HypothesisKind::OpRegular: return p.regular;
    case HypothesisKind::ClosedDefsAgree: return p.closed_defs_agree;
    default: return true;
  }
}

bool map_flag(HypothesisKind kind, const PointMap& m) {
  switch (kind) {
    case HypothesisKind::MapInjective: return m.injective();
    case HypothesisKind::MapSurjective: return m.surjective();
    case HypothesisKind::MapBijective: return m.bijective();
    default: return true;
  }
}

bool unambiguous(const Operation& op, Subset b, SubspacePolicy policy) {
  return b.empty() || !induced_subspace_operation(op, b, policy).ambiguous();
}

}  // namespace

bool evaluate(const Hypothesis& h, const Instance& inst) {
  if (is_map_kind(h.kind)) {
    const int maps = inst.shape() == Shape::MapPair ? 2 : inst.shape() == Shape::Map ? 1 : 0;
    for (int s = 0; s < maps; ++s) {
      if (h.slot != kAllSlots && h.slot != s) continue;
      if (!map_flag(h.kind, s == 0 ? inst.f() : inst.g())) return false;
    }
    return true;
  }
  if (h.kind == HypothesisKind::SubspaceUnambiguous) {
    const SubspacePolicy policy = inst.config().policy;
    if (inst.shape() == Shape::SpaceSubset) return unambiguous(inst.calc(0).op(), inst.subset(), policy);
    if (inst.shape() == Shape::Map) {
      bool ok = true;
      inst.calc(1).gamma_open().for_each([&](Subset v) {
        if (!ok || v.empty()) return;
        ok = unambiguous(inst.calc(1).op(), v, policy) &&
             unambiguous(inst.calc(0).op(), inst.f().preimage(v), policy);
      });
      return ok;
    }
    return true;
  }
  for (int s = 0; s < inst.slots(); ++s) {
    if (h.slot != kAllSlots && h.slot != s) continue;
    if (!op_flag(h.kind, inst.profile(s), inst.config().open_dir)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Claims
// ---------------------------------------------------------------------------

namespace {

// A condition holds when it returns no witness.
using Cond = std::function<std::optional<Witness>(const Instance&)>;

Claim implication(Cond premise, Cond conclusion) {
  return [premise = std::move(premise), conclusion = std::move(conclusion)](const Instance& inst) {
    if (premise(inst)) return ClaimResult::vacuously();
    if (auto w = conclusion(inst)) return ClaimResult::fails(std::move(*w));
    return ClaimResult::ok();
  };
}

Claim always(Cond cond) {
  return [cond = std::move(cond)](const Instance& inst) {
    if (auto w = cond(inst)) return ClaimResult::fails(std::move(*w));
    return ClaimResult::ok();
  };
}

Cond all_of(std::vector<Cond> conds) {
  return [conds = std::move(conds)](const Instance& inst) -> std::optional<Witness> {
    for (const Cond& c : conds) {
      if (auto w = c(inst)) return w;
    }
    return std::nullopt;
  };
}

std::optional<Witness> from_verdict(const MapVerdict& v, const char* set_name) {
  if (v.holds) return std::nullopt;
  Witness w;
  w.set(set_name, v.witness);
  if (v.point >= 0) w.point("x", v.point);
  return w;
}

// First subset (ascending encoding) of an n-point space where `bad` is true.
template <class Pred>
std::optional<Subset> first_subset(int n, Pred bad) {
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (bad(Subset(s))) return Subset(s);
  }
  return std::nullopt;
}

template <class Pred>
std::optional<Witness> forall_subsets(int n, const char* name, Pred good) {
  if (auto a = first_subset(n, [&](Subset s) { return !good(s); })) return Witness().set(name, *a);
  return std::nullopt;
}

const SemiCalculus& X(const Instance& i) { return i.calc(0); }
const SemiCalculus& Y(const Instance& i) { return i.calc(1); }

// --- map properties -------------------------------------------------------

std::optional<Witness> semi_continuous(const Instance& i) {
  return from_verdict(is_gamma_semi_continuous(i.f()), "B");
}
std::optional<Witness> semi_open_f(const Instance& i) {
  return from_verdict(is_gamma_semi_open_map(i.f()), "U");
}
std::optional<Witness> semi_closed_f(const Instance& i) {
  return from_verdict(is_gamma_semi_closed_map(i.f()), "F");
}
std::optional<Witness> gb_open_f(const Instance& i) { return from_verdict(is_gb_open_map(i.f()), "A"); }
std::optional<Witness> gb_cont_f(const Instance& i) {
  return from_verdict(is_gb_continuous(i.f(), ContinuityMode::Pointwise), "V");
}
std::optional<Witness> gb_cont_f_preimage(const Instance& i) {
  return from_verdict(is_gb_continuous(i.f(), ContinuityMode::Preimage), "V");
}

// --- single-space statements ----------------------------------------------

// x ∈ scl(A) iff every semi-nbd of x meets A.
bool every_semi_nbd_meets(const SemiCalculus& c, Subset a, int x) {
  bool ok = true;
  for_each_subset(c.points(), [&](Subset n) {
    if (ok && c.is_semi_nbd(n, x) && !n.meets(a)) ok = false;
  });
  return ok;
}

ClaimResult lemma_2_2(const Instance& inst, bool forward) {
  const SemiCalculus& c = X(inst);
  for (unsigned s = 0; s < (1u << c.points()); ++s) {
    const Subset a(s);
    for (int x = 0; x < c.points(); ++x) {
      const bool in_scl = c.scl(a).contains(x);
      if (forward && in_scl) {
        for (unsigned t = 0; t < (1u << c.points()); ++t) {
          const Subset n(t);
          if (c.is_semi_nbd(n, x) && !n.meets(a)) {
            return ClaimResult::fails(Witness().set("A", a).set("N", n).point("x", x));
          }
        }
      }
      if (!forward && !in_scl && every_semi_nbd_meets(c, a, x)) {
        return ClaimResult::fails(Witness().set("A", a).point("x", x));
      }
    }
  }
  return ClaimResult::ok();
}

ClaimResult remark_5_3(const Instance& inst, bool forward) {
  const SemiCalculus& c = X(inst);
  for (unsigned s = 0; s < (1u << c.points()); ++s) {
    const Subset a(s);
    for (int p = 0; p < c.points(); ++p) {
      const bool lhs = c.sd(a).contains(p);
      const bool rhs = c.scl(a.without(p)).contains(p);
      if (forward ? (lhs && !rhs) : (rhs && !lhs)) {
        return ClaimResult::fails(Witness().set("A", a).point("p", p));
      }
    }
  }
  return ClaimResult::ok();
}

// Pairwise for families; all nonempty families of subsets when the space is
// small enough, otherwise families of at most three sets.
ClaimResult sd_of_unions(const Instance& inst) {
  const SemiCalculus& c = X(inst);
  const int n = c.points();
  const unsigned subsets = 1u << n;
  if (n <= 3) {
    const std::uint64_t families = std::uint64_t{1} << subsets;
    for (std::uint64_t fam = 1; fam < families; ++fam) {
      Subset uni;
      Subset sd_uni;
      for (unsigned s = 0; s < subsets; ++s) {
        if ((fam >> s) & 1u) {
          uni |= Subset(s);
          sd_uni |= c.sd(Subset(s));
        }
      }
      if (sd_uni != c.sd(uni)) {
        Witness w;
        for (unsigned s = 0; s < subsets; ++s) {
          if ((fam >> s) & 1u) w.set("A" + std::to_string(w.sets.size() + 1), Subset(s));
        }
        return ClaimResult::fails(std::move(w));
      }
    }
    return ClaimResult::ok();
  }
  for (unsigned a = 0; a < subsets; ++a) {
    for (unsigned b = a; b < subsets; ++b) {
      for (unsigned d = b; d < subsets; ++d) {
        const Subset sa(a), sb(b), sc(d);
        if ((c.sd(sa) | c.sd(sb) | c.sd(sc)) != c.sd(sa | sb | sc)) {
          return ClaimResult::fails(Witness().set("A1", sa).set("A2", sb).set("A3", sc));
        }
      }
    }
  }
  return ClaimResult::ok();
}

// cl_{γ_B}(U ∩ B) ⊆ cl_γ(U ∩ B) ⊆ cl_γ(U) ∩ cl_γ(B) for every open U.
ClaimResult gamma_b_chain(const Instance& inst) {
  const SemiCalculus& c = X(inst);
  const Subset b = inst.subset();
  const InducedOperation induced = induced_subspace_operation(c.op(), b, inst.config().policy);
  if (!induced.operation) return ClaimResult::not_applicable();
  const GammaCalculus sub(*induced.operation);
  const GammaCalculus& g = c.gamma();
  for (Subset u : c.space().opens()) {
    const Subset trace = u & b;
    const Subset rel_cl = induced.subspace.lift(sub.cl_gamma(induced.subspace.restrict(trace)));
    const Subset mid = g.cl_gamma(trace);
    if (!rel_cl.subset_of(mid) || !mid.subset_of(g.cl_gamma(u) & g.cl_gamma(b))) {
      return ClaimResult::fails(Witness().set("U", u).set("B", b));
    }
  }
  return ClaimResult::ok();
}

// A semi-open in the subspace B (under γ_B) and B semi-open in X imply A
// semi-open in X.
ClaimResult subspace_semi_open(const Instance& inst) {
  const SemiCalculus& c = X(inst);
  const Subset b = inst.subset();
  if (!c.semi_open().contains(b)) return ClaimResult::vacuously();
  const InducedOperation induced = induced_subspace_operation(c.op(), b, inst.config().policy);
  if (!induced.operation) return ClaimResult::not_applicable();
  const SemiCalculus sub(*induced.operation, inst.config().closed_def);
  std::optional<Witness> bad;
  for_each_subset_of(b, [&](Subset a) {
    if (!bad && sub.semi_open().contains(induced.subspace.restrict(a)) && !c.semi_open().contains(a)) {
      bad = Witness().set("A", a).set("B", b);
    }
  });
  if (bad) return ClaimResult::fails(std::move(*bad));
  return ClaimResult::ok();
}

// --- map statements ------------------------------------------------------

// f|: f⁻¹(V) -> V is semi-open, under the induced operations, for every
// nonempty β-open V.
std::optional<Witness> restrictions_semi_open(const Instance& inst) {
  const PointMap& f = inst.f();
  const SubspacePolicy policy = inst.config().policy;
  std::optional<Witness> bad;
  Y(inst).gamma_open().for_each([&](Subset v) {
    if (bad || v.empty()) return;
    const Subset pre = f.preimage(v);
    if (pre.empty()) return;
    const InducedOperation dom = induced_subspace_operation(X(inst).op(), pre, policy);
    const InducedOperation cod = induced_subspace_operation(Y(inst).op(), v, policy);
    if (!dom.operation || !cod.operation) return;
    const SemiCalculus dom_calc(*dom.operation, inst.config().closed_def);
    const SemiCalculus cod_calc(*cod.operation, inst.config().closed_def);
    std::vector<int> table;
    for (int x : dom.subspace.parent_point) table.push_back(cod.subspace.restrict(Subset::point(f(x))).lowest());
    const PointMap restricted(dom_calc, cod_calc, table);
    const MapVerdict verdict = is_gamma_semi_open_map(restricted);
    if (!verdict.holds) bad = Witness().set("V", v).set("U", dom.subspace.lift(verdict.witness));
  });
  return bad;
}

// Every γ-closed F ⊇ f⁻¹(V) has a semi-closed G ⊇ V with f⁻¹(G) ⊆ F.
std::optional<Witness> closed_cover_condition(const Instance& inst) {
  const PointMap& f = inst.f();
  const int m = Y(inst).points();
  std::optional<Witness> bad;
  for (unsigned s = 0; s < (1u << m) && !bad; ++s) {
    const Subset v(s);
    X(inst).gamma_closed().for_each([&](Subset big_f) {
      if (bad || !f.preimage(v).subset_of(big_f)) return;
      bool found = false;
      Y(inst).semi_closed().for_each([&](Subset g) {
        if (!found && v.subset_of(g) && f.preimage(g).subset_of(big_f)) found = true;
      });
      if (!found) bad = Witness().set("V", v).set("F", big_f);
    });
  }
  return bad;
}

// Every γ-open U ⊇ f⁻¹(B) has a semi-open V ⊇ B with f⁻¹(V) ⊆ U.
std::optional<Witness> open_cover_condition(const Instance& inst) {
  const PointMap& f = inst.f();
  const int m = Y(inst).points();
  std::optional<Witness> bad;
  for (unsigned s = 0; s < (1u << m) && !bad; ++s) {
    const Subset b(s);
    X(inst).gamma_open().for_each([&](Subset u) {
      if (bad || !f.preimage(b).subset_of(u)) return;
      bool found = false;
      Y(inst).semi_open().for_each([&](Subset v) {
        if (!found && b.subset_of(v) && f.preimage(v).subset_of(u)) found = true;
      });
      if (!found) bad = Witness().set("B", b).set("U", u);
    });
  }
  return bad;
}

// Each γ-open B ∋ f(x) has a semi-open A ∋ x with f(A) ⊆ B.
std::optional<Witness> local_semi_open_preimages(const Instance& inst) {
  const PointMap& f = inst.f();
  for (int x = 0; x < X(inst).points(); ++x) {
    std::optional<Witness> bad;
    Y(inst).gamma_open().for_each([&](Subset b) {
      if (bad || !b.contains(f(x))) return;
      bool found = false;
      X(inst).semi_open().for_each([&](Subset a) {
        if (!found && a.contains(x) && f.image(a).subset_of(b)) found = true;
      });
      if (!found) bad = Witness().set("B", b).point("x", x);
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

// For each x and γ-open U ∋ x, f(U) is a semi-nbd of f(x).
std::optional<Witness> images_are_semi_nbds(const Instance& inst) {
  const PointMap& f = inst.f();
  for (int x = 0; x < X(inst).points(); ++x) {
    std::optional<Witness> bad;
    X(inst).gamma_open().for_each([&](Subset u) {
      if (!bad && u.contains(x) && !Y(inst).is_semi_nbd(f.image(u), f(x))) {
        bad = Witness().set("U", u).point("x", x);
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

// --- map-pair statements ---------------------------------------------------

std::optional<Witness> composite_semi_open(const Instance& i) {
  return from_verdict(is_gamma_semi_open_map(i.gf()), "U");
}
std::optional<Witness> composite_semi_closed(const Instance& i) {
  return from_verdict(is_gamma_semi_closed_map(i.gf()), "F");
}

ClaimResult with_op_kind_on_yz(const Instance& inst, OperationKind kind, bool closed) {
  if (kind == OperationKind::Custom) return ClaimResult::not_applicable();
  const PointMap g(inst.builtin_calc(1, kind), inst.builtin_calc(2, kind), inst.g().table());
  const MapVerdict v = closed ? is_gamma_semi_closed_map(g) : is_gamma_semi_open_map(g);
  if (v.holds) return ClaimResult::ok();
  return ClaimResult::fails(Witness().set(closed ? "F" : "V", v.witness));
}

Hypothesis hyp(HypothesisKind k, int slot = kAllSlots) { return Hypothesis{k, slot}; }

std::vector<TheoremSpec> build_registry() {
  using H = HypothesisKind;
  std::vector<TheoremSpec> r;
  auto add = [&](std::string id, std::string group, std::string statement, Shape shape,
                 std::vector<Hypothesis> hyps, Claim claim, Variant variant = Variant::AsStated) {
    r.push_back(TheoremSpec{std::move(id), std::move(group), std::move(statement), shape, std::move(hyps),
                            variant, std::move(claim)});
  };
  const std::vector<Hypothesis> none;

  // --- definitions and preliminaries ---
  add("D10.hull", "D10", "cl_γ(A) ⊆ F for every γ-closed F ⊇ A", Shape::Space, none,
      always([](const Instance& i) -> std::optional<Witness> {
        const SemiCalculus& c = X(i);
        for (unsigned s = 0; s < (1u << c.points()); ++s) {
          std::optional<Witness> bad;
          c.gamma_closed().for_each([&](Subset f) {
            if (!bad && Subset(s).subset_of(f) && !c.gamma().cl_gamma(Subset(s)).subset_of(f)) {
              bad = Witness().set("A", Subset(s)).set("F", f);
            }
          });
          if (bad) return bad;
        }
        return std::nullopt;
      }));
  add("P5.fwd", "P5", "A γ*-semi-closed ⇒ X−A γ*-semi-open", Shape::Space, none,
      always([](const Instance& i) {
        const SemiCalculus& c = X(i);
        return forall_subsets(c.points(), "A", [&](Subset a) {
          return !c.semi_closed().contains(a) || c.semi_open().contains(c.complement(a));
        });
      }));
  add("P5.rev", "P5", "X−A γ*-semi-open ⇒ A γ*-semi-closed", Shape::Space, none,
      always([](const Instance& i) {
        const SemiCalculus& c = X(i);
        return forall_subsets(c.points(), "A", [&](Subset a) {
          return !c.semi_open().contains(c.complement(a)) || c.semi_closed().contains(a);
        });
      }));
  add("L2.2.fwd", "L2.2", "x ∈ scl(A) ⇒ every γ-semi-nbd of x meets A", Shape::Space, none,
      [](const Instance& i) { return lemma_2_2(i, true); });
  add("L2.2.rev", "L2.2", "every γ-semi-nbd of x meets A ⇒ x ∈ scl(A)", Shape::Space, none,
      [](const Instance& i) { return lemma_2_2(i, false); });

  // --- γ-semi-open functions ---
  const std::vector<Hypothesis> t31{hyp(H::OpOpen), hyp(H::OpMonotone), hyp(H::OpRegular)};
  Cond t31_2 = [](const Instance& i) {
    return forall_subsets(X(i).points(), "A", [&](Subset a) {
      return i.f().image(X(i).gamma().int_gamma(a)).subset_of(Y(i).sint(i.f().image(a)));
    });
  };
  add("T3.1.1-2", "T3.1", "f γ-semi-open ⇒ f(int_γ(A)) ⊆ sint(f(A))", Shape::Map, t31,
      implication(semi_open_f, t31_2));
  add("T3.1.2-1", "T3.1", "f(int_γ(A)) ⊆ sint(f(A)) ⇒ f γ-semi-open", Shape::Map, t31,
      implication(t31_2, semi_open_f));
  add("T3.1.1-3", "T3.1", "f γ-semi-open ⇒ f(U) is a γ-semi-nbd of f(x) for γ-open U ∋ x", Shape::Map, t31,
      implication(semi_open_f, images_are_semi_nbds));
  add("T3.1.3-1", "T3.1", "f(U) is a γ-semi-nbd of f(x) for γ-open U ∋ x ⇒ f γ-semi-open", Shape::Map, t31,
      implication(images_are_semi_nbds, semi_open_f));

  const std::vector<Hypothesis> t32{hyp(H::MapBijective), hyp(H::OpOpen)};
  Cond t32_rhs = [](const Instance& i) {
    return forall_subsets(Y(i).points(), "B", [&](Subset b) {
      return i.f().preimage(Y(i).scl(b)).subset_of(X(i).gamma().cl_gamma(i.f().preimage(b)));
    });
  };
  add("T3.2.fwd", "T3.2", "f γ-semi-open ⇒ f⁻¹(scl(B)) ⊆ cl_γ(f⁻¹(B))", Shape::Map, t32,
      implication(semi_open_f, t32_rhs));
  add("T3.2.rev", "T3.2", "f⁻¹(scl(B)) ⊆ cl_γ(f⁻¹(B)) ⇒ f γ-semi-open", Shape::Map, t32,
      implication(t32_rhs, semi_open_f));
  add("AUX-L2.3", "AUX-L2.3", "U ∩ cl_γ(S) ⊆ cl_γ(U ∩ S) for γ-open U", Shape::Space, none,
      always([](const Instance& i) -> std::optional<Witness> {
        const GammaCalculus& g = X(i).gamma();
        std::optional<Witness> bad;
        g.gamma_open().for_each([&](Subset u) {
          if (bad) return;
          if (auto s = first_subset(g.points(), [&](Subset s) {
                return !(u & g.cl_gamma(s)).subset_of(g.cl_gamma(u & s));
              })) {
            bad = Witness().set("U", u).set("S", *s);
          }
        });
        return bad;
      }));

  const std::vector<Hypothesis> open_y{hyp(H::OpOpen, 1)};
  add("T3.5.fwd", "T3.5", "(γ,β)-continuous (pointwise) ⇒ β-open preimages are γ-open", Shape::Map, open_y,
      implication(gb_cont_f, gb_cont_f_preimage));
  add("T3.5.rev", "T3.5", "β-open preimages are γ-open ⇒ (γ,β)-continuous (pointwise)", Shape::Map, open_y,
      implication(gb_cont_f_preimage, gb_cont_f));

  Cond t36_2 = [](const Instance& i) {
    return forall_subsets(Y(i).points(), "B", [&](Subset b) {
      return i.f().preimage(Y(i).gamma().cl_gamma(b)).subset_of(X(i).gamma().cl_gamma(i.f().preimage(b)));
    });
  };
  Cond t36_3 = [](const Instance& i) {
    return forall_subsets(Y(i).points(), "B", [&](Subset b) {
      return i.f().preimage(Y(i).gamma().bd_gamma(b)).subset_of(X(i).gamma().bd_gamma(i.f().preimage(b)));
    });
  };
  add("T3.6.1-2", "T3.6", "f (γ,β)-open ⇒ f⁻¹(cl_β(B)) ⊆ cl_γ(f⁻¹(B))", Shape::Map, open_y,
      implication(gb_open_f, t36_2));
  add("T3.6.2-1", "T3.6", "f⁻¹(cl_β(B)) ⊆ cl_γ(f⁻¹(B)) ⇒ f (γ,β)-open", Shape::Map, open_y,
      implication(t36_2, gb_open_f));
  add("T3.6.1-3", "T3.6", "f (γ,β)-open ⇒ f⁻¹(bd_β(B)) ⊆ bd_γ(f⁻¹(B))", Shape::Map, open_y,
      implication(gb_open_f, t36_3));
  add("T3.6.3-1", "T3.6", "f⁻¹(bd_β(B)) ⊆ bd_γ(f⁻¹(B)) ⇒ f (γ,β)-open", Shape::Map, open_y,
      implication(t36_3, gb_open_f));

  add("T3.7", "T3.7", "f (γ,β)-open and (γ,β)-continuous ⇒ f⁻¹(B) γ*-semi-open for β*-semi-open B",
      Shape::Map, open_y,
      implication(all_of({gb_open_f, gb_cont_f}), [](const Instance& i) {
        std::optional<Witness> bad;
        Y(i).semi_open().for_each([&](Subset b) {
          if (!bad && !X(i).semi_open().contains(i.f().preimage(b))) bad = Witness().set("B", b);
        });
        return bad;
      }));

  const std::vector<Hypothesis> t38_1{hyp(H::MapSurjective, 0), hyp(H::MapInjective, 1)};
  Cond t38_1_premise = all_of({gb_cont_f, composite_semi_open});
  add("T3.8.1", "T3.8",
      "gf γ-semi-open, f (γ,β)-continuous ⇒ g γ-semi-open (γ's kind on Y and Z)", Shape::MapPair, t38_1,
      [t38_1_premise](const Instance& i) {
        if (t38_1_premise(i)) return ClaimResult::vacuously();
        return with_op_kind_on_yz(i, i.calc(0).op().kind(), false);
      });
  add("T3.8.1-corrected", "T3.8",
      "gf γ-semi-open, f (γ,β)-continuous ⇒ g maps β-open sets to α*-semi-open sets", Shape::MapPair, t38_1,
      implication(t38_1_premise,
                  [](const Instance& i) { return from_verdict(is_gamma_semi_open_map(i.g()), "V"); }),
      Variant::Corrected);
  add("T3.8.2", "T3.8", "gf γ-semi-open, g (β,α)-open and (β,α)-continuous ⇒ f γ-semi-open", Shape::MapPair,
      {hyp(H::MapInjective, 1), hyp(H::OpOpen, 1)},
      implication(
          all_of({composite_semi_open,
                  [](const Instance& i) { return from_verdict(is_gb_open_map(i.g()), "A"); },
                  [](const Instance& i) {
                    return from_verdict(is_gb_continuous(i.g(), ContinuityMode::Pointwise), "V");
                  }}),
          semi_open_f));

  add("GB.chain", "GB", "cl_{γ_B}(U∩B) ⊆ cl_γ(U∩B) ⊆ cl_γ(U) ∩ cl_γ(B)", Shape::SpaceSubset,
      {hyp(H::SubspaceUnambiguous)}, gamma_b_chain);
  add("T3.9", "T3.9", "A γ_B*-semi-open in a γ*-semi-open B ⇒ A γ*-semi-open", Shape::SpaceSubset,
      {hyp(H::OpRegular), hyp(H::SubspaceUnambiguous)}, subspace_semi_open);
  add("T3.10", "T3.10", "f γ-semi-open ⇒ f|: f⁻¹(V) → V γ-semi-open for γ-open V ≠ ∅", Shape::Map,
      {hyp(H::MapBijective), hyp(H::OpRegular), hyp(H::SubspaceUnambiguous)},
      implication(semi_open_f, restrictions_semi_open));

  const std::vector<Hypothesis> bij{hyp(H::MapBijective)};
  add("T3.11.fwd", "T3.11", "f γ-semi-open ⇒ every γ-closed F ⊇ f⁻¹(V) has semi-closed G ⊇ V, f⁻¹(G) ⊆ F",
      Shape::Map, bij, implication(semi_open_f, closed_cover_condition));
  add("T3.11.rev", "T3.11", "every γ-closed F ⊇ f⁻¹(V) has semi-closed G ⊇ V, f⁻¹(G) ⊆ F ⇒ f γ-semi-open",
      Shape::Map, bij, implication(closed_cover_condition, semi_open_f));

  auto l312 = [&](std::string id, std::string statement, int from, int to) {
    add(std::move(id), "L3.12", std::move(statement), Shape::Space, none, always([from, to](const Instance& i) {
          const SemiCalculus& c = X(i);
          auto item = [&](int k, Subset a) {
            switch (k) {
              case 1: return c.semi_closed().contains(a);
              case 2: return c.gamma().int_gamma(c.gamma().cl_gamma(a)).subset_of(a);
              default: return c.semi_open().contains(c.complement(a));
            }
          };
          return forall_subsets(c.points(), "A", [&](Subset a) { return !item(from, a) || item(to, a); });
        }));
  };
  l312("L3.12.1-2", "A γ*-semi-closed ⇒ int_γ(cl_γ(A)) ⊆ A", 1, 2);
  l312("L3.12.2-1", "int_γ(cl_γ(A)) ⊆ A ⇒ A γ*-semi-closed", 2, 1);
  l312("L3.12.1-3", "A γ*-semi-closed ⇒ X−A γ*-semi-open", 1, 3);
  l312("L3.12.3-1", "X−A γ*-semi-open ⇒ A γ*-semi-closed", 3, 1);

  add("T3.13", "T3.13", "f (γ,β)-open and (γ,β)-continuous ⇒ f⁻¹(B) γ*-semi-closed for β*-semi-closed B",
      Shape::Map, open_y, implication(all_of({gb_open_f, gb_cont_f}), [](const Instance& i) {
        std::optional<Witness> bad;
        Y(i).semi_closed().for_each([&](Subset b) {
          if (!bad && !X(i).semi_closed().contains(i.f().preimage(b))) bad = Witness().set("B", b);
        });
        return bad;
      }));

  Cond t314_1_premise = all_of({gb_cont_f, composite_semi_closed});
  add("T3.14.1", "T3.14", "gf γ-semi-closed, f (γ,β)-continuous ⇒ g β-semi-closed (β's kind on Y and Z)",
      Shape::MapPair, t38_1, [t314_1_premise](const Instance& i) {
        if (t314_1_premise(i)) return ClaimResult::vacuously();
        return with_op_kind_on_yz(i, i.calc(1).op().kind(), true);
      });
  add("T3.14.1-corrected", "T3.14",
      "gf γ-semi-closed, f (γ,β)-continuous ⇒ g maps β-closed sets to α*-semi-closed sets", Shape::MapPair,
      t38_1,
      implication(t314_1_premise,
                  [](const Instance& i) { return from_verdict(is_gamma_semi_closed_map(i.g()), "F"); }),
      Variant::Corrected);
  add("T3.14.1-prooftext", "T3.14",
      "gf γ-semi-closed, f (γ,β)-continuous ⇒ g maps β-open sets to α*-semi-open sets", Shape::MapPair, t38_1,
      implication(t314_1_premise,
                  [](const Instance& i) { return from_verdict(is_gamma_semi_open_map(i.g()), "V"); }),
      Variant::ProofText);
  add("T3.14.2", "T3.14", "gf γ-semi-closed, g (β,α)-open and (β,α)-continuous ⇒ f γ-semi-closed",
      Shape::MapPair, {hyp(H::MapSurjective, 0), hyp(H::MapInjective, 1), hyp(H::OpOpen, 1)},
      implication(
          all_of({composite_semi_closed,
                  [](const Instance& i) { return from_verdict(is_gb_open_map(i.g()), "A"); },
                  [](const Instance& i) {
                    return from_verdict(is_gb_continuous(i.g(), ContinuityMode::Pointwise), "V");
                  }}),
          semi_closed_f));

  // --- γ-semi-closed functions ---
  const std::vector<Hypothesis> open_mono{hyp(H::OpOpen), hyp(H::OpMonotone)};
  Cond t41_rhs = [](const Instance& i) {
    return forall_subsets(X(i).points(), "A", [&](Subset a) {
      const GammaCalculus& y = Y(i).gamma();
      return y.int_gamma(y.cl_gamma(i.f().image(a))).subset_of(i.f().image(X(i).gamma().cl_gamma(a)));
    });
  };
  add("T4.1.fwd", "T4.1", "f γ-semi-closed ⇒ int_γ(cl_γ(f(A))) ⊆ f(cl_γ(A))", Shape::Map, open_mono,
      implication(semi_closed_f, t41_rhs));
  add("T4.1.rev", "T4.1", "int_γ(cl_γ(f(A))) ⊆ f(cl_γ(A)) ⇒ f γ-semi-closed", Shape::Map, open_mono,
      implication(t41_rhs, semi_closed_f));
  Cond t42_rhs = [](const Instance& i) {
    return forall_subsets(X(i).points(), "A", [&](Subset a) {
      return Y(i).scl(i.f().image(a)).subset_of(i.f().image(X(i).gamma().cl_gamma(a)));
    });
  };
  add("T4.2.fwd", "T4.2", "f γ-semi-closed ⇒ scl(f(A)) ⊆ f(cl_γ(A))", Shape::Map, open_mono,
      implication(semi_closed_f, t42_rhs));
  add("T4.2.rev", "T4.2", "scl(f(A)) ⊆ f(cl_γ(A)) ⇒ f γ-semi-closed", Shape::Map, open_mono,
      implication(t42_rhs, semi_closed_f));
  const std::vector<Hypothesis> t43{hyp(H::MapSurjective), hyp(H::OpMonotone), hyp(H::OpRegular)};
  add("T4.3.fwd", "T4.3", "f γ-semi-closed ⇒ every γ-open U ⊇ f⁻¹(B) has semi-open V ⊇ B, f⁻¹(V) ⊆ U",
      Shape::Map, t43, implication(semi_closed_f, open_cover_condition));
  add("T4.3.rev", "T4.3", "every γ-open U ⊇ f⁻¹(B) has semi-open V ⊇ B, f⁻¹(V) ⊆ U ⇒ f γ-semi-closed",
      Shape::Map, t43, implication(open_cover_condition, semi_closed_f));

  // --- γ-semi-continuous functions ---
  const std::vector<Hypothesis> open_all{hyp(H::OpOpen)};
  Cond t51_2 = [](const Instance& i) {
    return forall_subsets(Y(i).points(), "B", [&](Subset b) {
      const GammaCalculus& x = X(i).gamma();
      return x.int_gamma(x.cl_gamma(i.f().preimage(b))).subset_of(i.f().preimage(Y(i).gamma().cl_gamma(b)));
    });
  };
  Cond t51_3 = [](const Instance& i) {
    return forall_subsets(X(i).points(), "A", [&](Subset a) {
      const GammaCalculus& x = X(i).gamma();
      return i.f().image(x.int_gamma(x.cl_gamma(a))).subset_of(Y(i).gamma().cl_gamma(i.f().image(a)));
    });
  };
  add("T5.1.1-2", "T5.1", "f γ-semi-continuous ⇒ int_γ(cl_γ(f⁻¹(B))) ⊆ f⁻¹(cl_γ(B))", Shape::Map, open_all,
      implication(semi_continuous, t51_2));
  add("T5.1.2-1", "T5.1", "int_γ(cl_γ(f⁻¹(B))) ⊆ f⁻¹(cl_γ(B)) ⇒ f γ-semi-continuous", Shape::Map, open_all,
      implication(t51_2, semi_continuous));
  add("T5.1.1-3", "T5.1", "f γ-semi-continuous ⇒ f(int_γ(cl_γ(A))) ⊆ cl_γ(f(A))", Shape::Map, open_all,
      implication(semi_continuous, t51_3));
  add("T5.1.3-1", "T5.1", "f(int_γ(cl_γ(A))) ⊆ cl_γ(f(A)) ⇒ f γ-semi-continuous", Shape::Map, open_all,
      implication(t51_3, semi_continuous));

  add("R5.3.fwd", "R5.3", "p ∈ sd(A) ⇒ p ∈ scl(A − {p})", Shape::Space, none,
      [](const Instance& i) { return remark_5_3(i, true); });
  add("R5.3.rev", "R5.3", "p ∈ scl(A − {p}) ⇒ p ∈ sd(A)", Shape::Space, none,
      [](const Instance& i) { return remark_5_3(i, false); });

  add("T5.4.1", "T5.4", "scl(A) = A ∪ sd(A)", Shape::Space, none, always([](const Instance& i) {
        const SemiCalculus& c = X(i);
        return forall_subsets(c.points(), "A", [&](Subset a) { return c.scl(a) == (a | c.sd(a)); });
      }));
  add("T5.4.2", "T5.4", "sd(A ∪ B) = sd(A) ∪ sd(B)", Shape::Space, none,
      always([](const Instance& i) -> std::optional<Witness> {
        const SemiCalculus& c = X(i);
        for (unsigned a = 0; a < (1u << c.points()); ++a) {
          for (unsigned b = a + 1; b < (1u << c.points()); ++b) {
            if (c.sd(Subset(a) | Subset(b)) != (c.sd(Subset(a)) | c.sd(Subset(b)))) {
              return Witness().set("A", Subset(a)).set("B", Subset(b));
            }
          }
        }
        return std::nullopt;
      }));
  add("T5.4.3", "T5.4", "⋃ sd(A_i) = sd(⋃ A_i)", Shape::Space, none, sd_of_unions);
  add("T5.4.4", "T5.4", "sd(sd(A)) ⊆ sd(A)", Shape::Space, none, always([](const Instance& i) {
        const SemiCalculus& c = X(i);
        return forall_subsets(c.points(), "A", [&](Subset a) { return c.sd(c.sd(a)).subset_of(c.sd(a)); });
      }));
  add("T5.4.5", "T5.4", "scl(sd(A)) = sd(A)", Shape::Space, none, always([](const Instance& i) {
        const SemiCalculus& c = X(i);
        return forall_subsets(c.points(), "A", [&](Subset a) { return c.scl(c.sd(a)) == c.sd(a); });
      }));

  Cond t55_2 = [](const Instance& i) {
    return forall_subsets(Y(i).points(), "A", [&](Subset a) {
      return X(i).scl(i.f().preimage(a)).subset_of(i.f().preimage(Y(i).gamma().cl_gamma(a)));
    });
  };
  add("T5.5.1-2", "T5.5", "f γ-semi-continuous ⇒ scl(f⁻¹(A)) ⊆ f⁻¹(cl_γ(A))", Shape::Map, none,
      implication(semi_continuous, t55_2));
  add("T5.5.2-1", "T5.5", "scl(f⁻¹(A)) ⊆ f⁻¹(cl_γ(A)) ⇒ f γ-semi-continuous", Shape::Map, none,
      implication(t55_2, semi_continuous));

  Cond t56_2 = [](const Instance& i) {
    return forall_subsets(X(i).points(), "A", [&](Subset a) {
      return i.f().image(X(i).sd(a)).subset_of(Y(i).gamma().cl_gamma(i.f().image(a)));
    });
  };
  add("T5.6.1-2", "T5.6", "f γ-semi-continuous ⇒ f(sd(A)) ⊆ cl_γ(f(A))", Shape::Map, open_all,
      implication(semi_continuous, t56_2));
  add("T5.6.2-1", "T5.6", "f(sd(A)) ⊆ cl_γ(f(A)) ⇒ f γ-semi-continuous", Shape::Map, open_all,
      implication(t56_2, semi_continuous));

  const std::vector<Hypothesis> regular{hyp(H::OpRegular)};
  add("T5.7.fwd", "T5.7", "f γ-semi-continuous ⇒ each γ-open B ∋ f(x) has semi-open A ∋ x, f(A) ⊆ B",
      Shape::Map, regular, implication(semi_continuous, local_semi_open_preimages));
  add("T5.7.rev", "T5.7", "each γ-open B ∋ f(x) has semi-open A ∋ x, f(A) ⊆ B ⇒ f γ-semi-continuous",
      Shape::Map, regular, implication(local_semi_open_preimages, semi_continuous));

  Cond derived_images = [](const Instance& i) {
    return forall_subsets(X(i).points(), "A", [&](Subset a) {
      return i.f().image(X(i).sd(a)).subset_of(Y(i).gamma().gamma_derived(i.f().image(a)));
    });
  };
  add("T5.8", "T5.8", "f γ-semi-continuous ⇒ f(sd(A)) ⊆ (f(A))^d_γ", Shape::Map,
      {hyp(H::MapInjective), hyp(H::OpRegular)}, implication(semi_continuous, derived_images));
  add("T5.9", "T5.9", "f(sd(A)) ⊆ (f(A))^d_γ ⇒ f γ-semi-continuous", Shape::Map, open_all,
      implication(derived_images, semi_continuous));

  Cond t510_rhs = [](const Instance& i) {
    return forall_subsets(Y(i).points(), "B", [&](Subset b) {
      return i.f().preimage(Y(i).gamma().int_gamma(b)).subset_of(X(i).sint(i.f().preimage(b)));
    });
  };
  add("T5.10.fwd", "T5.10", "f γ-semi-continuous ⇒ f⁻¹(int_γ(B)) ⊆ sint(f⁻¹(B))", Shape::Map, regular,
      implication(semi_continuous, t510_rhs));
  add("T5.10.rev", "T5.10", "f⁻¹(int_γ(B)) ⊆ sint(f⁻¹(B)) ⇒ f γ-semi-continuous", Shape::Map, regular,
      implication(t510_rhs, semi_continuous));
  // Statements about one γ on every space, as opposed to (γ,β) pairs.
  const std::vector<std::string> shared{"T3.1", "T3.2", "T3.10", "T3.11", "T4.1", "T4.2", "T4.3", "T5.1",
                                        "T5.5", "T5.6", "T5.7", "T5.8", "T5.9", "T5.10"};
  for (TheoremSpec& s : r) {
    s.shared_op = std::find(shared.begin(), shared.end(), s.group) != shared.end();
  }
  return r;
}

}  // namespace

const std::vector<TheoremSpec>& registry() {
  static const std::vector<TheoremSpec> specs = build_registry();
  return specs;
}

const TheoremSpec* find_theorem(std::string_view id) {
  for (const TheoremSpec& s : registry()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::vector<const TheoremSpec*> select_theorems(std::string_view selector) {
  std::vector<const TheoremSpec*> out;
  for (const TheoremSpec& s : registry()) {
    const bool prefix = s.id.size() > selector.size() && s.id.compare(0, selector.size(), selector) == 0 &&
                        s.id[selector.size()] == '.';
    if (selector == "all" || s.id == selector || s.group == selector || prefix) out.push_back(&s);
  }
  return out;
}

}  // namespace gammalab
