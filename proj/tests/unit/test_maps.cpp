#include <gtest/gtest.h>

#include "gammalab/enumerate.hpp"
#include "gammalab/error.hpp"
#include "gammalab/maps.hpp"

using namespace gammalab;

namespace {

const Subset E;
const Subset P0 = Subset::point(0);
const Subset P1 = Subset::point(1);
const Subset X2(0b11);

struct Fixture {
  SemiCalculus s = SemiCalculus(Operation::builtin(sierpinski(), OperationKind::Identity));
  PointMap map(std::vector<int> t) const { return PointMap(s, s, t); }
};

}  // namespace

TEST(PointMap, ImagesAndFlags) {
  Fixture fx;
  const PointMap swap = fx.map({1, 0});
  EXPECT_EQ(swap.image(P0), P1);
  EXPECT_EQ(swap.preimage(P0), P1);
  EXPECT_TRUE(swap.bijective());
  const PointMap constant = fx.map({0, 0});
  EXPECT_FALSE(constant.injective());
  EXPECT_FALSE(constant.surjective());
  EXPECT_EQ(constant.preimage(P1), E);
  EXPECT_THROW(fx.map({0, 2}), Error);
}

TEST(MapPredicates, SemiContinuity) {
  Fixture fx;
  EXPECT_TRUE(is_gamma_semi_continuous(fx.map({0, 1})));
  const MapVerdict swap = is_gamma_semi_continuous(fx.map({1, 0}));
  EXPECT_FALSE(swap.holds);
  EXPECT_EQ(swap.witness, P0);
  EXPECT_TRUE(is_gamma_semi_continuous(fx.map({0, 0})));
}

TEST(MapPredicates, SemiOpenAndClosed) {
  Fixture fx;
  EXPECT_TRUE(is_gamma_semi_open_map(fx.map({0, 1})));
  EXPECT_TRUE(is_gamma_semi_closed_map(fx.map({0, 1})));
  const MapVerdict swap = is_gamma_semi_open_map(fx.map({1, 0}));
  EXPECT_FALSE(swap.holds);
  EXPECT_EQ(swap.witness, P0);
  EXPECT_TRUE(is_gamma_semi_closed_map(fx.map({1, 1})));
}

TEST(MapPredicates, GammaBetaContinuity) {
  Fixture fx;
  EXPECT_TRUE(is_gb_continuous(fx.map({0, 1}), ContinuityMode::Pointwise));
  EXPECT_TRUE(is_gb_continuous(fx.map({0, 1}), ContinuityMode::Preimage));
  const MapVerdict swap = is_gb_continuous(fx.map({1, 0}), ContinuityMode::Pointwise);
  EXPECT_FALSE(swap.holds);
  EXPECT_EQ(swap.point, 1);
  EXPECT_EQ(swap.witness, P0);

  // β = closure on the three-point space has γ-open family {∅, X}.
  const FiniteSpace y = make_space(3, std::vector<unsigned>{0, 0b001, 0b010, 0b011, 0b111});
  const SemiCalculus cod(Operation::builtin(y, OperationKind::Closure));
  for (const auto& t : all_functions(2, 3)) {
    EXPECT_TRUE(is_gb_continuous(PointMap(fx.s, cod, t), ContinuityMode::Preimage));
  }
}

TEST(MapPredicates, GammaBetaOpenAndClosed) {
  Fixture fx;
  EXPECT_TRUE(is_gb_open_map(fx.map({0, 1})));
  EXPECT_TRUE(is_gb_closed_map(fx.map({0, 1})));
  const SemiCalculus point(Operation::builtin(indiscrete(1), OperationKind::Identity));
  EXPECT_TRUE(is_gb_open_map(PointMap(point, fx.s, std::vector<int>{0})));
  const MapVerdict constant = is_gb_open_map(fx.map({1, 1}));
  EXPECT_FALSE(constant.holds);
  EXPECT_EQ(constant.witness, P0);
}

TEST(MapPredicates, IdentityMapHasEveryProperty) {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const SemiCalculus c(Operation::builtin(s, OperationKind::Identity));
      std::vector<int> id(n);
      for (int i = 0; i < n; ++i) id[i] = i;
      const PointMap m(c, c, id);
      EXPECT_TRUE(is_gamma_semi_continuous(m) && is_gamma_semi_open_map(m) && is_gamma_semi_closed_map(m));
      EXPECT_TRUE(is_gb_continuous(m, ContinuityMode::Pointwise) && is_gb_continuous(m, ContinuityMode::Preimage));
      EXPECT_TRUE(is_gb_open_map(m) && is_gb_closed_map(m));
    }
  }
}

TEST(MapPredicates, WitnessesReproduceFailures) {
  const auto spaces = enumerate_topologies(2);
  for (const FiniteSpace& a : spaces) {
    for (const FiniteSpace& b : spaces) {
      for (OperationKind k : {OperationKind::Identity, OperationKind::Closure}) {
        const SemiCalculus dom(Operation::builtin(a, k));
        const SemiCalculus cod(Operation::builtin(b, k));
        for (const auto& t : all_functions(2, 2)) {
          const PointMap m(dom, cod, t);
          if (const MapVerdict v = is_gamma_semi_continuous(m); !v) {
            EXPECT_TRUE(cod.gamma_open().contains(v.witness));
            EXPECT_FALSE(dom.semi_open().contains(m.preimage(v.witness)));
          }
          if (const MapVerdict v = is_gamma_semi_open_map(m); !v) {
            EXPECT_TRUE(dom.gamma_open().contains(v.witness));
            EXPECT_FALSE(cod.semi_open().contains(m.image(v.witness)));
          }
          if (const MapVerdict v = is_gamma_semi_closed_map(m); !v) {
            EXPECT_TRUE(dom.gamma_closed().contains(v.witness));
            EXPECT_FALSE(cod.semi_closed().contains(m.image(v.witness)));
          }
          if (const MapVerdict v = is_gb_open_map(m); !v) {
            EXPECT_FALSE(cod.gamma_open().contains(m.image(v.witness)));
          }
        }
      }
    }
  }
}

TEST(MapPredicates, PreimageContinuityComposes) {
  const auto spaces = enumerate_topologies(2);
  std::vector<SemiCalculus> calcs;
  for (const FiniteSpace& s : spaces) {
    for (OperationKind k : {OperationKind::Identity, OperationKind::Closure, OperationKind::InteriorClosure}) {
      calcs.emplace_back(Operation::builtin(s, k));
    }
  }
  const auto fns = all_functions(2, 2);
  for (const auto& x : calcs) {
    for (const auto& y : calcs) {
      for (const auto& z : calcs) {
        for (const auto& f : fns) {
          const PointMap mf(x, y, f);
          if (!is_gb_continuous(mf, ContinuityMode::Preimage)) continue;
          for (const auto& g : fns) {
            const PointMap mg(y, z, g);
            if (!is_gb_continuous(mg, ContinuityMode::Preimage)) continue;
            const std::vector<int> gf{g[f[0]], g[f[1]]};
            EXPECT_TRUE(is_gb_continuous(PointMap(x, z, gf), ContinuityMode::Preimage));
          }
        }
      }
    }
  }
}

TEST(AllFunctions, OrderAndCount) {
  const auto fns = all_functions(2, 3);
  ASSERT_EQ(fns.size(), 9u);
  EXPECT_EQ(fns.front(), (std::vector<int>{0, 0}));
  EXPECT_EQ(fns[1], (std::vector<int>{0, 1}));
  EXPECT_EQ(fns.back(), (std::vector<int>{2, 2}));
}
