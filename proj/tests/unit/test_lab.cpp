#include <gtest/gtest.h>

#include "gammalab/error.hpp"
#include "gammalab/lab.hpp"
#include "naive.hpp"

using namespace gammalab;

namespace {

const TheoremSpec& spec(std::string_view id) {
  const TheoremSpec* s = find_theorem(id);
  if (!s) throw std::runtime_error("missing " + std::string(id));
  return *s;
}

CheckOptions small() {
  CheckOptions o;
  o.max_points = 2;
  o.ops = OpSource::parse("random:4:11");
  o.closed_defs = {ClosedDef::Complement, ClosedDef::ClosurePoint};
  return o;
}

void expect_same(const CheckReport& a, const CheckReport& b) {
  EXPECT_EQ(a.summary.instances, b.summary.instances);
  EXPECT_EQ(a.summary.holds, b.summary.holds);
  EXPECT_EQ(a.summary.vacuous, b.summary.vacuous);
  EXPECT_EQ(a.summary.counterexamples, b.summary.counterexamples);
  EXPECT_EQ(a.summary.skipped, b.summary.skipped);
  EXPECT_EQ(a.summary.skipped_by, b.summary.skipped_by);
  ASSERT_EQ(a.verdicts.size(), b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    EXPECT_EQ(a.verdicts[i].index, b.verdicts[i].index);
    EXPECT_EQ(a.verdicts[i].witness, b.verdicts[i].witness);
    EXPECT_EQ(a.verdicts[i].recipe.to_document(), b.verdicts[i].recipe.to_document());
  }
}

}  // namespace

TEST(OpSource, Parse) {
  EXPECT_EQ(OpSource::parse("builtins").kind, OpSource::Kind::Builtins);
  const OpSource r = OpSource::parse("random:100:0x2a");
  EXPECT_EQ(r.kind, OpSource::Kind::Random);
  EXPECT_EQ(r.count, 100);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_EQ(OpSource::parse(r.to_string()).seed, 42u);
  EXPECT_EQ(OpSource::parse("exhaustive").kind, OpSource::Kind::Exhaustive);
  for (const char* bad : {"random", "random:x:1", "random:1", "everything", "random:-1:2"}) {
    EXPECT_THROW(OpSource::parse(bad), Error) << bad;
  }
}

TEST(Registry, IdsAreUniqueAndSelectable) {
  std::set<std::string> ids;
  for (const TheoremSpec& s : registry()) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    EXPECT_FALSE(s.statement.empty()) << s.id;
    EXPECT_EQ(find_theorem(s.id), &s);
  }
  EXPECT_EQ(select_theorems("all").size(), registry().size());
  EXPECT_EQ(select_theorems("T3.1").size(), 4u);
  for (const TheoremSpec* s : select_theorems("T3.1")) EXPECT_EQ(s->group, "T3.1");
  EXPECT_TRUE(select_theorems("T9").empty());
}

TEST(Lab, DeterministicAcrossWorkers) {
  for (const char* id : {"T3.1.1-2", "T5.5.1-2", "L3.12.2-1", "T3.9"}) {
    CheckOptions o = small();
    o.keep_all_verdicts = true;
    const CheckReport one = check_theorem(spec(id), o);
    for (int w : {2, 3, 4}) {
      o.workers = w;
      expect_same(one, check_theorem(spec(id), o));
    }
  }
}

TEST(Lab, ShuffleKeepsCounts) {
  CheckOptions o = small();
  o.max_kept_counterexamples = 1 << 20;
  const CheckReport base = check_theorem(spec("T3.1.1-2"), o);
  o.shuffle_seed = 7;
  const CheckReport shuffled = check_theorem(spec("T3.1.1-2"), o);
  EXPECT_EQ(base.summary.instances, shuffled.summary.instances);
  EXPECT_EQ(base.summary.counterexamples, shuffled.summary.counterexamples);
  EXPECT_EQ(base.summary.skipped, shuffled.summary.skipped);
  o.workers = 3;
  expect_same(shuffled, check_theorem(spec("T3.1.1-2"), o));
}

TEST(Lab, CounterexamplesReplay) {
  for (const char* id : {"T5.5.1-2", "T5.4.2", "L3.12.2-1", "T3.8.1", "T3.14.1"}) {
    CheckOptions o;
    o.max_points = spec(id).shape == Shape::MapPair ? 2 : 3;
    const CheckReport r = check_theorem(spec(id), o);
    ASSERT_GT(r.summary.counterexamples, 0u) << id;
    for (const Verdict& v : r.verdicts) {
      const ReplayResult rr = replay(spec(id), v);
      EXPECT_FALSE(rr.claim.holds) << id << " #" << v.index;
      EXPECT_TRUE(rr.unmet.empty()) << id;
      EXPECT_EQ(rr.claim.witness, v.witness) << id;
    }
  }
}

TEST(Lab, ReplayedCounterexamplesFailIndependently) {
  CheckOptions o;
  o.max_points = 3;
  o.open_dir = OpenDirection::Standard;
  for (const char* id : {"T5.5.1-2", "T5.10.fwd", "L3.12.2-1"}) {
    const CheckReport r = check_theorem(spec(id), o);
    ASSERT_TRUE(r.summary.first_counterexample.has_value()) << id;
    const Verdict& v = *r.summary.first_counterexample;
    bool covered = false;
    const naive::Outcome e = naive::evaluate(id, naive::from_recipe(v.recipe, v.config), covered);
    ASSERT_TRUE(covered);
    EXPECT_FALSE(e.skipped);
    EXPECT_FALSE(e.holds) << id;
  }
}

TEST(Lab, HandExampleForSemiNeighbourhoods) {
  // Closure on {∅,{0},{1},{0,1},X} leaves only ∅ and X γ-open, so the
  // statement breaks at A = {0} on that space and its relabelings.
  CheckOptions o;
  o.max_points = 3;
  o.closed_defs = {ClosedDef::Complement, ClosedDef::ClosurePoint};
  const CheckReport r = check_theorem(spec("L3.12.2-1"), o);
  EXPECT_EQ(r.summary.instances, 204u);
  EXPECT_EQ(r.summary.counterexamples, 6u);
  ASSERT_TRUE(r.summary.first_counterexample.has_value());
  const Verdict& v = *r.summary.first_counterexample;
  EXPECT_EQ(v.recipe.ops[0].kind(), OperationKind::Closure);
  EXPECT_EQ(v.recipe.spaces[0].open_family().size(), 5);
}

TEST(Lab, EquivalenceDirectionsShareSkips) {
  CheckOptions o = small();
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"T3.1.1-2", "T3.1.2-1"}, {"T5.5.1-2", "T5.5.2-1"}, {"T4.1.fwd", "T4.1.rev"}}) {
    const CheckReport ra = check_theorem(spec(a), o);
    const CheckReport rb = check_theorem(spec(b), o);
    EXPECT_EQ(ra.summary.instances, rb.summary.instances) << a;
    EXPECT_EQ(ra.summary.skipped, rb.summary.skipped) << a;
    EXPECT_EQ(ra.summary.skipped_by, rb.summary.skipped_by) << a;
  }
}

TEST(Lab, CountsAddUp) {
  for (const TheoremSpec& s : registry()) {
    CheckOptions o;
    o.max_points = 2;
    const CheckReport r = check_theorem(s, o);
    const Summary& m = r.summary;
    EXPECT_EQ(m.instances, grid_size(s, o)) << s.id;
    EXPECT_EQ(m.holds + m.counterexamples + m.skipped + m.not_applicable, m.instances) << s.id;
    EXPECT_LE(m.vacuous, m.holds) << s.id;
    std::uint64_t by = 0;
    for (const auto& [name, count] : m.skipped_by) by += count;
    EXPECT_GE(by, m.skipped) << s.id;
  }
}

TEST(Lab, BuiltinCheckOfSemiNeighbourhoodCharacterisation) {
  CheckOptions o;
  o.max_points = 3;
  const CheckReport r = check_theorem(spec("T5.4.1"), o);
  EXPECT_EQ(r.summary.counterexamples, 0u);
  EXPECT_EQ(r.summary.instances, 34u * 3u);
}

TEST(Lab, CapsAreEnforced) {
  CheckOptions o;
  o.max_points = 3;
  o.instance_cap = 10;
  try {
    check_theorem(spec("T5.5.1-2"), o);
    ADD_FAILURE() << "no cap";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  o.instance_cap = 500'000'000;
  o.max_points = 7;
  EXPECT_THROW(check_theorem(spec("T5.4.1"), o), Error);
  o.max_points = 3;
  o.ops = OpSource::parse("exhaustive");
  o.exhaustive_ops_cap = 100;
  EXPECT_THROW(check_theorem(spec("T5.4.1"), o), Error);
}

TEST(Search, FindsTheSameFirstCounterexampleAsCheck) {
  CheckOptions o;
  o.max_points = 3;
  const SearchResult s = search_counterexample(spec("T5.5.1-2"), {}, o, 10'000'000);
  const CheckReport r = check_theorem(spec("T5.5.1-2"), o);
  ASSERT_TRUE(s.counterexample && r.summary.first_counterexample);
  EXPECT_EQ(s.counterexample->index, r.summary.first_counterexample->index);
  EXPECT_EQ(s.counterexample->witness, r.summary.first_counterexample->witness);
}

TEST(Search, DroppingRegularity) {
  CheckOptions o;
  o.max_points = 3;
  const SearchResult a = search_counterexample(spec("T3.1.1-2"), {HypothesisKind::OpRegular}, o, 10'000'000);
  const SearchResult b = search_counterexample(spec("T3.1.1-2"), {HypothesisKind::OpRegular}, o, 10'000'000);
  ASSERT_TRUE(a.counterexample.has_value());
  EXPECT_EQ(a.counterexample->index, b.counterexample->index);
  EXPECT_EQ(a.evaluated, b.evaluated);
  EXPECT_FALSE(replay(spec("T3.1.1-2"), *a.counterexample).claim.holds);
}

TEST(Search, BudgetAndUsage) {
  CheckOptions o;
  o.max_points = 3;
  const SearchResult s = search_counterexample(spec("T5.4.1"), {}, o, 5);
  EXPECT_TRUE(s.budget_exhausted);
  EXPECT_EQ(s.evaluated, 5u);
  EXPECT_THROW(search_counterexample(spec("T5.4.1"), {HypothesisKind::MapBijective}, o, 5), Error);
}
