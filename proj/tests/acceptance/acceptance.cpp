// One PASS/FAIL line per acceptance criterion, followed by indented detail.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "gammalab/enumerate.hpp"
#include "gammalab/lab.hpp"
#include "naive.hpp"

using namespace gammalab;

namespace {

constexpr double kEnumerationSeconds = 60.0;
constexpr double kInvariantSeconds = 300.0;
constexpr double kMapSweepSeconds = 900.0;
constexpr int kRandomOpsPerSpace = 100;
constexpr std::uint64_t kRandomOpsSeed = 0x5eed;
constexpr int kGridPoints = 3;
constexpr int kSpeedupWorkers = 2;
constexpr double kMinSpeedup = 1.5;  // with kSpeedupWorkers on at least that many cores
constexpr std::uint64_t kSearchBudget = 10'000'000;

struct Result {
  bool pass = true;
  std::vector<std::string> detail;
  void note(std::string s) { detail.push_back(std::move(s)); }
  void require(bool ok, std::string what) {
    if (!ok) {
      pass = false;
      note("violated: " + what);
    }
  }
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string tally(const Summary& s) {
  std::ostringstream o;
  o << s.theorem << ": instances=" << s.instances << " holds=" << s.holds << " vacuous=" << s.vacuous
    << " counterexamples=" << s.counterexamples << " skipped=" << s.skipped;
  return o.str();
}

std::string cli(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str() + err.str();
}

Result enumeration() {
  Result r;
  const Timer t;
  const std::size_t expect[] = {1, 4, 29, 355};
  for (int n = 1; n <= 4; ++n) {
    const std::size_t lib = enumerate_topologies(n).size();
    const std::size_t oracle = naive::count_topologies(n);
    r.note("n=" + std::to_string(n) + " library=" + std::to_string(lib) + " filter=" + std::to_string(oracle));
    r.require(lib == expect[n - 1] && oracle == expect[n - 1], "count for n=" + std::to_string(n));
  }
  r.note("seconds=" + fmt("%.2f", t.seconds()) + " limit=" + fmt("%.0f", kEnumerationSeconds));
  r.require(t.seconds() < kEnumerationSeconds, "runtime");
  return r;
}

Result classical_reduction() {
  Result r;
  std::size_t spaces = 0, bad = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      ++spaces;
      const SemiCalculus c(Operation::builtin(s, OperationKind::Identity));
      naive::Family lib;
      c.semi_open().for_each([&](Subset a) { lib.insert(naive::to_set(a)); });
      if (lib != naive::levine_semi_open(naive::to_space(s))) ++bad;
    }
  }
  r.note("spaces=" + std::to_string(spaces) + " discrepancies=" + std::to_string(bad));
  r.require(bad == 0, "semi-open family differs from the classical one");
  return r;
}

std::vector<Operation> invariant_grid() {
  std::vector<Operation> ops;
  for (int n = 1; n <= kGridPoints; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      for (Operation& op : builtin_operations(s)) ops.push_back(std::move(op));
      for (Operation& op : sample_operations(s, kRandomOpsPerSpace, kRandomOpsSeed ^ s.open_family().word())) {
        ops.push_back(std::move(op));
      }
    }
  }
  return ops;
}

Result invariants() {
  Result r;
  const Timer t;
  std::uint64_t checks = 0, violations = 0;
  auto expect = [&](bool ok) {
    ++checks;
    if (!ok) ++violations;
  };
  const auto ops = invariant_grid();
  for (const Operation& op : ops) {
    for (ClosedDef def : {ClosedDef::Complement, ClosedDef::ClosurePoint}) {
      const SemiCalculus c(op, def);
      const GammaCalculus& g = c.gamma();
      const Subset x = c.whole();
      for (Subset e : {Subset(), x}) {
        expect(g.int_gamma(e) == e && g.cl_gamma(e) == e && c.sint(e) == e && c.scl(e) == e);
      }
      for_each_subset(c.points(), [&](Subset a) {
        expect(g.int_gamma(a).subset_of(a));
        expect(a.subset_of(g.cl_gamma(a)));
        expect(g.cl_gamma(a) == c.complement(g.int_gamma(c.complement(a))));
        for_each_subset_of(a, [&](Subset b) {
          expect(g.int_gamma(b).subset_of(g.int_gamma(a)));
          expect(g.cl_gamma(b).subset_of(g.cl_gamma(a)));
          expect(c.sint(b).subset_of(c.sint(a)));
          expect(c.scl(b).subset_of(c.scl(a)));
        });
      });
    }
  }
  r.note("operations=" + std::to_string(ops.size()) + " checks=" + std::to_string(checks) +
         " violations=" + std::to_string(violations));
  r.note("seconds=" + fmt("%.2f", t.seconds()) + " limit=" + fmt("%.0f", kInvariantSeconds));
  r.require(violations == 0, "definitional invariants");
  r.require(t.seconds() < kInvariantSeconds, "runtime");
  return r;
}

Result equivalences() {
  Result r;
  CheckOptions o;
  o.max_points = kGridPoints;
  o.ops.kind = OpSource::Kind::Random;
  o.ops.count = kRandomOpsPerSpace;
  o.ops.seed = kRandomOpsSeed;
  o.closed_defs = {ClosedDef::Complement, ClosedDef::ClosurePoint};
  for (const char* id : {"L2.2.fwd", "L2.2.rev", "R5.3.fwd", "R5.3.rev", "T5.4.1", "T5.4.2", "T5.4.4", "T5.4.5"}) {
    const CheckReport rep = check_theorem(*find_theorem(id), o);
    r.note(tally(rep.summary));
    if (rep.summary.first_counterexample) {
      r.note("  first counterexample #" + std::to_string(rep.summary.first_counterexample->index) + ": " +
             rep.summary.first_counterexample->witness.to_string());
    }
    r.require(rep.summary.counterexamples == 0, std::string("zero counterexamples for ") + id);
  }
  return r;
}

std::vector<const TheoremSpec*> map_sweep_specs() {
  std::vector<const TheoremSpec*> out;
  for (const char* group : {"T5.1", "T5.5", "T5.6", "T5.10", "L3.12"}) {
    for (const TheoremSpec* s : select_theorems(group)) out.push_back(s);
  }
  return out;
}

double sweep(const std::vector<const TheoremSpec*>& specs, const CheckOptions& o, Result* r) {
  const Timer t;
  for (const TheoremSpec* s : specs) {
    const CheckReport rep = check_theorem(*s, o);
    if (!r) continue;
    std::string line = tally(rep.summary);
    for (const auto& [name, count] : rep.summary.skipped_by) line += " unmet:" + name + "=" + std::to_string(count);
    r->note(line);
    r->require(rep.summary.counterexamples == 0,
               s->id + " under open-dir " + to_string(o.open_dir));
  }
  return t.seconds();
}

Result map_sweeps() {
  Result r;
  CheckOptions o;
  o.max_points = kGridPoints;
  o.closed_defs = {ClosedDef::Complement, ClosedDef::ClosurePoint};
  const auto specs = map_sweep_specs();
  double single = 0;
  for (OpenDirection dir : {OpenDirection::Paper, OpenDirection::Standard}) {
    o.open_dir = dir;
    r.note(std::string("open-dir ") + to_string(dir));
    const double secs = sweep(specs, o, &r);
    if (dir == OpenDirection::Paper) single = secs;
  }
  r.note("single-worker seconds=" + fmt("%.2f", single) + " limit=" + fmt("%.0f", kMapSweepSeconds));
  r.require(single < kMapSweepSeconds, "runtime");

  const unsigned cores = std::thread::hardware_concurrency();
  o.open_dir = OpenDirection::Paper;
  o.workers = kSpeedupWorkers;
  const double parallel = sweep(specs, o, nullptr);
  const double speedup = single / parallel;
  r.note("workers=" + std::to_string(kSpeedupWorkers) + " seconds=" + fmt("%.2f", parallel) +
         " speedup=" + fmt("%.2f", speedup) + " cores=" + std::to_string(cores));
  if (cores >= static_cast<unsigned>(kSpeedupWorkers)) {
    r.require(speedup >= kMinSpeedup, "speedup " + fmt("%.2f", speedup) + " < " + fmt("%.2f", kMinSpeedup));
  } else {
    r.note("speedup not measurable on this machine");
  }
  return r;
}

Result probing() {
  Result r;
  for (const char* group : {"T3.1", "T3.9"}) {
    const std::vector<std::string> args{"search", "--theorem", group, "--drop", "op-regular",
                                        "--max-points", std::to_string(kGridPoints), "--machine"};
    int c1 = 0, c2 = 0;
    const std::string a = cli(args, &c1);
    const std::string b = cli(args, &c2);
    r.note(std::string(group) + ": exit=" + std::to_string(c1) + " streams " + (a == b ? "identical" : "differ"));
    r.require(a == b && c1 == c2, std::string("identical verdict streams for ") + group);

    CheckOptions o;
    o.max_points = kGridPoints;
    for (const TheoremSpec* s : select_theorems(group)) {
      const SearchResult res = search_counterexample(*s, {HypothesisKind::OpRegular}, o, kSearchBudget);
      if (!res.counterexample) {
        r.note("  " + s->id + ": no counterexample, evaluated=" + std::to_string(res.evaluated) +
               (res.grid_exhausted ? " (grid exhausted)" : ""));
        continue;
      }
      const Verdict& v = *res.counterexample;
      naive::Instance inst = naive::from_recipe(v.recipe, v.config);
      inst.drop_regular = true;
      bool covered = false;
      const naive::Outcome e = naive::evaluate(s->id, inst, covered);
      const bool genuine = covered && !e.skipped && !e.holds;
      r.note("  " + s->id + ": counterexample #" + std::to_string(v.index) + " " + v.witness.to_string() +
             (genuine ? " replays" : " does not replay"));
      r.require(genuine, s->id + " witness replays independently");
    }
  }
  return r;
}

Result audit() {
  Result r;
  int code = 0;
  const std::string table = cli({"audit", "--max-points", std::to_string(kGridPoints)}, &code);
  std::istringstream in(table);
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    r.note(line);
    if (line.rfind("T3.", 0) == 0) ++rows;
  }
  r.require(code == 0, "audit exit status");
  r.require(rows == static_cast<int>(select_theorems("T3.8").size() + select_theorems("T3.14").size()),
            "one row per variant");
  return r;
}

Result determinism() {
  Result r;
  const std::vector<std::vector<std::string>> runs{
      {"check", "--theorem", "T5", "--max-points", "2", "--closed-def", "both", "--machine", "--all-verdicts"},
      {"check", "--theorem", "T5", "--max-points", "3", "--closed-def", "both", "--machine"},
      {"check", "--theorem", "T3.14", "--max-points", "2", "--ops", "random:3:9", "--machine"},
      {"check", "--theorem", "T3.9", "--max-points", "3", "--ops", "random:20:7", "--machine", "--shuffle-seed", "3"},
      {"search", "--theorem", "T3.9", "--drop", "op-regular", "--ops", "random:20:7", "--machine"},
      {"search", "--theorem", "T3.1", "--drop", "op-regular,op-monotone", "--machine"},
  };
  for (const auto& args : runs) {
    const std::string base = cli(args);
    bool same = cli(args) == base;
    for (const char* w : {"2", "4"}) {
      std::vector<std::string> par = args;
      par.insert(par.end(), {"--workers", w});
      same = same && cli(par) == base;
    }
    std::string cmd;
    for (const auto& a : args) cmd += a + " ";
    r.note(cmd + "-> " + std::to_string(base.size()) + " bytes, " + (same ? "identical" : "DIFFERENT"));
    r.require(same, "bit-identical output for " + cmd);
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"C1 enumeration counts match the filter oracle", enumeration},
      {"C2 identity operation gives the classical semi-open sets", classical_reduction},
      {"C3 definitional invariants", invariants},
      {"C4 neighbourhood, derived-set and hull equivalences", equivalences},
      {"C5 map-theorem sweeps", map_sweeps},
      {"C6 hypothesis probing", probing},
      {"C7 variant audit", audit},
      {"C8 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const Timer t;
    const Result r = fn();
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << " (" << fmt("%.1f", t.seconds()) << "s)\n";
    for (const std::string& d : r.detail) std::cout << "    " << d << '\n';
    std::cout.flush();
    if (!r.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
  return failed == 0 ? 0 : 1;
}
