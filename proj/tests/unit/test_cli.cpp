#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gammalab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(GAMMALAB_FIXTURES) + "/" + name; }

}  // namespace

TEST(Cli, EnumerateCount) {
  const CliRun r = run({"enumerate", "--points", "3", "--count-only"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "29\n");
  EXPECT_EQ(run({"enumerate", "--points", "4", "--up-to-iso", "--count-only"}).out, "33\n");
}

TEST(Cli, ComputeSemiClosure) {
  const CliRun r = run({"compute", "--file", fixture("sierpinski.txt"), "--space", "S", "--op", "G", "--set", "1",
                     "--what", "scl"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{1}\n");
  EXPECT_EQ(run({"compute", "--file", fixture("sierpinski.txt"), "--space", "S", "--op", "C", "--set", "0",
                 "--what", "clg"})
                .out,
            "{0,1}\n");
}

TEST(Cli, Validate) {
  EXPECT_EQ(run({"validate", fixture("sierpinski.txt")}).code, 0);
  EXPECT_EQ(run({"validate", fixture("three_point.txt")}).code, 0);
  for (const char* bad : {"bad_syntax.txt", "bad_topology.txt", "incomplete_table.txt", "map_out_of_range.txt"}) {
    const CliRun r = run({"validate", fixture(bad)});
    EXPECT_EQ(r.code, 2) << bad;
    EXPECT_TRUE(r.out.empty()) << bad;
    EXPECT_NE(r.err.find("error"), std::string::npos) << bad;
  }
  EXPECT_NE(run({"validate", fixture("bad_syntax.txt")}).err.find("3:13"), std::string::npos);
  EXPECT_NE(run({"validate", fixture("incomplete_table.txt")}).err.find("IncompleteOperationTable"),
            std::string::npos);
  EXPECT_EQ(run({"validate", fixture("missing.txt")}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--points", "9"}).code, 2);
  EXPECT_EQ(run({"check", "--theorem", "T9.9"}).code, 2);
  EXPECT_EQ(run({"check", "--theorem", "T5.4.1", "--ops", "random:x"}).code, 2);
  EXPECT_EQ(run({"compute", "--file", fixture("sierpinski.txt"), "--space", "S", "--op", "G", "--set", "0",
                 "--what", "nope"})
                .code,
            2);
  EXPECT_EQ(run({"search", "--theorem", "T5.4.1", "--drop", "not-a-hypothesis"}).code, 2);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run({"check", "--theorem", "T5.4.1", "--max-points", "3", "--ops", "builtins"}).code, 0);
  const CliRun fails = run({"check", "--theorem", "T5.4.2", "--max-points", "3"});
  EXPECT_EQ(fails.code, 1);
  EXPECT_NE(fails.out.find("FAILS"), std::string::npos);
  EXPECT_EQ(run({"check", "--theorem", "T5.5.1-2", "--max-points", "3", "--instance-cap", "10"}).code, 3);
}

TEST(Cli, SearchExitCodes) {
  EXPECT_EQ(run({"search", "--theorem", "T5.4.1", "--max-points", "3", "--budget", "5"}).code, 3);
  EXPECT_EQ(run({"search", "--theorem", "T5.4.1", "--max-points", "2"}).code, 0);
  EXPECT_EQ(run({"search", "--theorem", "T3.1.1-2", "--drop", "op-regular", "--max-points", "3"}).code, 1);
}

TEST(Cli, ClassifyMap) {
  const CliRun r = run({"classify-map", "--file", fixture("sierpinski.txt"), "--map", "swap"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gamma-semi-continuous: no (B = {0})"), std::string::npos);
  const CliRun id = run({"classify-map", "--file", fixture("sierpinski.txt"), "--map", "id"});
  EXPECT_EQ(id.out.find(": no"), std::string::npos);
}

TEST(Cli, MachineOutputIsDeterministic) {
  const std::vector<std::string> check{"check", "--theorem", "T5.5", "--max-points", "2", "--closed-def", "both",
                                       "--all-verdicts", "--machine"};
  const CliRun a = run(check);
  std::vector<std::string> parallel = check;
  parallel.insert(parallel.end(), {"--workers", "4"});
  const CliRun b = run(parallel);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run(check).out);
  EXPECT_NE(a.out.find("\"type\":\"verdict\""), std::string::npos);

  const std::vector<std::string> search{"search", "--theorem", "T3.9",   "--drop", "op-regular", "--ops",
                                        "random:20:7", "--max-points", "3", "--machine"};
  const CliRun s = run(search);
  EXPECT_EQ(s.code, 1);
  EXPECT_EQ(s.out, run(search).out);
}

TEST(Cli, ListAndAudit) {
  const CliRun r = run({"list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("T3.8.1-corrected"), std::string::npos);
  const CliRun a = run({"audit", "--max-points", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("T3.14.1-prooftext"), std::string::npos);
}
