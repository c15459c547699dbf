#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "corpus.hpp"
#include "eqcover/construct/known_covers.hpp"
#include "eqcover/families.hpp"

using namespace eqcover;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EQCOVER_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("eqcover-cli-" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name), std::ios::binary) << content;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, VerifyValidAndViolation) {
  Result ok = run({"verify", "--kind", "orientation", "--graph", data("k16.g"), "--cover", data("k16.cov")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "VALID k=5\n");

  Result bad = run({"verify", "--kind", "orientation", "--graph", data("k3.g"), "--cover", data("two-orients.cov")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "VIOLATION v=0 e=(0,1) f=(0,2)\n");

  Result json = run({"verify", "--kind", "orientation", "--graph", data("k3.g"), "--cover", data("two-orients.cov"),
                     "--json"});
  EXPECT_EQ(json.code, 1);
  EXPECT_EQ(json.out, "{\"k\":2,\"line\":\"VIOLATION v=0 e=(0,1) f=(0,2)\",\"valid\":false}\n");

  Result workers = run({"verify", "--kind", "orientation", "--graph", data("k16.g"), "--cover", data("k16.cov"), "--workers", "4"});
  EXPECT_EQ(workers.code, 0);
  EXPECT_EQ(workers.out, "VALID k=5\n");
}

TEST_F(Cli, SolveWritesWitness) {
  Result r = run({"solve", "--invariant", "sigma", "--graph", data("k4.g"), "--out", path("w.cov")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sigma = 3\n");
  EXPECT_EQ(slurp(path("w.cov")), slurp(data("k4_sigma3.cov")));
  Result v = run({"verify", "--kind", "orientation", "--graph", data("k4.g"), "--cover", path("w.cov")});
  EXPECT_EQ(v.out, "VALID k=3\n");

  Result chi = run({"solve", "--invariant", "chi", "--graph", data("k4.g"), "--json"});
  EXPECT_EQ(chi.code, 0);
  EXPECT_NE(chi.out.find("\"value\":4"), std::string::npos);
}

TEST_F(Cli, SolveTimeoutExitsThree) {
  std::string g = write("m5.g", to_string(generate_family("mycielski-iterate", 5)));
  Result r = run({"solve", "--invariant", "elb", "--graph", g, "--max-nodes", "1000", "--out", path("w.cov")});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "elb in [2, 3] (timeout)\n");
  // The best witness is still written.
  Result v = run({"verify", "--kind", "elbow", "--graph", g, "--cover", path("w.cov")});
  EXPECT_EQ(v.out, "VALID k=3\n");
}

TEST_F(Cli, MalformedInputExitsTwoAndWritesNothing) {
  std::string bad_graph = write("bad.g", "p 3 1\n1 1\n");
  std::vector<std::vector<std::string>> cases{
      {"verify", "--kind", "orientation", "--graph", bad_graph, "--cover", data("k16.cov")},
      {"verify", "--kind", "orientation", "--graph", path("missing.g"), "--cover", data("k16.cov")},
      {"verify", "--kind", "eyebrow", "--graph", data("k16.g"), "--cover", data("k16.cov")},
      {"verify", "--kind", "orientation", "--graph", data("k4.g"), "--cover", data("k16.cov")},
      {"verify", "--kind", "sideways", "--graph", data("k4.g"), "--cover", data("k16.cov")},
      {"verify", "--graph", data("k4.g")},
      {"solve", "--invariant", "tau", "--graph", data("k4.g"), "--out", path("out")},
      {"construct", "--op", "orientation-from-eq", "--trifree", "--graph", data("k3.g"), "--cover", data("k16.cov"),
       "--out", path("out")},
      {"construct", "--op", "bipartite", "--graph", data("k3.g"), "--out", path("out")},
      {"construct", "--op", "elbow-complete", "--n", "0", "--out", path("out")},
      {"construct", "--op", "elbow-double", "--graph", data("k3.g"), "--cover", data("two-orients.cov"), "--out",
       path("out")},
      {"construct", "--op", "nope", "--out", path("out")},
      {"gen", "--family", "cycle", "--param", "2", "--out", path("out")},
      {"linegraph", "--graph", bad_graph, "--out", path("out")},
      {"bounds", "--graph", bad_graph, "--witness-dir", dir_.string()},
      {"frobnicate"},
      {},
  };
  for (const auto& args : cases) {
    Result r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + ' ';
    EXPECT_EQ(r.code, 2) << joined;
    EXPECT_FALSE(r.err.empty()) << joined;
    EXPECT_FALSE(fs::exists(path("out"))) << joined;
    EXPECT_FALSE(fs::exists(path("out.index"))) << joined;
    EXPECT_FALSE(fs::exists(path("chi.col"))) << joined;
  }
}

TEST_F(Cli, TriangleErrorNamesTheTriangle) {
  std::string cov = write("one.cov", "cover equivalence 1 3 3\nblock 1\nclique 0 1 2\n");
  Result r = run({"construct", "--op", "orientation-from-eq", "--trifree", "--graph", data("k3.g"), "--cover", cov});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(0,1,2)"), std::string::npos);
  Result ok = run({"construct", "--op", "orientation-from-eq", "--graph", data("k3.g"), "--cover", cov, "--out",
                   path("o.cov")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "VALID k=3\n");
}

TEST_F(Cli, Help) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"verify", "--help"}).code, 0);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  std::string g = write("p.g", to_string(generate_family("petersen")));
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"bounds", "--graph", g, "--witness-dir", dir_.string()},
        std::vector<std::string>{"bounds", "--graph", g, "--json"},
        std::vector<std::string>{"solve", "--invariant", "eqL", "--graph", g, "--out", path("w.cov")},
        std::vector<std::string>{"construct", "--op", "via-coloring", "--graph", g, "--out", path("w.cov")}}) {
    Result a = run(args);
    std::string wa = slurp(path("w.cov")), sa = slurp(path("sigma.cov"));
    Result b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(wa, slurp(path("w.cov")));
    EXPECT_EQ(sa, slurp(path("sigma.cov")));
  }
}

TEST_F(Cli, BoundsReportText) {
  Result r = run({"bounds", "--graph", data("k4.g"), "--witness-dir", dir_.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chi: 4 [exact-search]\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("sigma: 3 [chromatic-band; construction:k4-size3]\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("eqL: [1, 3] [triangle-split; analogue]\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("alon_upper: 20.4868136 [density-bound]\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("alon_lower: unbounded-by-formula"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("status: bounded"), std::string::npos) << r.out;
  EXPECT_EQ(run({"verify", "--kind", "orientation", "--graph", data("k4.g"), "--cover", path("sigma.cov")}).out,
            "VALID k=3\n");
  EXPECT_EQ(run({"verify", "--kind", "elbow", "--graph", data("k4.g"), "--cover", path("elb.cov")}).out, "VALID k=2\n");
  EXPECT_EQ(run({"verify", "--kind", "equivalence", "--graph", path("line.g"), "--cover", path("eqL.cov")}).code, 0);
}

TEST_F(Cli, LinegraphIndexSidecar) {
  std::string g = write("p3.g", to_string(generate_family("path", 3)));
  Result r = run({"linegraph", "--graph", g, "--out", path("l.g")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(path("l.g")), "p 2 1\n0 1\n");
  EXPECT_EQ(slurp(path("l.g.index")), "0 0 1\n1 1 2\n");
}

TEST_F(Cli, Gen) {
  Result r = run({"gen", "--family", "cycle", "--param", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, to_string(generate_family("cycle", 5)));
  EXPECT_EQ(run({"gen", "--family", "complete-bipartite", "--param", "2", "--param2", "3", "--out", path("k23.g")}).code,
            0);
  EXPECT_EQ(slurp(path("k23.g")), to_string(generate_family("complete-bipartite", 2, 3)));
}

TEST_F(Cli, ConstructWritesOnlyVerifiedCovers) {
  for (const auto& [name, g] : corpus::all_graphs()) {
    std::string gp = write("g.g", to_string(g));
    Result c = run({"construct", "--op", "via-coloring", "--graph", gp, "--out", path("c.cov")});
    ASSERT_EQ(c.code, 0) << name << c.err;
    Result v = run({"verify", "--kind", "orientation", "--graph", gp, "--cover", path("c.cov")});
    EXPECT_EQ(v.code, 0) << name;
    EXPECT_EQ(v.out, c.out) << name;

    Result lg = run({"linegraph", "--graph", gp, "--out", path("l.g")});
    ASSERT_EQ(lg.code, 0) << name;
    Result e = run({"construct", "--op", "eq-from-orientation", "--graph", gp, "--cover", path("c.cov"), "--out",
                    path("e.cov")});
    ASSERT_EQ(e.code, 0) << name << e.err;
    EXPECT_EQ(run({"verify", "--kind", "equivalence", "--graph", path("l.g"), "--cover", path("e.cov")}).code, 0) << name;

    Result back = run({"construct", "--op", "orientation-from-eq", "--graph", gp, "--cover", path("e.cov"), "--out",
                       path("b.cov")});
    ASSERT_EQ(back.code, 0) << name << back.err;
    EXPECT_EQ(run({"verify", "--kind", "orientation", "--graph", gp, "--cover", path("b.cov")}).code, 0) << name;

    if (is_bipartite(g)) {
      ASSERT_EQ(run({"construct", "--op", "bipartite", "--graph", gp, "--out", path("bp.cov")}).code, 0) << name;
      EXPECT_EQ(run({"verify", "--kind", "orientation", "--graph", gp, "--cover", path("bp.cov")}).code, 0) << name;
    }
    if (c.out != "VALID k=0\n" && c.out != "VALID k=1\n" && c.out != "VALID k=2\n") {
      Result col = run({"construct", "--op", "coloring-from-orientation", "--graph", gp, "--cover", path("c.cov")});
      EXPECT_EQ(col.code, 0) << name << col.err;
    }
  }
}

TEST_F(Cli, ConstructElbowFamily) {
  for (int n = 1; n <= 40; ++n) {
    std::string gp = write("k.g", to_string(complete_graph(n)));
    Result c = run({"construct", "--op", "elbow-complete", "--n", std::to_string(n), "--out", path("e.cov")});
    ASSERT_EQ(c.code, 0) << n;
    EXPECT_EQ(run({"verify", "--kind", "elbow", "--graph", gp, "--cover", path("e.cov")}).out, c.out) << n;
    Result o = run({"construct", "--op", "orientation-from-elbow", "--graph", gp, "--cover", path("e.cov"), "--out",
                    path("o.cov")});
    ASSERT_EQ(o.code, 0) << n << o.err;
    EXPECT_EQ(run({"verify", "--kind", "orientation", "--graph", gp, "--cover", path("o.cov")}).code, 0) << n;
    Result y = run({"construct", "--op", "eyebrow-complete", "--n", std::to_string(n), "--out", path("y.cov")});
    ASSERT_EQ(y.code, 0) << n;
    EXPECT_EQ(run({"verify", "--kind", "eyebrow", "--graph", gp, "--cover", path("y.cov")}).code, 0) << n;
  }
  std::string k4 = write("k4.g", to_string(complete_graph(4)));
  ASSERT_EQ(run({"construct", "--op", "elbow-complete", "--n", "4", "--out", path("b.cov")}).code, 0);
  Result d = run({"construct", "--op", "elbow-double", "--graph", k4, "--cover", path("b.cov"), "--out", path("d.cov"),
                  "--graph-out", path("d.g")});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "VALID k=3\n");
  EXPECT_EQ(run({"verify", "--kind", "elbow", "--graph", path("d.g"), "--cover", path("d.cov")}).out, "VALID k=3\n");
  Result col = run({"construct", "--op", "coloring-from-elbow", "--graph", path("d.g"), "--cover", path("d.cov")});
  EXPECT_EQ(col.code, 0);
  EXPECT_EQ(std::count(col.out.begin(), col.out.end(), '\n'), 16);
}
