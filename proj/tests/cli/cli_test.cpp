#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "symmatch/io.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Run {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

std::string data(const std::string& name) { return std::string(SYMMATCH_TEST_DATA) + "/" + name; }

Run run(const std::string& args) {
  const std::string cmd = std::string(SYMMATCH_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, MatchExitCodes) {
  const auto k33 = run("match --no-timing " + data("k33.json"));
  EXPECT_EQ(k33.code, 0);
  EXPECT_TRUE(k33.json()["result"]["perfect"].get<bool>());

  const auto k36 = run("match --require-perfect --no-timing " + data("k36.json"));
  EXPECT_EQ(k36.code, 1);
  const auto witness = k36.json()["result"]["hall"]["right"];
  EXPECT_EQ(witness["subset"].size(), 6u);
  EXPECT_EQ(witness["neighborhood_size"], 3);
  EXPECT_EQ(run("match " + data("k36.json")).code, 0);

  EXPECT_EQ(run("match " + data("malformed.json")).code, 2);
  EXPECT_EQ(run("match " + data("out_of_range.json")).code, 2);
  EXPECT_EQ(run("match " + data("does_not_exist.json")).code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, MalformedInputReportsLine) {
  const std::string cmd =
      std::string(SYMMATCH_CLI) + " match " + data("malformed.json") + " 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::array<char, 1024> buf{};
  std::string err;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) err.append(buf.data(), n);
  pclose(pipe);
  EXPECT_NE(err.find("line"), std::string::npos) << err;
}

TEST(Cli, WeightedMatchReportsBottleneck) {
  const auto r = run("match --no-timing " + data("weighted.json")).json();
  EXPECT_EQ(r["result"]["bottleneck"]["threshold"], 2.0);
}

TEST(Cli, ReportShape) {
  const auto r = run("match " + data("k33.json")).json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "input_digest", "result", "timing_ms"}));
  EXPECT_EQ(r["command"], "match");
  EXPECT_EQ(r["input_digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
  EXPECT_FALSE(run("match --no-timing " + data("k33.json")).json().contains("timing_ms"));
}

TEST(Cli, Factor) {
  const auto counter = run("factor --no-timing " + data("counterexample.json"));
  EXPECT_EQ(counter.code, 0);
  const auto f = counter.json()["result"];
  EXPECT_EQ(f["factor"]["edges"].size(), 18u);
  EXPECT_TRUE(f["proper"].get<bool>());

  const auto z = run("factor --no-timing " + data("z_multiplicity.json")).json()["result"];
  EXPECT_EQ(z["factor"]["multiplicity"].dump(), R"([[0,0,["0","1"]]])");
  EXPECT_FALSE(z["proper"].get<bool>());

  const auto t = run("factor --no-timing " + data("trivial_group.json")).json()["result"];
  EXPECT_EQ(t["factor"]["edges"].dump(), "[[0,0],[0,1],[1,1]]");
  EXPECT_EQ(run("factor " + data("unreduced_word.json")).code, 2);
}

TEST(Cli, Symmatch) {
  const auto z = run("symmatch --window 3 --no-timing " + data("z_multiplicity.json"));
  EXPECT_EQ(z.code, 0);
  EXPECT_EQ(z.json()["result"]["status"], "symmetric_perfect_matching");
  EXPECT_TRUE(z.json()["result"]["window"]["covers_interior"].get<bool>());

  const auto c = run("symmatch --no-timing " + data("counterexample.json"));
  EXPECT_EQ(c.code, 1);
  EXPECT_EQ(c.json()["result"]["witness"]["deficiency"], 3);
  EXPECT_EQ(run("symmatch --no-timing " + data("trivial_group.json")).code, 0);
}

TEST(Cli, Probe) {
  EXPECT_EQ(run("probe --radii 1,2 " + data("z2_amenable.json")).code, 0);
  const auto d = run("probe --radii 1,3 --no-timing " + data("z2_deficient.json"));
  EXPECT_EQ(d.code, 1);
  EXPECT_EQ(d.json()["result"]["radii"].dump(), "[1,3]");
}

TEST(Cli, Folner) {
  const auto r = run("folner --boxes 10 --no-timing").json()["result"];
  EXPECT_EQ(r["report"]["rows"][0]["ratio"], "6/5");
  const auto e = run("folner --family free --param 2 --balls 2 --u e --no-timing").json();
  EXPECT_EQ(e["result"]["report"]["rows"][0]["ratio"], "1");
  const auto f = run("folner --family free --param 2 --balls 1 --u generators --no-timing").json();
  EXPECT_EQ(f["result"]["report"]["rows"][0]["ratio"], "17/5");
  const auto text = run("folner --boxes 2,4 --format text").out;
  EXPECT_NE(text.find("infimum so far: 3/2"), std::string::npos) << text;
  EXPECT_EQ(run("folner").code, 2);
  EXPECT_EQ(run("folner --family free --boxes 3").code, 2);
}

TEST(Cli, Paradox) {
  EXPECT_EQ(run("paradox --radius 6").code, 0);
  EXPECT_EQ(run("paradox --radius 0").code, 0);
  const auto c = run("paradox --radius 4 --mutation corrupted-table --no-timing");
  EXPECT_EQ(c.code, 1);
  EXPECT_EQ(c.json()["result"]["violation"]["kind"], "covered_twice");
  EXPECT_EQ(run("paradox --mutation no-hotel-fix").code, 1);
  EXPECT_EQ(run("paradox --mutation bogus").code, 2);
  const auto t = run("paradox --radius 1 --table 1 --no-timing").json()["result"];
  EXPECT_EQ(t["classification"].size(), 5u);
}

TEST(Cli, Counterexample) {
  const auto v = run("counterexample --verify 2 --no-timing");
  EXPECT_EQ(v.code, 0);
  const auto r = v.json()["result"];
  EXPECT_TRUE(r["proper"].get<bool>());
  EXPECT_EQ(r["factor_max_matching"], 3);
  EXPECT_EQ(r["verification"].size(), 3u);
  for (const auto& row : r["verification"]) EXPECT_TRUE(row["ok"].get<bool>());

  const auto emitted = run("counterexample --emit --no-timing").json()["result"]["sym_graph"];
  std::ifstream in(data("counterexample.json"));
  EXPECT_EQ(emitted.dump(), Json::parse(in).dump());

  EXPECT_EQ(run("counterexample --corrupt-latin --verify 2").code, 1);
  const auto u = run("counterexample --untwisted --no-timing").json()["result"];
  EXPECT_FALSE(u["proper"].get<bool>());
}

TEST(Cli, Twinlattice) {
  const auto id = run("twinlattice --pqc 1 0 1 --no-timing").json()["result"];
  EXPECT_EQ(id["r_squared"], "0");
  const auto half = run("twinlattice --pqc 1 0 1 --t 1/2 0.5 --no-timing").json()["result"];
  EXPECT_EQ(half["r_squared"], "1/2");
  EXPECT_EQ(half["r"], "0.707107");
  EXPECT_EQ(run("twinlattice --pqc 1 0 1 --t 1/2 1/2 --rcap 0.5").code, 1);
  EXPECT_EQ(run("twinlattice --pqc 3 4 6").code, 2);
  EXPECT_EQ(run("twinlattice --pqc 3 4 5 --rcap 7").code, 2);
  EXPECT_EQ(run("twinlattice").code, 2);
  const auto w =
      run("twinlattice --angle 45 --degrees --window 6 --no-timing").json()["result"];
  EXPECT_LE(std::stod(w["lower_bound"].get<std::string>()), 0.8558);
  EXPECT_TRUE(w["upper_is_heuristic"].get<bool>());
}

TEST(Cli, TwinlatticeFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "symmatch_cli_test";
  std::filesystem::create_directories(dir);
  const auto points = (dir / "points.txt").string();
  const auto quotient = (dir / "quotient.json").string();
  ASSERT_EQ(run("twinlattice --pqc 3 4 5 --emit-points " + points + " --periods 0 " +
                "--export-quotient " + quotient)
                .code,
            0);
  std::ifstream p(points);
  std::string line;
  int lines = 0;
  while (std::getline(p, line)) {
    EXPECT_NE(line.find(" -> "), std::string::npos);
    ++lines;
  }
  EXPECT_EQ(lines, 25);
  std::ifstream q(quotient);
  const auto sg = symmatch::io::symgraph_from_json(Json::parse(q));
  EXPECT_EQ(sg.a_orbits(), 25);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Selftest) {
  const auto r = run("selftest --seed 7 --cases 50 --no-timing");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.json()["result"]["ok"].get<bool>());
}

TEST(Cli, OutputReparsesToSameText) {
  for (const std::string& args : std::vector<std::string>
       {"factor " + data("counterexample.json"), "counterexample --emit --verify 1",
        "folner --boxes 3 --balls 1", "twinlattice --pqc 3 4 5", "probe " + data("z2_amenable.json")}) {
    const auto r = run(args + " --no-timing");
    std::string trimmed = r.out;
    while (!trimmed.empty() && trimmed.back() == '\n') trimmed.pop_back();
    EXPECT_EQ(Json::parse(trimmed).dump(), trimmed) << args;
  }
}

TEST(Cli, Deterministic) {
  for (const std::string& args : std::vector<std::string>
       {"match " + data("k36.json"), "symmatch --window 2 " + data("z2_amenable.json"),
        "paradox --radius 3 --table 2", "selftest --cases 30"}) {
    EXPECT_EQ(run(args + " --no-timing").out, run(args + " --no-timing").out) << args;
  }
}

}  // namespace
