#include "tilingq/verifier.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tq;

namespace {
namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(TILINGQ_CLI) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("tilingq_test_" + name);
  fs::remove_all(p);
  return p;
}
}  // namespace

TEST(Selection, Parsing) {
  EXPECT_EQ(parse_selection("1..3"), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(parse_selection("4,1,7..8,4"), (std::vector<int>{1, 4, 7, 8}));
  EXPECT_THROW(parse_selection(""), std::invalid_argument);
  EXPECT_THROW(parse_selection("0..3"), std::invalid_argument);
  EXPECT_THROW(parse_selection("x"), std::invalid_argument);
}

TEST(Verdict, Rules) {
  OrbitReport r;
  r.tiling = 3;
  r.bound = 2;
  r.polyhedral = false;
  EXPECT_EQ(theorem_verdict(r), "excluded");
  r.polyhedral = true;
  r.m = 2;
  EXPECT_EQ(theorem_verdict(r), "pass");
  r.m = 3;
  EXPECT_EQ(theorem_verdict(r), "fail");
  r.tiling = 1;
  r.bound = 6;
  r.m = 5;
  EXPECT_EQ(theorem_verdict(r), "pass");
  r.m = 7;
  EXPECT_EQ(theorem_verdict(r), "fail");
}

TEST(Sweep, SmallSweepOfFourthEntry) {
  RunConfig cfg;
  cfg.tilings = {4};
  cfg.max_index = 6;
  auto res = run_sweep(cfg);
  EXPECT_TRUE(res.breaches.empty());
  int total = 0;
  for (const auto& r : res.reports) {
    total += 1;
    if (r.polyhedral) EXPECT_EQ(r.m, 2) << r.sublattice.str();
  }
  EXPECT_EQ(total, 1 + 3 + 4 + 7 + 6 + 12);
  EXPECT_EQ(res.exit_code, kPass);
}

TEST(Sweep, ReportsAreSortedAndCsvHasFixedColumns) {
  RunConfig cfg;
  cfg.tilings = {12, 3};
  cfg.max_index = 3;
  auto res = run_sweep(cfg);
  ASSERT_FALSE(res.reports.empty());
  EXPECT_EQ(res.reports.front().tiling, 3);
  std::ostringstream csv;
  write_csv(csv, res.reports);
  std::istringstream in(csv.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "tiling,index,a,b,d,V,E,F,polyhedral,aut_order,m,bound,verdict");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, res.reports.size());
}

TEST(Cli, CatalogListsTwentyRows) {
  std::string out = (scratch("catalog_out") += ".txt").string();
  int rc = std::system((std::string(TILINGQ_CLI) + " catalog > " + out).c_str());
  ASSERT_TRUE(WIFEXITED(rc));
  std::ifstream f(out);
  int rows = 0;
  bool k9_bound = false, k20_types = false;
  for (std::string line; std::getline(f, line);) {
    if (line.rfind("K", 0) == 0) ++rows;
    if (line.rfind("K9 ", 0) == 0) {
      std::istringstream ls(line);
      std::string id, types, sites, edges, h, g, bound;
      ls >> id >> types >> sites >> edges >> h >> g >> bound;
      k9_bound = bound == "6";
    }
    if (line.rfind("K20 ", 0) == 0) k20_types = line.find("[3,4,6,4];[4,6,12]") != std::string::npos;
  }
  EXPECT_EQ(rows, 20);
  EXPECT_TRUE(k9_bound);
  EXPECT_TRUE(k20_types);
  fs::remove(out);
}

TEST(Cli, ExitCodes) {
  fs::path dir = scratch("exit");
  EXPECT_EQ(run_cli("verify --tilings 4 --max-index 4 --out " + dir.string()), 0);
  EXPECT_TRUE(fs::exists(dir / "report.json"));
  EXPECT_TRUE(fs::exists(dir / "report.csv"));
  // A regular file where the output directory should be.
  fs::path blocker = scratch("blocker");
  std::ofstream(blocker) << "x";
  EXPECT_EQ(run_cli("verify --tilings 4 --max-index 2 --out " + (blocker / "sub").string()), 2);
  EXPECT_EQ(run_cli("km --m 2 --radius 2"), 2);
  EXPECT_EQ(run_cli("km --m 2 --radius 8"), 0);
  EXPECT_EQ(run_cli("verify --tilings 0 --out " + dir.string()), 2);
  fs::remove_all(dir);
  fs::remove(blocker);
}

TEST(Cli, VerifyIsByteStable) {
  fs::path a = scratch("det_a"), b = scratch("det_b");
  run_cli("verify --tilings 1..4 --max-index 4 --seed 5 --json --csv --out " + a.string());
  run_cli("verify --tilings 1..4 --max-index 4 --seed 5 --json --csv --out " + b.string());
  EXPECT_EQ(slurp(a / "report.json"), slurp(b / "report.json"));
  EXPECT_EQ(slurp(a / "report.csv"), slurp(b / "report.csv"));
  EXPECT_FALSE(slurp(a / "report.json").empty());
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Cli, ExportIsByteStable) {
  fs::path a = scratch("exp_a"), b = scratch("exp_b");
  ASSERT_EQ(run_cli("export --tiling 12 --lattice 2,1,3 --out " + a.string()), 0);
  ASSERT_EQ(run_cli("export --tiling 12 --lattice 2,1,3 --out " + b.string()), 0);
  for (const char* ext : {".dot", ".off", ".json"}) {
    std::string name = std::string("K12_2_1_3") + ext;
    EXPECT_TRUE(fs::exists(a / name)) << name;
    EXPECT_EQ(slurp(a / name), slurp(b / name)) << name;
  }
  EXPECT_EQ(run_cli("export --tiling 12 --lattice 2,5,3 --out " + a.string()), 2);
  fs::remove_all(a);
  fs::remove_all(b);
}
