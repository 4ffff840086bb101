// Sweeps torus quotients and checks the vertex-orbit bounds.
#pragma once

#include "tilingq/catalog.hpp"
#include "tilingq/lattice.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tq {

struct OrbitReport {
  int tiling = 0;
  SublatticeMatrix sublattice;
  int V = 0, E = 0, F = 0;
  bool polyhedral = false;
  std::string witness;  // first polyhedrality violation, empty if polyhedral
  int aut_order = 0;
  int m = 0;
  int quotient_orbits = 0;
  int bound = 0;
  std::string verdict;  // "pass", "fail" or "excluded"
};

OrbitReport analyze_quotient(const PeriodicTiling& t, const SublatticeMatrix& m);

// pass iff polyhedral implies m <= bound, with m == 2 where required.
std::string theorem_verdict(const OrbitReport& r);

struct RunConfig {
  std::vector<int> tilings;
  int max_index = 6;
  std::string out_dir;
  bool json = true;
  bool csv = true;
  bool dot = false;
  bool off = false;
  std::uint64_t seed = 1;
};

enum ExitCode : int { kPass = 0, kViolation = 1, kIoError = 2, kInternal = 3 };

struct SweepResult {
  std::vector<OrbitReport> reports;  // sorted by (tiling, index, a, b, d)
  std::vector<std::string> breaches;  // internal invariant failures
  int exit_code = kPass;
};

// Builds every report and checks internal invariants (Euler characteristic,
// vertex count, sandwich m <= quotient orbits, validity of the catalog).
SweepResult run_sweep(const RunConfig& cfg);

void write_json(std::ostream& os, const std::vector<OrbitReport>& reports);
void write_csv(std::ostream& os, const std::vector<OrbitReport>& reports);
extern const char* const kCsvHeader;

// Parses "1..20", "3", "1,4,7..9".
std::vector<int> parse_selection(const std::string& text);

}  // namespace tq

namespace tq {
// Writes report.json / report.csv and optional per-quotient DOT/OFF files into
// cfg.out_dir. Returns false and fills err on any I/O failure.
bool write_outputs(const RunConfig& cfg, const SweepResult& res, std::string& err);
}  // namespace tq
