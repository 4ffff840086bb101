#include "tilingq/verifier.hpp"

#include "tilingq/symmetry.hpp"
#include "tilingq/torus_map.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tq {

const char* const kCsvHeader = "tiling,index,a,b,d,V,E,F,polyhedral,aut_order,m,bound,verdict";

std::string theorem_verdict(const OrbitReport& r) {
  if (!r.polyhedral) return "excluded";
  if (r.m > r.bound) return "fail";
  if (requires_exactly_two(r.tiling) && r.m != 2) return "fail";
  return "pass";
}

OrbitReport analyze_quotient(const PeriodicTiling& t, const SublatticeMatrix& m) {
  FiniteMap x = quotient(t, m);
  OrbitReport r;
  r.tiling = t.id;
  r.sublattice = m;
  r.V = x.V();
  r.E = x.E();
  r.F = x.F();
  auto pc = is_polyhedral(x);
  r.polyhedral = pc.ok;
  r.witness = pc.witness;
  auto group = automorphism_group(x);
  r.aut_order = static_cast<int>(group.size());
  r.m = vertex_orbit_count(x, group).count;
  r.quotient_orbits = quotient_group_orbits(t, m).count;
  r.bound = orbit_bound(t.id);
  r.verdict = theorem_verdict(r);
  return r;
}

SweepResult run_sweep(const RunConfig& cfg) {
  if (cfg.tilings.empty()) throw std::invalid_argument("empty tiling selection");
  if (cfg.max_index < 1) throw std::invalid_argument("max index must be at least 1");
  SweepResult res;
  for (int id : cfg.tilings) {
    const PeriodicTiling& t = catalog(id);
    auto val = validate_tiling(t);
    for (const auto& f : val.failures) res.breaches.push_back("K" + std::to_string(id) + ": " + f);
    if (!verify_claim1(t, 1000, cfg.seed + static_cast<std::uint64_t>(id)))
      res.breaches.push_back("K" + std::to_string(id) + ": conjugation identity failed");
    for (int n = 1; n <= cfg.max_index; ++n) {
      for (const auto& m : enumerate_sublattices(n)) {
        OrbitReport r = analyze_quotient(t, m);
        std::string tag = "K" + std::to_string(id) + " [" + m.str() + "]: ";
        if (r.V - r.E + r.F != 0) res.breaches.push_back(tag + "Euler characteristic is not 0");
        if (r.V != n * h_orbit_count(t)) res.breaches.push_back(tag + "vertex count is not index * sites");
        if (r.polyhedral && r.m > r.quotient_orbits)
          res.breaches.push_back(tag + "Aut orbits exceed inversion-translation orbits");
        res.reports.push_back(std::move(r));
      }
    }
  }
  std::sort(res.reports.begin(), res.reports.end(), [](const OrbitReport& l, const OrbitReport& r) {
    auto key = [](const OrbitReport& o) {
      return std::tuple(o.tiling, o.sublattice.index(), o.sublattice.a, o.sublattice.b, o.sublattice.d);
    };
    return key(l) < key(r);
  });
  bool violation = std::any_of(res.reports.begin(), res.reports.end(),
                               [](const OrbitReport& r) { return r.verdict == "fail"; });
  res.exit_code = !res.breaches.empty() ? kInternal : violation ? kViolation : kPass;
  return res;
}

void write_json(std::ostream& os, const std::vector<OrbitReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["tiling"] = r.tiling;
    j["sublattice"] = {{"a", r.sublattice.a}, {"b", r.sublattice.b}, {"d", r.sublattice.d}};
    j["index"] = r.sublattice.index();
    j["V"] = r.V;
    j["E"] = r.E;
    j["F"] = r.F;
    j["polyhedral"] = r.polyhedral;
    if (!r.polyhedral) j["witness"] = r.witness;
    j["aut_order"] = r.aut_order;
    j["m"] = r.m;
    j["quotient_orbits"] = r.quotient_orbits;
    j["bound"] = r.bound;
    j["verdict"] = r.verdict;
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
}

void write_csv(std::ostream& os, const std::vector<OrbitReport>& reports) {
  os << kCsvHeader << '\n';
  for (const auto& r : reports) {
    os << r.tiling << ',' << r.sublattice.index() << ',' << r.sublattice.a << ',' << r.sublattice.b << ','
       << r.sublattice.d << ',' << r.V << ',' << r.E << ',' << r.F << ',' << (r.polyhedral ? "true" : "false")
       << ',' << r.aut_order << ',' << r.m << ',' << r.bound << ',' << r.verdict << '\n';
  }
}

std::vector<int> parse_selection(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto dots = tok.find("..");
    int lo = 0, hi = 0;
    try {
      lo = std::stoi(tok.substr(0, dots));
      hi = dots == std::string::npos ? lo : std::stoi(tok.substr(dots + 2));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad tiling selection: " + text);
    }
    if (lo < 1 || hi > kCatalogSize || lo > hi) throw std::invalid_argument("tiling selection out of range: " + tok);
    for (int k = lo; k <= hi; ++k) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw std::invalid_argument("empty tiling selection");
  return out;
}

bool write_outputs(const RunConfig& cfg, const SweepResult& res, std::string& err) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path dir(cfg.out_dir);
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    err = "cannot create output directory " + cfg.out_dir;
    return false;
  }
  auto emit = [&](const fs::path& p, auto&& body) {
    std::ofstream f(p, std::ios::binary);
    if (!f) {
      err = "cannot write " + p.string();
      return false;
    }
    body(f);
    f.flush();
    if (!f) {
      err = "write failed for " + p.string();
      return false;
    }
    return true;
  };
  if (cfg.json && !emit(dir / "report.json", [&](std::ostream& o) { write_json(o, res.reports); })) return false;
  if (cfg.csv && !emit(dir / "report.csv", [&](std::ostream& o) { write_csv(o, res.reports); })) return false;
  if (cfg.dot || cfg.off) {
    for (const auto& r : res.reports) {
      if (!r.polyhedral) continue;
      const auto& t = catalog(r.tiling);
      FiniteMap x = quotient(t, r.sublattice);
      std::string stem = "K" + std::to_string(r.tiling) + "_" + std::to_string(r.sublattice.a) + "_" +
                         std::to_string(r.sublattice.b) + "_" + std::to_string(r.sublattice.d);
      if (cfg.dot && !emit(dir / (stem + ".dot"), [&](std::ostream& o) { export_dot(o, x); })) return false;
      if (cfg.off && !emit(dir / (stem + ".off"), [&](std::ostream& o) { export_off(o, x, t); })) return false;
    }
  }
  return true;
}

}  // namespace tq
