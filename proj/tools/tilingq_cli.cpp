// Command-line front end: catalog listing, quotient sweeps, exports, K_m census.
#include "tilingq/catalog.hpp"
#include "tilingq/symmetry.hpp"
#include "tilingq/torus_map.hpp"
#include "tilingq/verifier.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace tq;

int cmd_catalog() {
  std::cout << std::left << std::setw(5) << "id" << std::setw(28) << "types" << std::setw(7) << "sites"
            << std::setw(7) << "edges" << std::setw(4) << "h" << std::setw(4) << "g" << std::setw(6) << "bound"
            << "valid\n";
  bool all_ok = true;
  for (int id = 1; id <= kCatalogSize; ++id) {
    const auto& t = catalog(id);
    auto rep = validate_tiling(t);
    all_ok = all_ok && rep.ok();
    std::string types = t.declared.first.str() + ";" + t.declared.second.str();
    std::cout << std::left << std::setw(5) << ("K" + std::to_string(id)) << std::setw(28) << types << std::setw(7)
              << t.sites.size() << std::setw(7) << t.edges.size() << std::setw(4) << h_orbit_count(t)
              << std::setw(4) << g_orbit_count(t).count << std::setw(6) << orbit_bound(id)
              << (rep.ok() ? "yes" : "NO") << '\n';
  }
  return all_ok ? kPass : kInternal;
}

int cmd_verify(const RunConfig& cfg) {
  SweepResult res = run_sweep(cfg);
  std::string err;
  if (!write_outputs(cfg, res, err)) {
    std::cerr << "error: " << err << '\n';
    return kIoError;
  }
  int polyhedral = 0, failed = 0;
  for (const auto& r : res.reports) {
    if (!r.polyhedral) continue;
    ++polyhedral;
    if (r.verdict == "fail") {
      ++failed;
      std::cout << "violation: K" << r.tiling << " [" << r.sublattice.str() << "] m=" << r.m
                << " bound=" << r.bound << '\n';
    }
  }
  for (const auto& b : res.breaches) std::cerr << "invariant breach: " << b << '\n';
  std::cout << res.reports.size() << " quotients, " << polyhedral << " polyhedral, " << failed
            << " violations\n";
  return res.exit_code;
}

SublatticeMatrix parse_lattice(const std::string& text) {
  SublatticeMatrix m;
  char c1 = 0, c2 = 0;
  std::istringstream is(text);
  if (!(is >> m.a >> c1 >> m.b >> c2 >> m.d) || c1 != ',' || c2 != ',' || !m.valid())
    throw std::invalid_argument("lattice must be a,b,d in Hermite normal form");
  return m;
}

int cmd_export(int id, const std::string& lattice, const std::string& out_dir, bool dot, bool off, bool json) {
  const auto& t = catalog(id);
  SublatticeMatrix m = parse_lattice(lattice);
  FiniteMap x = quotient(t, m);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << out_dir << '\n';
    return kIoError;
  }
  std::string stem = out_dir + "/K" + std::to_string(id) + "_" + std::to_string(m.a) + "_" +
                     std::to_string(m.b) + "_" + std::to_string(m.d);
  auto emit = [&](const std::string& path, auto&& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    body(f);
    return static_cast<bool>(f);
  };
  bool ok = true;
  if (dot) ok = ok && emit(stem + ".dot", [&](std::ostream& o) { export_dot(o, x); });
  if (off) ok = ok && emit(stem + ".off", [&](std::ostream& o) { export_off(o, x, t); });
  if (json) ok = ok && emit(stem + ".json", [&](std::ostream& o) { write_json(o, {analyze_quotient(t, m)}); });
  if (!ok) {
    std::cerr << "error: cannot write exports under " << out_dir << '\n';
    return kIoError;
  }
  std::cout << "K" << id << " [" << m.str() << "]: V=" << x.V() << " E=" << x.E() << " F=" << x.F() << '\n';
  return kPass;
}

int cmd_km(int m, int radius) {
  KmPatch p = build_Km(m, radius);
  std::cout << "K_" << m << " radius " << radius << '\n';
  for (const auto& [vt, n] : p.census) std::cout << "  " << vt.str() << ' ' << n << '\n';
  std::cout << "interior types: " << p.census.size() << '\n';
  std::cout << "column run: " << p.column_run << '\n';
  return p.census.size() == 2 ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-uniform tilings, torus quotients and vertex-orbit bounds"};
  app.require_subcommand(1);

  app.add_subcommand("catalog", "List the twenty catalog entries");

  auto* verify = app.add_subcommand("verify", "Sweep sublattices and check orbit bounds");
  std::string selection = "1..20";
  RunConfig cfg;
  cfg.out_dir = "out";
  bool json = false, csv = false, dot = false, off = false;
  verify->add_option("--tilings", selection, "Selection such as 1..20 or 3,4,12");
  verify->add_option("--max-index", cfg.max_index, "Largest sublattice index")->check(CLI::PositiveNumber);
  verify->add_option("--out", cfg.out_dir, "Output directory");
  verify->add_flag("--json", json, "Write report.json");
  verify->add_flag("--csv", csv, "Write report.csv");
  verify->add_flag("--dot", dot, "Write DOT graphs of polyhedral quotients");
  verify->add_flag("--off", off, "Write OFF meshes of polyhedral quotients");
  verify->add_option("--seed", cfg.seed, "Seed for randomised checks");

  auto* exp = app.add_subcommand("export", "Export one quotient");
  int tiling = 1;
  std::string lattice = "1,0,1";
  std::string exp_dir = ".";
  bool edot = false, eoff = false, ejson = false;
  exp->add_option("--tiling", tiling, "Catalog id")->required()->check(CLI::Range(1, kCatalogSize));
  exp->add_option("--lattice", lattice, "HNF entries a,b,d")->required();
  exp->add_option("--out", exp_dir, "Output directory");
  exp->add_flag("--dot", edot, "DOT graph");
  exp->add_flag("--off", eoff, "OFF mesh");
  exp->add_flag("--json", ejson, "JSON report");

  auto* km = app.add_subcommand("km", "Vertex-type census of a K_m patch");
  int km_m = 2, km_r = 8;
  km->add_option("--m", km_m, "Block width m >= 2")->required();
  km->add_option("--radius", km_r, "Patch radius >= 3m")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kIoError;
  }

  try {
    if (app.got_subcommand("catalog")) return cmd_catalog();
    if (app.got_subcommand("verify")) {
      cfg.tilings = parse_selection(selection);
      // With no format flag given, write both reports.
      cfg.json = json || !csv;
      cfg.csv = csv || !json;
      cfg.dot = dot;
      cfg.off = off;
      return cmd_verify(cfg);
    }
    if (app.got_subcommand("export")) {
      if (!edot && !eoff && !ejson) edot = eoff = ejson = true;
      return cmd_export(tiling, lattice, exp_dir, edot, eoff, ejson);
    }
    if (app.got_subcommand("km")) return cmd_km(km_m, km_r);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kPass;
}
