// Independent reference computations used to cross-check the library.
#pragma once

#include "tilingq/catalog.hpp"
#include "tilingq/symmetry.hpp"
#include "tilingq/torus_map.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

std::int64_t sigma1(std::int64_t n);

// Index-n sublattices of Z^2 as subgroups of (Z/n)^2, found by closing every
// pair of generators. Each subgroup is a sorted list of residues x*n+y.
std::set<std::vector<int>> sublattices_bruteforce(int n);
std::vector<int> residues_of(const tq::SublatticeMatrix& m, int n);

// Exhaustive backtracking over dart bijections, both chiralities.
std::vector<tq::MapAutomorphism> automorphisms_bruteforce(const tq::FiniteMap& x);

// All-pairs face intersection test.
bool polyhedral_bruteforce(const tq::FiniteMap& x);

// Orbits of sites under x -> -x, located with floating-point arithmetic.
int g_orbits_float(const tq::PeriodicTiling& t);

// Face sizes per fundamental cell: size -> count.
std::map<int, int> cell_face_sizes(const tq::PeriodicTiling& t);

// Vertex types of the K_m patch read off the four unit squares around each
// interior vertex.
std::map<tq::VertexType, int> km_census_direct(int m, int radius);
int km_column_run_direct(int m, int radius);

tq::PeriodicTiling square_tiling();

}  // namespace oracle
