// Torus quotients K/Gamma as dart-based combinatorial maps.
#pragma once

#include "tilingq/catalog.hpp"
#include "tilingq/lattice.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tq {

// alpha pairs the two darts of an edge; sigma is the CCW successor around the
// source vertex; faces are the orbits of sigma∘alpha.
struct FiniteMap {
  int tiling_id = 0;
  SublatticeMatrix lattice;
  int num_vertices = 0;
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<int> vertex_of;
  // Covering projection: each vertex lies over (site, coset).
  std::vector<int> vertex_site;
  std::vector<Int2> vertex_coset;

  int num_darts() const { return static_cast<int>(alpha.size()); }
  int V() const { return num_vertices; }
  int E() const { return num_darts() / 2; }
  int F() const;
  int euler_characteristic() const { return V() - E() + F(); }

  // Dart orbits of sigma∘alpha, each listed from its smallest dart.
  std::vector<std::vector<int>> faces() const;
  std::vector<int> face_of() const;
  // Darts leaving v in CCW order.
  std::vector<int> darts_at(int v) const;
  int phi(int d) const { return sigma[static_cast<std::size_t>(alpha[static_cast<std::size_t>(d)])]; }
};

// Dart numbering: site-major, then coset rank, then germ rank.
FiniteMap quotient(const PeriodicTiling& t, const SublatticeMatrix& m);

// Builds a map from raw permutations; vertices are the sigma orbits.
FiniteMap map_from_permutations(std::vector<int> alpha, std::vector<int> sigma);

// Checks that alpha is a fixed-point-free involution and sigma a permutation.
bool is_valid_map(const FiniteMap& x, std::string* why = nullptr);
bool is_connected(const FiniteMap& x);

struct PolyhedralCheck {
  bool ok = true;
  std::string witness;
};
PolyhedralCheck is_polyhedral(const FiniteMap& x);

// Cyclic face sizes around v; requires a polyhedral map.
VertexType vertex_link_type(const FiniteMap& x, int v);

void export_dot(std::ostream& os, const FiniteMap& x);
// Vertices are lifted to one fundamental transversal using exact positions.
void export_off(std::ostream& os, const FiniteMap& x, const PeriodicTiling& t);

}  // namespace tq
