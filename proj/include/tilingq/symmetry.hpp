// Map automorphisms, vertex orbits, and the inversion-extended translation action.
#pragma once

#include "tilingq/catalog.hpp"
#include "tilingq/torus_map.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tq {

struct MapAutomorphism {
  std::vector<int> dart_perm;
  bool reversing = false;  // conjugates sigma to its inverse
  friend auto operator<=>(const MapAutomorphism&, const MapAutomorphism&) = default;
};

// Attempts to extend 0 -> image to a whole automorphism of the given chirality.
std::optional<MapAutomorphism> extend_from_base(const FiniteMap& x, int image, bool reversing);

// Full group, orientation-reversing elements included, sorted by (reversing, image of dart 0).
std::vector<MapAutomorphism> automorphism_group(const FiniteMap& x);

bool is_automorphism(const FiniteMap& x, const MapAutomorphism& g);
MapAutomorphism compose(const MapAutomorphism& g, const MapAutomorphism& h);  // g after h
MapAutomorphism inverse(const MapAutomorphism& g);

struct VertexOrbits {
  int count = 0;
  std::vector<int> orbit_of;  // per vertex, numbered by first appearance
};
VertexOrbits vertex_orbit_count(const FiniteMap& x, const std::vector<MapAutomorphism>& group);

// Vertex orbits of K/Gamma under translations mod Gamma together with x -> -x.
VertexOrbits quotient_group_orbits(const PeriodicTiling& t, const SublatticeMatrix& m);

// Randomised exact check of g∘k∘g^-1 = k^eps for translations k of the tiling's
// lattice and g = (eps, t) with t drawn from half-lattice vectors.
bool verify_claim1(const PeriodicTiling& t, int samples, std::uint64_t seed);

}  // namespace tq
