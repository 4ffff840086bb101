// Periodic edge-to-edge tilings by regular polygons, the catalog of the twenty
// two-uniform tilings, and the square/triangle patch family K_m.
#pragma once

#include "tilingq/exact.hpp"
#include "tilingq/lattice.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tq {

// Cyclic sequence of face sizes at a vertex, stored in canonical expanded form
// (lexicographic minimum over rotations and reversal).
class VertexType {
 public:
  VertexType() = default;
  static VertexType from_cycle(std::vector<int> cycle);
  // Accepts "[3^2,4,3,4]" or "3.3.4.3.4".
  static VertexType parse(const std::string& text);

  const std::vector<int>& cycle() const { return cycle_; }
  std::vector<std::pair<int, int>> runs() const;
  int degree() const { return static_cast<int>(cycle_.size()); }
  std::string str() const;  // "[3^2,4,3,4]"

  friend auto operator<=>(const VertexType&, const VertexType&) = default;

 private:
  std::vector<int> cycle_;
};

// Edge from site i to site j translated by shift (in basis coordinates).
struct Edge {
  int i = 0;
  int j = 0;
  Int2 shift{0, 0};
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct PeriodicTiling {
  int id = 0;  // 1..20 for catalog entries
  std::string name;
  Vec2 u, v;
  std::vector<Vec2> sites;
  std::vector<Edge> edges;  // canonical orientation, sorted
  std::pair<VertexType, VertexType> declared;

  Vec2 position(int site, Int2 shift) const;
};

// Orientation-canonical form of an edge: i < j, or i == j with shift > 0 lexicographically.
Edge canonical_edge(Edge e);

// Basis coordinates of a point. Throws if the basis is degenerate.
std::pair<QuadExt, QuadExt> basis_coords(const PeriodicTiling& t, const Vec2& p);

// Which site a plane point is a translate of, and by which lattice vector.
struct Located {
  int site;
  Int2 shift;
};
std::optional<Located> locate(const PeriodicTiling& t, const Vec2& p);

// Reduces sites into the half-open cell and derives edges as unit-distance pairs.
PeriodicTiling make_tiling(int id, std::string name, Vec2 u, Vec2 v, std::vector<Vec2> points,
                           std::pair<VertexType, VertexType> declared);

constexpr int kCatalogSize = 20;
const PeriodicTiling& catalog(int id);

// Orbit bounds B_i of the classification theorem, i = 1..20.
int orbit_bound(int id);
// Tilings whose quotients must have exactly two vertex orbits.
bool requires_exactly_two(int id);

struct ValidationReport {
  bool unit_edges = true;
  bool regular_faces = true;
  bool types_realized = true;
  bool inversion_symmetric = true;
  bool translation_maximal = true;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
ValidationReport validate_tiling(const PeriodicTiling& t);

struct Germ {
  int target = 0;
  Int2 shift{0, 0};
  Vec2 dir;  // unit direction from the site
  int slot = 0;  // direction as a multiple of 30 degrees
};
// Per site, germs in CCW order starting from angle 0.
using RotationSystem = std::vector<std::vector<Germ>>;
RotationSystem rotation_system(const PeriodicTiling& t);

// Index of the germ at t.target pointing back along g. Throws if missing.
int reverse_germ(const RotationSystem& rs, int site, const Germ& g);

// Size of the face to the left of germ k at site s (walk with CCW traversal).
// Throws std::runtime_error if the walk does not close within 12 steps.
int left_face_size(const RotationSystem& rs, int site, int germ);

VertexType classify_vertex_type(const PeriodicTiling& t, const RotationSystem& rs, int site);

struct OrbitCount {
  int count = 0;
  std::vector<int> representatives;
  std::vector<int> orbit_of;  // per site
};
int h_orbit_count(const PeriodicTiling& t);
OrbitCount g_orbit_count(const PeriodicTiling& t);
// Image of each site under x -> -x.
std::vector<Located> inversion_image(const PeriodicTiling& t);

void write_tiling(std::ostream& os, const PeriodicTiling& t);
PeriodicTiling read_tiling(std::istream& is);

// Patch of the square/triangle family: grid on Z^2 with alternating diagonals.
struct KmPatch {
  int m = 0;
  int radius = 0;
  // faces as lists of grid points in CCW order
  std::vector<std::vector<Int2>> faces;
  std::map<Int2, VertexType> interior_types;
  std::map<VertexType, int> census;
  int column_run = 0;
};
// True iff column i carries the up-right diagonal on even rows.
bool km_in_s(int m, std::int64_t i);
KmPatch build_Km(int m, int radius);

}  // namespace tq
