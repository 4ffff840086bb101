#include "tilingq/symmetry.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace tq;

namespace {
void expect_group(const FiniteMap& x, const std::vector<MapAutomorphism>& g) {
  std::set<MapAutomorphism> set(g.begin(), g.end());
  ASSERT_EQ(set.size(), g.size());
  MapAutomorphism id;
  id.dart_perm.resize(static_cast<std::size_t>(x.num_darts()));
  for (int d = 0; d < x.num_darts(); ++d) id.dart_perm[static_cast<std::size_t>(d)] = d;
  EXPECT_TRUE(set.count(id));
  for (const auto& a : g) {
    EXPECT_TRUE(is_automorphism(x, a));
    EXPECT_TRUE(set.count(inverse(a)));
    for (const auto& b : g) ASSERT_TRUE(set.count(compose(a, b)));
  }
}
}  // namespace

TEST(Automorphisms, GroupAxiomsOnSmallQuotients) {
  for (int id : {3, 4, 12, 13, 15}) {
    FiniteMap x = quotient(catalog(id), {3, 1, 3});
    auto g = automorphism_group(x);
    expect_group(x, g);
    EXPECT_LE(g.size(), static_cast<std::size_t>(2 * x.num_darts()));
  }
}

TEST(Automorphisms, MatchBruteForceOnTinyMaps) {
  int compared = 0;
  auto check = [&](const FiniteMap& x) {
    if (x.num_darts() > 24) return;
    auto fast = automorphism_group(x);
    std::sort(fast.begin(), fast.end());
    EXPECT_EQ(fast, oracle::automorphisms_bruteforce(x));
    ++compared;
  };
  auto sq = oracle::square_tiling();
  for (int n = 1; n <= 6; ++n)
    for (const auto& m : enumerate_sublattices(n)) check(quotient(sq, m));
  for (int id = 1; id <= kCatalogSize; ++id)
    for (int n = 1; n <= 2; ++n)
      for (const auto& m : enumerate_sublattices(n)) check(quotient(catalog(id), m));
  EXPECT_GT(compared, 20);
}

TEST(Automorphisms, PreserveStructure) {
  const auto& t = catalog(12);
  FiniteMap x = quotient(t, {1, 2, 3});
  ASSERT_TRUE(is_polyhedral(x).ok);
  auto g = automorphism_group(x);
  auto fo = x.face_of();
  auto fs = x.faces();
  std::vector<VertexType> types;
  for (int v = 0; v < x.V(); ++v) types.push_back(vertex_link_type(x, v));
  std::size_t preserving = 0;
  for (const auto& a : g) {
    if (!a.reversing) ++preserving;
    for (int d = 0; d < x.num_darts(); ++d) {
      int e = a.dart_perm[static_cast<std::size_t>(d)];
      EXPECT_EQ(fs[static_cast<std::size_t>(fo[static_cast<std::size_t>(d)])].size(),
                fs[static_cast<std::size_t>(fo[static_cast<std::size_t>(e)])].size());
      EXPECT_EQ(types[static_cast<std::size_t>(x.vertex_of[static_cast<std::size_t>(d)])],
                types[static_cast<std::size_t>(x.vertex_of[static_cast<std::size_t>(e)])]);
    }
  }
  EXPECT_TRUE(preserving == g.size() || 2 * preserving == g.size());
}

TEST(VertexOrbits, ExactlyTwoWhereRequired) {
  for (int id : {3, 15}) {
    FiniteMap x = quotient(catalog(id), {3, 0, 3});
    ASSERT_TRUE(is_polyhedral(x).ok);
    EXPECT_EQ(vertex_orbit_count(x, automorphism_group(x)).count, 2) << "K" << id;
  }
}

TEST(VertexOrbits, TwoTypesNeverShareAnOrbit) {
  for (int id = 1; id <= kCatalogSize; ++id) {
    FiniteMap x = quotient(catalog(id), {3, 0, 3});
    auto vo = vertex_orbit_count(x, automorphism_group(x));
    EXPECT_GE(vo.count, 2) << "K" << id;
  }
}

TEST(QuotientGroupOrbits, IdentityIndexMatchesCellCount) {
  for (int id = 1; id <= kCatalogSize; ++id)
    EXPECT_EQ(quotient_group_orbits(catalog(id), {1, 0, 1}).count, g_orbit_count(catalog(id)).count);
}

TEST(QuotientGroupOrbits, BoundsFromTheProofRoute) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_sublattices(n)) {
      EXPECT_LE(quotient_group_orbits(catalog(1), m).count, 6);
      EXPECT_LE(quotient_group_orbits(catalog(6), m).count, 7);
    }
}

TEST(QuotientGroupOrbits, DominatesAutOrbits) {
  for (int id : {1, 5, 8, 18}) {
    for (int n = 3; n <= 4; ++n)
      for (const auto& m : enumerate_sublattices(n)) {
        FiniteMap x = quotient(catalog(id), m);
        if (!is_polyhedral(x).ok) continue;
        EXPECT_LE(vertex_orbit_count(x, automorphism_group(x)).count, quotient_group_orbits(catalog(id), m).count);
      }
  }
}

TEST(Claim1, ConjugationIdentity) {
  for (int id = 1; id <= kCatalogSize; ++id) EXPECT_TRUE(verify_claim1(catalog(id), 200, 99)) << id;
}
