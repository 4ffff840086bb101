#include "tilingq/torus_map.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

using namespace tq;

TEST(Quotient, VertexCountScalesWithIndex) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_sublattices(n)) EXPECT_EQ(quotient(catalog(1), m).V(), 12 * n);
}

TEST(Quotient, IsAValidTorusMap) {
  for (int id = 1; id <= kCatalogSize; ++id) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& m : enumerate_sublattices(n)) {
        FiniteMap x = quotient(catalog(id), m);
        std::string why;
        ASSERT_TRUE(is_valid_map(x, &why)) << "K" << id << " " << m.str() << ": " << why;
        EXPECT_TRUE(is_connected(x));
        EXPECT_EQ(x.euler_characteristic(), 0) << "K" << id << " " << m.str();
        EXPECT_EQ(x.V(), n * static_cast<int>(catalog(id).sites.size()));
      }
    }
  }
}

TEST(Quotient, FaceSizesAreIndexTimesCell) {
  const auto& t = catalog(12);
  auto cell = oracle::cell_face_sizes(t);
  FiniteMap x = quotient(t, {2, 0, 2});
  std::map<int, int> got;
  for (const auto& f : x.faces()) ++got[static_cast<int>(f.size())];
  for (auto& [k, n] : cell) n *= 4;
  EXPECT_EQ(got, cell);
}

TEST(Quotient, DartNumberingIsDeterministic) {
  FiniteMap a = quotient(catalog(7), {1, 1, 3});
  FiniteMap b = quotient(catalog(7), {1, 1, 3});
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.sigma, b.sigma);
  // Darts of vertex 0 come first, in germ order.
  auto d0 = a.darts_at(0);
  for (std::size_t k = 0; k < d0.size(); ++k) EXPECT_EQ(d0[k], static_cast<int>(k));
}

TEST(Polyhedral, IdentityQuotientIsDegenerate) {
  auto pc = is_polyhedral(quotient(catalog(3), {1, 0, 1}));
  EXPECT_FALSE(pc.ok);
  EXPECT_FALSE(pc.witness.empty());
}

TEST(Polyhedral, ThreeByThreeWorksForEveryEntry) {
  for (int id = 1; id <= kCatalogSize; ++id) {
    FiniteMap x = quotient(catalog(id), {3, 0, 3});
    EXPECT_TRUE(is_polyhedral(x).ok) << "K" << id << ": " << is_polyhedral(x).witness;
  }
}

TEST(Polyhedral, FacesMeetingInOppositeCorners) {
  // Square grid modulo <(2,2),(3,-3)>: the unit squares at (0,0) and (1,1)
  // share exactly their opposite corners (0,0) = (2,2) and (1,1).
  SublatticeMatrix m = hnf_from_generators({2, 2}, {3, -3});
  FiniteMap x = quotient(oracle::square_tiling(), m);
  auto pc = is_polyhedral(x);
  EXPECT_FALSE(pc.ok);
  EXPECT_NE(pc.witness.find("share 2 vertices"), std::string::npos) << pc.witness;
  EXPECT_FALSE(oracle::polyhedral_bruteforce(x));
}

TEST(Polyhedral, SquareGridTori) {
  auto sq = oracle::square_tiling();
  EXPECT_FALSE(is_polyhedral(quotient(sq, {2, 0, 2})).ok);
  EXPECT_TRUE(is_polyhedral(quotient(sq, {3, 0, 3})).ok);
  EXPECT_TRUE(is_polyhedral(quotient(sq, {4, 0, 4})).ok);
}

TEST(Polyhedral, AgreesWithAllPairsOracle) {
  auto sq = oracle::square_tiling();
  for (int n = 1; n <= 12; ++n)
    for (const auto& m : enumerate_sublattices(n)) {
      FiniteMap x = quotient(sq, m);
      EXPECT_EQ(is_polyhedral(x).ok, oracle::polyhedral_bruteforce(x)) << m.str();
    }
  for (int id : {4, 12, 15, 19}) {
    for (int n = 1; n <= 4; ++n)
      for (const auto& m : enumerate_sublattices(n)) {
        FiniteMap x = quotient(catalog(id), m);
        EXPECT_EQ(is_polyhedral(x).ok, oracle::polyhedral_bruteforce(x)) << "K" << id << " " << m.str();
      }
  }
}

TEST(LinkType, MatchesCoveredSite) {
  for (int id : {2, 9, 15, 20}) {
    const auto& t = catalog(id);
    auto rs = rotation_system(t);
    FiniteMap x = quotient(t, {3, 1, 3});
    ASSERT_TRUE(is_polyhedral(x).ok) << "K" << id;
    std::map<VertexType, int> counts;
    for (int v = 0; v < x.V(); ++v) {
      VertexType vt = vertex_link_type(x, v);
      EXPECT_EQ(vt, classify_vertex_type(t, rs, x.vertex_site[static_cast<std::size_t>(v)]));
      ++counts[vt];
    }
    std::map<VertexType, int> cell;
    for (std::size_t s = 0; s < t.sites.size(); ++s) ++cell[classify_vertex_type(t, rs, static_cast<int>(s))];
    for (auto& [k, n] : cell) n *= 9;
    EXPECT_EQ(counts, cell);
  }
  EXPECT_THROW(vertex_link_type(quotient(catalog(3), {1, 0, 1}), 0), std::logic_error);
}

TEST(Quotient, RefinementCoversCoarserQuotient) {
  // <(2,0),(0,4)> refines <(1,0),(0,2)>.
  const auto& t = catalog(13);
  FiniteMap fine = quotient(t, {2, 0, 4});
  FiniteMap coarse = quotient(t, {1, 0, 2});
  EXPECT_EQ(fine.V(), 4 * coarse.V());
  EXPECT_EQ(fine.E(), 4 * coarse.E());
  EXPECT_EQ(fine.F(), 4 * coarse.F());
  for (int v = 0; v < fine.V(); ++v) {
    int s = fine.vertex_site[static_cast<std::size_t>(v)];
    EXPECT_EQ(fine.darts_at(v).size(), coarse.darts_at(s * 2).size());
  }
}

TEST(Export, DotAndOffAreConsistentAndStable) {
  const auto& t = catalog(12);
  FiniteMap x = quotient(t, {2, 1, 3});
  std::ostringstream dot1, dot2, off1, off2;
  export_dot(dot1, x);
  export_dot(dot2, x);
  export_off(off1, x, t);
  export_off(off2, x, t);
  EXPECT_EQ(dot1.str(), dot2.str());
  EXPECT_EQ(off1.str(), off2.str());
  std::string d = dot1.str();
  int edges = 0, verts = 0;
  std::istringstream lines(d);
  for (std::string line; std::getline(lines, line);) {
    if (line.find("--") != std::string::npos) ++edges;
    else if (line.find("[label") != std::string::npos) ++verts;
  }
  EXPECT_EQ(verts, 6 * static_cast<int>(t.sites.size()));
  EXPECT_EQ(edges, x.E());
  std::istringstream off(off1.str());
  std::string magic;
  int v = 0, f = 0, e = 0;
  off >> magic >> v >> f >> e;
  EXPECT_EQ(magic, "OFF");
  EXPECT_EQ(v, x.V());
  EXPECT_EQ(f, x.F());
  std::string x0;
  off >> x0;
  EXPECT_EQ(x0.size() - x0.find('.') - 1, 12u);
}
