// Exact data for the twenty two-uniform tilings. Each entry gives the type
// pair, a primitive translation basis and one point per vertex class, with
// the origin at a centre of point inversion. Edges are derived.
#include "tilingq/catalog.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

namespace tq {
namespace {

struct RawEntry {
  int id;
  const char* type1;
  const char* type2;
  std::array<const char*, 4> basis;  // ux uy vx vy
  std::vector<std::array<const char*, 2>> sites;
};

const std::vector<RawEntry>& raw_entries() {
  static const std::vector<RawEntry> entries = {
    {1,
     "[3^6]", "[3^4,6]",
     {"7/2", "1/2*r3", "1", "2*r3"},
     {{"1/4", "1/4*r3"},
      {"5/4", "1/4*r3"},
      {"3/4", "3/4*r3"},
      {"-1/4", "3/4*r3"},
      {"-3/4", "1/4*r3"},
      {"-1/4", "-1/4*r3"},
      {"3/4", "-1/4*r3"},
      {"7/4", "-1/4*r3"},
      {"9/4", "1/4*r3"},
      {"7/4", "3/4*r3"},
      {"5/4", "5/4*r3"},
      {"1/4", "5/4*r3"}}},
    {2,
     "[3^6]", "[3^4,6]",
     {"3", "0", "3/2", "3/2*r3"},
     {{"-3/4", "1/4*r3"},
      {"1/4", "1/4*r3"},
      {"-1/4", "3/4*r3"},
      {"-5/4", "3/4*r3"},
      {"-7/4", "1/4*r3"},
      {"-5/4", "-1/4*r3"},
      {"-1/4", "-1/4*r3"},
      {"3/4", "-1/4*r3"}}},
    {3,
     "[3^6]", "[3^3,4^2]",
     {"1", "0", "1/2", "1+3/2*r3"},
     {{"-1/4", "-1/4*r3"},
      {"1/4", "1/4*r3"},
      {"-3/4", "-3/4*r3"},
      {"3/4", "3/4*r3"}}},
    {4,
     "[3^6]", "[3^3,4^2]",
     {"1", "0", "0", "1+1*r3"},
     {{"0", "0"},
      {"1/2", "1/2*r3"},
      {"-1/2", "-1/2*r3"}}},
    {5,
     "[3^6]", "[3^2,4,3,4]",
     {"3/2+1/2*r3", "1/2+1/2*r3", "0", "1+1*r3"},
     {{"0", "0"},
      {"1", "0"},
      {"1/2", "1/2*r3"},
      {"-1/2", "1/2*r3"},
      {"-1", "0"},
      {"-1/2", "-1/2*r3"},
      {"1/2", "-1/2*r3"}}},
    {6,
     "[3^6]", "[3^2,4,12]",
     {"3+1*r3", "0", "3/2+1/2*r3", "3/2+3/2*r3"},
     {{"-3/4-1/4*r3", "1/4+1/4*r3"},
      {"1/4-1/4*r3", "1/4+1/4*r3"},
      {"-1/4-1/4*r3", "1/4+3/4*r3"},
      {"-5/4-1/4*r3", "1/4+3/4*r3"},
      {"-7/4-1/4*r3", "1/4+1/4*r3"},
      {"-5/4-1/4*r3", "1/4-1/4*r3"},
      {"-1/4-1/4*r3", "1/4-1/4*r3"},
      {"-1/4+1/4*r3", "-1/4-1/4*r3"},
      {"1/4+1/4*r3", "-1/4+1/4*r3"},
      {"5/4+1/4*r3", "-1/4+1/4*r3"},
      {"7/4+3/4*r3", "5/4+3/4*r3"},
      {"1/4-1/4*r3", "5/4+5/4*r3"},
      {"-1/4-1/4*r3", "5/4+3/4*r3"},
      {"3/4+1/4*r3", "-1/4-1/4*r3"}}},
    {7,
     "[3^6]", "[3^2,6^2]",
     {"3", "0", "3/2", "3/2*r3"},
     {{"0", "0"},
      {"1", "0"},
      {"1/2", "1/2*r3"},
      {"-1/2", "1/2*r3"},
      {"-1", "0"},
      {"-1/2", "-1/2*r3"},
      {"1/2", "-1/2*r3"}}},
    {8,
     "[3^4,6]", "[3^2,6^2]",
     {"1*r3", "0", "1/2*r3", "5/2"},
     {{"-1/4*r3", "-1/4"},
      {"1/4*r3", "1/4"},
      {"-1/4*r3", "3/4"},
      {"-3/4*r3", "-3/4"}}},
    {9,
     "[3^3,4^2]", "[3^2,4,3,4]",
     {"-3/2-1*r3", "1/2*r3", "-1/2*r3", "-3/2-1*r3"},
     {{"-1/2", "1/2"},
      {"1/2", "1/2"},
      {"0", "1/2+1/2*r3"},
      {"-1", "1/2+1/2*r3"},
      {"-1-1/2*r3", "1/2*r3"},
      {"-1/2-1/2*r3", "0"},
      {"-1/2", "-1/2"},
      {"1/2", "-1/2"},
      {"1/2+1/2*r3", "1"},
      {"1/2*r3", "1+1/2*r3"},
      {"-1/2", "1/2+1*r3"},
      {"1+1/2*r3", "1+1/2*r3"}}},
    {10,
     "[3^3,4^2]", "[3^2,4,3,4]",
     {"-1-1/2*r3", "-1/2", "1", "-2-1*r3"},
     {{"0", "-1/2*r3"},
      {"1", "-1/2*r3"},
      {"1/2", "0"},
      {"-1/2", "0"},
      {"0", "-1-1/2*r3"},
      {"1", "-1-1/2*r3"},
      {"1/2*r3", "1/2+1/2*r3"},
      {"0", "1/2*r3"}}},
    {11,
     "[3^3,4^2]", "[3,4,6,4]",
     {"2+1*r3", "0", "1+1/2*r3", "3/2+1*r3"},
     {{"0", "1/2"},
      {"1", "1/2"},
      {"1/2", "1/2+1/2*r3"},
      {"-1/2", "1/2+1/2*r3"},
      {"-1", "1/2"},
      {"-1", "-1/2"},
      {"0", "-1/2"},
      {"1", "-1/2"},
      {"-1/2", "-1/2-1/2*r3"},
      {"1/2", "-1/2-1/2*r3"},
      {"1+1/2*r3", "-1"},
      {"1+1/2*r3", "1"}}},
    {12,
     "[3^3,4^2]", "[4^4]",
     {"1", "0", "1/2", "2+1/2*r3"},
     {{"-1/4", "-1/4*r3"},
      {"1/4", "1/4*r3"},
      {"-5/4", "-1-1/4*r3"}}},
    {13,
     "[3^3,4^2]", "[4^4]",
     {"1", "0", "1/2", "3+1/2*r3"},
     {{"-1/4", "-1/4*r3"},
      {"1/4", "1/4*r3"},
      {"-5/4", "-1-1/4*r3"},
      {"5/4", "1+1/4*r3"}}},
    {14,
     "[3^2,4,3,4]", "[3,4,6,4]",
     {"2+1*r3", "0", "1+1/2*r3", "3/2+1*r3"},
     {{"1/4*r3", "1/4"},
      {"1+1/4*r3", "1/4"},
      {"1/2+1/4*r3", "1/4+1/2*r3"},
      {"1/2-1/4*r3", "3/4+1/2*r3"},
      {"-1/4*r3", "3/4"},
      {"-1/4*r3", "-1/4"},
      {"1/4*r3", "-3/4"},
      {"1+1/4*r3", "-3/4"},
      {"1+3/4*r3", "-1/4"},
      {"1+3/4*r3", "3/4"},
      {"1/2+3/4*r3", "3/4+1/2*r3"},
      {"1/2+1/4*r3", "5/4+1/2*r3"}}},
    {15,
     "[3^2,6^2]", "[3,6,3,6]",
     {"1*r3", "0", "0", "2"},
     {{"0", "-1/2"},
      {"1/2*r3", "0"},
      {"0", "1/2"}}},
    {16,
     "[3,4,3,12]", "[3,12^2]",
     {"2+1*r3", "0", "0", "2+1*r3"},
     {{"1/2+1/2*r3", "-1/2-1/2*r3"},
      {"3/2+1/2*r3", "-1/2-1/2*r3"},
      {"1+1/2*r3", "-1/2"},
      {"1+1/2*r3", "1/2"},
      {"1/2+1/2*r3", "1/2+1/2*r3"},
      {"1/2", "1+1/2*r3"},
      {"-1/2", "1+1/2*r3"},
      {"-1/2-1/2*r3", "1/2+1/2*r3"}}},
    {17,
     "[3,4^2,6]", "[3,4,6,4]",
     {"3+1*r3", "0", "3/2+1/2*r3", "3/2+3/2*r3"},
     {{"1/4+1/4*r3", "-1/4+1/4*r3"},
      {"5/4+1/4*r3", "-1/4+1/4*r3"},
      {"3/4+1/4*r3", "-1/4+3/4*r3"},
      {"3/4-1/4*r3", "1/4+3/4*r3"},
      {"1/4-1/4*r3", "1/4+1/4*r3"},
      {"-1/4-1/4*r3", "1/4-1/4*r3"},
      {"-1/4+1/4*r3", "-1/4-1/4*r3"},
      {"1/4+1/4*r3", "-1/4-3/4*r3"},
      {"5/4+1/4*r3", "-1/4-3/4*r3"},
      {"7/4+1/4*r3", "-1/4-1/4*r3"},
      {"-3/4-1/4*r3", "1/4-3/4*r3"},
      {"-3/4+1/4*r3", "-1/4-3/4*r3"},
      {"7/4+3/4*r3", "1/4-1/4*r3"},
      {"5/4+3/4*r3", "1/4+1/4*r3"},
      {"3/4+3/4*r3", "1/4+3/4*r3"},
      {"3/4-1/4*r3", "5/4+3/4*r3"},
      {"1/4+1/4*r3", "-5/4-3/4*r3"},
      {"5/4+1/4*r3", "-5/4-3/4*r3"}}},
    {18,
     "[3,4^2,6]", "[3,6,3,6]",
     {"2", "0", "1", "1+1*r3"},
     {{"1/2", "-1/2*r3"},
      {"3/2", "-1/2*r3"},
      {"1", "0"},
      {"1/2", "1/2*r3"},
      {"-1/2", "1/2*r3"}}},
    {19,
     "[3,4^2,6]", "[3,6,3,6]",
     {"2", "0", "0", "1+1*r3"},
     {{"1/2", "-1/2*r3"},
      {"3/2", "-1/2*r3"},
      {"1", "0"},
      {"1/2", "1/2*r3"},
      {"-1/2", "1/2*r3"}}},
    {20,
     "[3,4,6,4]", "[4,6,12]",
     {"3+1*r3", "1+1*r3", "0", "2+2*r3"},
     {{"1/2", "1/2*r3"},
      {"1/2+1/2*r3", "1/2+1/2*r3"},
      {"1/2", "1+1/2*r3"},
      {"-1/2", "1+1/2*r3"},
      {"-1/2", "1/2*r3"},
      {"-1", "0"},
      {"-1/2", "-1/2*r3"},
      {"1/2", "-1/2*r3"},
      {"1", "0"},
      {"1+1/2*r3", "1/2"},
      {"-1", "1+1*r3"},
      {"-1-1/2*r3", "3/2+1*r3"},
      {"-5/2-1*r3", "1/2*r3"},
      {"-2-1*r3", "0"},
      {"-2-1/2*r3", "-1/2"},
      {"-1-1/2*r3", "-1/2"},
      {"-1/2-1/2*r3", "-1/2-1/2*r3"},
      {"-1/2", "-1-1/2*r3"}}},
  };
  return entries;
}

constexpr std::array<int, kCatalogSize> kBounds = {6, 4, 2, 2, 4, 7, 4, 3, 6, 3, 6, 2, 2, 6, 2, 3, 9, 3, 3, 9};

PeriodicTiling build(const RawEntry& e) {
  std::vector<Vec2> pts;
  for (const auto& s : e.sites) pts.emplace_back(QuadExt::parse(s[0]), QuadExt::parse(s[1]));
  Vec2 u(QuadExt::parse(e.basis[0]), QuadExt::parse(e.basis[1]));
  Vec2 v(QuadExt::parse(e.basis[2]), QuadExt::parse(e.basis[3]));
  return make_tiling(e.id, "K" + std::to_string(e.id), u, v, std::move(pts),
                     {VertexType::parse(e.type1), VertexType::parse(e.type2)});
}

}  // namespace

const PeriodicTiling& catalog(int id) {
  if (id < 1 || id > kCatalogSize) throw std::domain_error("catalog id out of range: " + std::to_string(id));
  static std::once_flag once;
  static std::vector<PeriodicTiling> all;
  std::call_once(once, [] {
    all.resize(kCatalogSize);
    for (const auto& e : raw_entries()) all[static_cast<std::size_t>(e.id - 1)] = build(e);
  });
  const auto& t = all[static_cast<std::size_t>(id - 1)];
  if (t.id != id) throw std::domain_error("catalog entry missing: " + std::to_string(id));
  return t;
}

int orbit_bound(int id) {
  if (id < 1 || id > kCatalogSize) throw std::domain_error("catalog id out of range: " + std::to_string(id));
  return kBounds[static_cast<std::size_t>(id - 1)];
}

bool requires_exactly_two(int id) { return id == 3 || id == 4 || id == 12 || id == 13 || id == 15; }

}  // namespace tq
