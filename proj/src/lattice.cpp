#include "tilingq/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace tq {
namespace {

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  std::int64_t r = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --r;
  return r;
}

std::int64_t floor_mod(std::int64_t p, std::int64_t q) { return p - q * floor_div(p, q); }

}  // namespace

std::string SublatticeMatrix::str() const {
  return std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(d);
}

std::vector<SublatticeMatrix> enumerate_sublattices(std::int64_t n) {
  if (n <= 0) throw std::domain_error("sublattice index must be positive");
  std::vector<SublatticeMatrix> out;
  for (std::int64_t a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    std::int64_t d = n / a;
    for (std::int64_t b = 0; b < d; ++b) out.push_back({a, b, d});
  }
  return out;
}

SublatticeMatrix hnf_from_generators(Int2 g1, Int2 g2) {
  // Euclid on the first coordinates, carrying the second along.
  while (g2[0] != 0) {
    std::int64_t q = floor_div(g1[0], g2[0]);
    g1 = {g1[0] - q * g2[0], g1[1] - q * g2[1]};
    std::swap(g1, g2);
  }
  if (g1[0] < 0) g1 = {-g1[0], -g1[1]};
  if (g2[1] < 0) g2 = {0, -g2[1]};
  if (g1[0] == 0 || g2[1] == 0) throw std::domain_error("generators are dependent");
  return {g1[0], floor_mod(g1[1], g2[1]), g2[1]};
}

Int2 reduce_to_coset(Int2 v, const SublatticeMatrix& m) {
  std::int64_t k = floor_div(v[0], m.a);
  std::int64_t x = v[0] - k * m.a;
  std::int64_t y = floor_mod(v[1] - k * m.b, m.d);
  return {x, y};
}

std::int64_t coset_rank(const Int2& r, const SublatticeMatrix& m) { return r[1] * m.a + r[0]; }

Int2 coset_unrank(std::int64_t rank, const SublatticeMatrix& m) { return {rank % m.a, rank / m.a}; }

bool contains(const SublatticeMatrix& m, Int2 v) {
  if (v[0] % m.a != 0) return false;
  std::int64_t k = v[0] / m.a;
  return (v[1] - k * m.b) % m.d == 0;
}

}  // namespace tq
