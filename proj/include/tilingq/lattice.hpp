// Finite-index sublattices of Z^2 in Hermite normal form.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tq {

using Int2 = std::array<std::int64_t, 2>;

// Generators (a, b) and (0, d), written as the rows of an upper-triangular
// matrix; a >= 1, d >= 1, 0 <= b < d.
struct SublatticeMatrix {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t d = 1;

  std::int64_t index() const { return a * d; }
  bool valid() const { return a >= 1 && d >= 1 && b >= 0 && b < d; }
  Int2 gen1() const { return {a, b}; }
  Int2 gen2() const { return {0, d}; }
  std::string str() const;  // "a b d"
  friend auto operator<=>(const SublatticeMatrix&, const SublatticeMatrix&) = default;
};

// All HNF matrices of determinant n, sorted by (a, b, d).
std::vector<SublatticeMatrix> enumerate_sublattices(std::int64_t n);

// HNF of the lattice spanned by two independent integer vectors.
SublatticeMatrix hnf_from_generators(Int2 g1, Int2 g2);

// Representative of v + M in {0 <= x < a, 0 <= y < d}.
Int2 reduce_to_coset(Int2 v, const SublatticeMatrix& m);

// Position of a reduced coset in 0..index-1 (row-major in y, then x).
std::int64_t coset_rank(const Int2& reduced, const SublatticeMatrix& m);
Int2 coset_unrank(std::int64_t rank, const SublatticeMatrix& m);

bool contains(const SublatticeMatrix& m, Int2 v);

}  // namespace tq
