#include "tilingq/symmetry.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace tq {

namespace {
std::size_t ix(int k) { return static_cast<std::size_t>(k); }

int find_root(std::vector<int>& p, int a) {
  while (p[ix(a)] != a) {
    p[ix(a)] = p[ix(p[ix(a)])];
    a = p[ix(a)];
  }
  return a;
}

VertexOrbits number_orbits(std::vector<int>& parent) {
  VertexOrbits vo;
  std::vector<int> label(parent.size(), -1);
  vo.orbit_of.resize(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v) {
    int r = find_root(parent, static_cast<int>(v));
    if (label[ix(r)] < 0) label[ix(r)] = vo.count++;
    vo.orbit_of[v] = label[ix(r)];
  }
  return vo;
}
}  // namespace

std::optional<MapAutomorphism> extend_from_base(const FiniteMap& x, int image, bool reversing) {
  const int n = x.num_darts();
  std::vector<int> inv_sigma(ix(n));
  for (int d = 0; d < n; ++d) inv_sigma[ix(x.sigma[ix(d)])] = d;
  std::vector<int> img(ix(n), -1), pre(ix(n), -1);
  std::vector<int> queue{0};
  img[0] = image;
  pre[ix(image)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int d = queue[head];
    int e = img[ix(d)];
    std::pair<int, int> steps[2] = {{x.alpha[ix(d)], x.alpha[ix(e)]},
                                    {x.sigma[ix(d)], reversing ? inv_sigma[ix(e)] : x.sigma[ix(e)]}};
    for (auto [src, dst] : steps) {
      if (img[ix(src)] < 0) {
        if (pre[ix(dst)] >= 0) return std::nullopt;
        img[ix(src)] = dst;
        pre[ix(dst)] = src;
        queue.push_back(src);
      } else if (img[ix(src)] != dst) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) throw std::logic_error("automorphism search needs a connected map");
  return MapAutomorphism{std::move(img), reversing};
}

std::vector<MapAutomorphism> automorphism_group(const FiniteMap& x) {
  if (x.num_darts() == 0) return {MapAutomorphism{{}, false}};
  if (!is_connected(x)) throw std::logic_error("automorphism_group: map is disconnected");
  std::vector<MapAutomorphism> out;
  for (bool rev : {false, true}) {
    for (int d = 0; d < x.num_darts(); ++d) {
      if (auto g = extend_from_base(x, d, rev)) out.push_back(std::move(*g));
    }
  }
  return out;
}

bool is_automorphism(const FiniteMap& x, const MapAutomorphism& g) {
  const int n = x.num_darts();
  if (static_cast<int>(g.dart_perm.size()) != n) return false;
  std::vector<char> hit(ix(n), 0);
  std::vector<int> inv_sigma(ix(n));
  for (int d = 0; d < n; ++d) inv_sigma[ix(x.sigma[ix(d)])] = d;
  for (int d = 0; d < n; ++d) {
    int e = g.dart_perm[ix(d)];
    if (e < 0 || e >= n || hit[ix(e)]) return false;
    hit[ix(e)] = 1;
    if (g.dart_perm[ix(x.alpha[ix(d)])] != x.alpha[ix(e)]) return false;
    int s = g.reversing ? inv_sigma[ix(e)] : x.sigma[ix(e)];
    if (g.dart_perm[ix(x.sigma[ix(d)])] != s) return false;
  }
  return true;
}

MapAutomorphism compose(const MapAutomorphism& g, const MapAutomorphism& h) {
  MapAutomorphism r;
  r.reversing = g.reversing != h.reversing;
  r.dart_perm.resize(h.dart_perm.size());
  for (std::size_t d = 0; d < h.dart_perm.size(); ++d) r.dart_perm[d] = g.dart_perm[ix(h.dart_perm[d])];
  return r;
}

MapAutomorphism inverse(const MapAutomorphism& g) {
  MapAutomorphism r;
  r.reversing = g.reversing;
  r.dart_perm.resize(g.dart_perm.size());
  for (std::size_t d = 0; d < g.dart_perm.size(); ++d) r.dart_perm[ix(g.dart_perm[d])] = static_cast<int>(d);
  return r;
}

VertexOrbits vertex_orbit_count(const FiniteMap& x, const std::vector<MapAutomorphism>& group) {
  std::vector<int> parent(ix(x.num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& g : group) {
    for (int d = 0; d < x.num_darts(); ++d) {
      int a = find_root(parent, x.vertex_of[ix(d)]);
      int b = find_root(parent, x.vertex_of[ix(g.dart_perm[ix(d)])]);
      if (a != b) parent[ix(std::max(a, b))] = std::min(a, b);
    }
  }
  return number_orbits(parent);
}

VertexOrbits quotient_group_orbits(const PeriodicTiling& t, const SublatticeMatrix& m) {
  const std::int64_t idx = m.index();
  const std::int64_t ns = static_cast<std::int64_t>(t.sites.size());
  auto vid = [&](std::int64_t s, const Int2& c) { return static_cast<int>(s * idx + coset_rank(reduce_to_coset(c, m), m)); };
  std::vector<int> parent(ix(static_cast<int>(ns * idx)));
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[ix(std::max(a, b))] = std::min(a, b);
  };
  auto inv = inversion_image(t);
  // Generators: the two basis translations and the inversion.
  for (std::int64_t s = 0; s < ns; ++s) {
    for (std::int64_t r = 0; r < idx; ++r) {
      Int2 c = coset_unrank(r, m);
      int here = vid(s, c);
      unite(here, vid(s, {c[0] + 1, c[1]}));
      unite(here, vid(s, {c[0], c[1] + 1}));
      // -(p_s + c) = p_s' + shift - c
      const Located& l = inv[ix(static_cast<int>(s))];
      unite(here, vid(l.site, {l.shift[0] - c[0], l.shift[1] - c[1]}));
    }
  }
  return number_orbits(parent);
}

bool verify_claim1(const PeriodicTiling& t, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-50, 50);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int k = 0; k < samples; ++k) {
    Vec2 kt = QuadExt(coef(rng)) * t.u + QuadExt(coef(rng)) * t.v;
    const QuadExt half(Rational(1, 2));
    Vec2 gt = half * (QuadExt(coef(rng)) * t.u + QuadExt(coef(rng)) * t.v);
    Isometry g{coin(rng) ? 1 : -1, gt};
    Isometry kk = Isometry::translation(kt);
    Isometry lhs = compose(compose(g, kk), g.inverse());
    Isometry rhs = Isometry::translation(g.eps > 0 ? kt : -kt);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace tq
