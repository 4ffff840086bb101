#include "tilingq/torus_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace tq {

namespace {
std::size_t ix(int k) { return static_cast<std::size_t>(k); }
}  // namespace

int FiniteMap::F() const { return static_cast<int>(faces().size()); }

std::vector<std::vector<int>> FiniteMap::faces() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(alpha.size(), 0);
  for (int d = 0; d < num_darts(); ++d) {
    if (seen[ix(d)]) continue;
    std::vector<int> orbit;
    for (int e = d; !seen[ix(e)]; e = phi(e)) {
      seen[ix(e)] = 1;
      orbit.push_back(e);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<int> FiniteMap::face_of() const {
  std::vector<int> f(alpha.size(), -1);
  auto fs = faces();
  for (std::size_t k = 0; k < fs.size(); ++k)
    for (int d : fs[k]) f[ix(d)] = static_cast<int>(k);
  return f;
}

std::vector<int> FiniteMap::darts_at(int v) const {
  int start = -1;
  for (int d = 0; d < num_darts(); ++d) {
    if (vertex_of[ix(d)] == v) {
      start = d;
      break;
    }
  }
  std::vector<int> out;
  if (start < 0) return out;
  int d = start;
  do {
    out.push_back(d);
    d = sigma[ix(d)];
  } while (d != start);
  return out;
}

FiniteMap quotient(const PeriodicTiling& t, const SublatticeMatrix& m) {
  if (!m.valid()) throw std::domain_error("sublattice matrix not in Hermite normal form");
  RotationSystem rs = rotation_system(t);
  const std::int64_t idx = m.index();
  const std::size_t ns = t.sites.size();
  std::vector<std::int64_t> first(ns + 1, 0);
  for (std::size_t s = 0; s < ns; ++s) first[s + 1] = first[s] + idx * static_cast<std::int64_t>(rs[s].size());
  auto dart_id = [&](std::size_t s, std::int64_t rank, std::size_t k) {
    return static_cast<int>(first[s] + rank * static_cast<std::int64_t>(rs[s].size()) + static_cast<std::int64_t>(k));
  };
  FiniteMap x;
  x.tiling_id = t.id;
  x.lattice = m;
  x.num_vertices = static_cast<int>(static_cast<std::int64_t>(ns) * idx);
  const std::size_t nd = static_cast<std::size_t>(first[ns]);
  x.alpha.assign(nd, -1);
  x.sigma.assign(nd, -1);
  x.vertex_of.assign(nd, -1);
  for (std::size_t s = 0; s < ns; ++s) {
    // Reverse germ indices are independent of the coset.
    std::vector<int> rev(rs[s].size());
    for (std::size_t k = 0; k < rs[s].size(); ++k) rev[k] = reverse_germ(rs, static_cast<int>(s), rs[s][k]);
    for (std::int64_t r = 0; r < idx; ++r) {
      Int2 c = coset_unrank(r, m);
      int vid = static_cast<int>(static_cast<std::int64_t>(s) * idx + r);
      x.vertex_site.push_back(static_cast<int>(s));
      x.vertex_coset.push_back(c);
      const std::size_t deg = rs[s].size();
      for (std::size_t k = 0; k < deg; ++k) {
        const Germ& g = rs[s][k];
        int d = dart_id(s, r, k);
        x.vertex_of[ix(d)] = vid;
        x.sigma[ix(d)] = dart_id(s, r, (k + 1) % deg);
        Int2 tc = reduce_to_coset({c[0] + g.shift[0], c[1] + g.shift[1]}, m);
        x.alpha[ix(d)] = dart_id(ix(g.target), coset_rank(tc, m), ix(rev[k]));
      }
    }
  }
  return x;
}

FiniteMap map_from_permutations(std::vector<int> alpha, std::vector<int> sigma) {
  FiniteMap x;
  x.alpha = std::move(alpha);
  x.sigma = std::move(sigma);
  if (x.alpha.size() != x.sigma.size()) throw std::invalid_argument("permutation sizes differ");
  x.vertex_of.assign(x.alpha.size(), -1);
  for (int d = 0; d < x.num_darts(); ++d) {
    if (x.vertex_of[ix(d)] >= 0) continue;
    int e = d;
    do {
      if (e < 0 || e >= x.num_darts()) throw std::invalid_argument("sigma out of range");
      x.vertex_of[ix(e)] = x.num_vertices;
      e = x.sigma[ix(e)];
    } while (e != d && x.vertex_of[ix(e)] < 0);
    if (e != d) throw std::invalid_argument("sigma is not a permutation");
    ++x.num_vertices;
  }
  return x;
}

bool is_valid_map(const FiniteMap& x, std::string* why) {
  auto bad = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = x.num_darts();
  if (static_cast<int>(x.sigma.size()) != n || static_cast<int>(x.vertex_of.size()) != n) return bad("size mismatch");
  std::vector<char> hit(ix(n), 0);
  for (int d = 0; d < n; ++d) {
    int a = x.alpha[ix(d)];
    if (a < 0 || a >= n || a == d || x.alpha[ix(a)] != d) return bad("alpha is not a fixed-point-free involution");
    int s = x.sigma[ix(d)];
    if (s < 0 || s >= n || hit[ix(s)]) return bad("sigma is not a permutation");
    hit[ix(s)] = 1;
    if (x.vertex_of[ix(s)] != x.vertex_of[ix(d)]) return bad("sigma leaves its vertex");
  }
  return true;
}

bool is_connected(const FiniteMap& x) {
  if (x.num_darts() == 0) return x.num_vertices <= 1;
  std::vector<char> seen(x.alpha.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int e : {x.alpha[ix(d)], x.sigma[ix(d)]}) {
      if (!seen[ix(e)]) {
        seen[ix(e)] = 1;
        ++count;
        stack.push_back(e);
      }
    }
  }
  return count == x.alpha.size();
}

PolyhedralCheck is_polyhedral(const FiniteMap& x) {
  PolyhedralCheck res;
  auto fail = [&](std::string w) {
    res.ok = false;
    res.witness = std::move(w);
    return res;
  };
  if (!is_connected(x)) return fail("graph is disconnected");
  std::set<std::pair<int, int>> pairs;
  for (int d = 0; d < x.num_darts(); ++d) {
    int a = x.alpha[ix(d)];
    if (d > a) continue;
    int u = x.vertex_of[ix(d)], w = x.vertex_of[ix(a)];
    if (u == w) return fail("loop at vertex " + std::to_string(u));
    if (!pairs.insert({std::min(u, w), std::max(u, w)}).second)
      return fail("parallel edges between " + std::to_string(u) + " and " + std::to_string(w));
  }
  auto fs = x.faces();
  std::vector<std::vector<int>> fverts(fs.size());
  std::vector<std::set<std::pair<int, int>>> fedges(fs.size());
  std::vector<std::vector<int>> faces_at(ix(x.num_vertices));
  for (std::size_t f = 0; f < fs.size(); ++f) {
    std::set<int> vs;
    for (int d : fs[f]) {
      int u = x.vertex_of[ix(d)], w = x.vertex_of[ix(x.alpha[ix(d)])];
      if (!vs.insert(u).second) return fail("face " + std::to_string(f) + " revisits vertex " + std::to_string(u));
      fedges[f].insert({std::min(u, w), std::max(u, w)});
    }
    if (fs[f].size() < 3) return fail("face " + std::to_string(f) + " has fewer than 3 sides");
    fverts[f].assign(vs.begin(), vs.end());
    for (int u : vs) faces_at[ix(u)].push_back(static_cast<int>(f));
  }
  std::set<std::pair<int, int>> done;
  for (const auto& at : faces_at) {
    for (std::size_t p = 0; p < at.size(); ++p) {
      for (std::size_t q = p + 1; q < at.size(); ++q) {
        int f = std::min(at[p], at[q]), g = std::max(at[p], at[q]);
        if (f == g || !done.insert({f, g}).second) continue;
        std::vector<int> common;
        std::set_intersection(fverts[ix(f)].begin(), fverts[ix(f)].end(), fverts[ix(g)].begin(),
                              fverts[ix(g)].end(), std::back_inserter(common));
        if (common.size() == 1) continue;
        if (common.size() == 2) {
          std::pair<int, int> e{common[0], common[1]};
          if (fedges[ix(f)].count(e) && fedges[ix(g)].count(e)) continue;
        }
        return fail("faces " + std::to_string(f) + " and " + std::to_string(g) + " share " +
                    std::to_string(common.size()) + " vertices but not exactly one edge");
      }
    }
  }
  return res;
}

VertexType vertex_link_type(const FiniteMap& x, int v) {
  if (!is_polyhedral(x).ok) throw std::logic_error("vertex_link_type requires a polyhedral map");
  auto fo = x.face_of();
  auto fs = x.faces();
  std::vector<int> cyc;
  for (int d : x.darts_at(v)) cyc.push_back(static_cast<int>(fs[ix(fo[ix(d)])].size()));
  return VertexType::from_cycle(std::move(cyc));
}

void export_dot(std::ostream& os, const FiniteMap& x) {
  os << "graph quotient {\n";
  os << "  // tiling " << x.tiling_id << " lattice " << x.lattice.str() << '\n';
  for (int v = 0; v < x.num_vertices; ++v) {
    os << "  v" << v;
    if (ix(v) < x.vertex_site.size())
      os << " [label=\"s" << x.vertex_site[ix(v)] << "@" << x.vertex_coset[ix(v)][0] << ","
         << x.vertex_coset[ix(v)][1] << "\"]";
    os << ";\n";
  }
  for (int d = 0; d < x.num_darts(); ++d) {
    int a = x.alpha[ix(d)];
    if (d < a) os << "  v" << x.vertex_of[ix(d)] << " -- v" << x.vertex_of[ix(a)] << ";\n";
  }
  os << "}\n";
}

void export_off(std::ostream& os, const FiniteMap& x, const PeriodicTiling& t) {
  auto fs = x.faces();
  os << "OFF\n" << x.num_vertices << ' ' << fs.size() << ' ' << x.E() << '\n';
  for (int v = 0; v < x.num_vertices; ++v) {
    const Int2& c = x.vertex_coset.at(ix(v));
    Vec2 p = t.position(x.vertex_site.at(ix(v)), c);
    os << p.x.decimal(12) << ' ' << p.y.decimal(12) << " 0\n";
  }
  for (const auto& f : fs) {
    os << f.size();
    for (int d : f) os << ' ' << x.vertex_of[ix(d)];
    os << '\n';
  }
}

}  // namespace tq
