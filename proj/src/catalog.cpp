#include "tilingq/catalog.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tq {

// ---------------------------------------------------------------- VertexType

VertexType VertexType::from_cycle(std::vector<int> cycle) {
  VertexType t;
  if (cycle.empty()) return t;
  std::vector<int> best = cycle;
  const std::size_t n = cycle.size();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<int> rot(n);
      for (std::size_t k = 0; k < n; ++k) rot[k] = cycle[(r + k) % n];
      best = std::min(best, rot);
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  t.cycle_ = std::move(best);
  return t;
}

VertexType VertexType::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '[' && c != ']') s += c;
  std::vector<int> cycle;
  char sep = s.find(',') != std::string::npos ? ',' : '.';
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    if (tok.empty()) throw std::invalid_argument("bad vertex type: " + text);
    auto caret = tok.find('^');
    int p = std::stoi(tok.substr(0, caret));
    int e = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
    if (p < 3 || e < 1) throw std::invalid_argument("bad vertex type: " + text);
    cycle.insert(cycle.end(), static_cast<std::size_t>(e), p);
  }
  return from_cycle(std::move(cycle));
}

std::vector<std::pair<int, int>> VertexType::runs() const {
  std::vector<std::pair<int, int>> out;
  for (int p : cycle_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::string VertexType::str() const {
  std::string s = "[";
  bool first = true;
  for (auto [p, e] : runs()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s + "]";
}

// ---------------------------------------------------------------- geometry

Vec2 PeriodicTiling::position(int site, Int2 shift) const {
  return sites.at(static_cast<std::size_t>(site)) + QuadExt(shift[0]) * u + QuadExt(shift[1]) * v;
}

Edge canonical_edge(Edge e) {
  bool flip = e.i > e.j || (e.i == e.j && e.shift < Int2{0, 0});
  if (flip) return {e.j, e.i, {-e.shift[0], -e.shift[1]}};
  return e;
}

std::pair<QuadExt, QuadExt> basis_coords(const PeriodicTiling& t, const Vec2& p) {
  QuadExt det = cross(t.u, t.v);
  if (det.is_zero()) throw std::domain_error("degenerate basis");
  return {cross(p, t.v) / det, cross(t.u, p) / det};
}

namespace {

std::int64_t to_i64(const BigInt& b) { return b.convert_to<std::int64_t>(); }

// Fractional basis coordinates and the integer part.
std::pair<std::pair<QuadExt, QuadExt>, Int2> split_cell(const PeriodicTiling& t, const Vec2& p) {
  auto [x, y] = basis_coords(t, p);
  BigInt fx = floor(x), fy = floor(y);
  return {{x - QuadExt(Rational(fx)), y - QuadExt(Rational(fy))}, {to_i64(fx), to_i64(fy)}};
}

}  // namespace

std::optional<Located> locate(const PeriodicTiling& t, const Vec2& p) {
  auto [frac, cell] = split_cell(t, p);
  Vec2 reduced = p - QuadExt(cell[0]) * t.u - QuadExt(cell[1]) * t.v;
  for (std::size_t s = 0; s < t.sites.size(); ++s)
    if (t.sites[s] == reduced) return Located{static_cast<int>(s), cell};
  return std::nullopt;
}

PeriodicTiling make_tiling(int id, std::string name, Vec2 u, Vec2 v, std::vector<Vec2> points,
                           std::pair<VertexType, VertexType> declared) {
  PeriodicTiling t;
  t.id = id;
  t.name = std::move(name);
  t.u = std::move(u);
  t.v = std::move(v);
  t.declared = std::move(declared);
  std::set<Vec2> seen;
  for (const Vec2& p : points) {
    auto [frac, cell] = split_cell(t, p);
    Vec2 r = p - QuadExt(cell[0]) * t.u - QuadExt(cell[1]) * t.v;
    if (seen.insert(r).second) t.sites.push_back(r);
  }
  // A unit vector has basis coordinates bounded by |u|+|v| over the cell area;
  // for the reduced bases used here a window of 3 is ample, and validation
  // catches any missed edge through the degree/type checks.
  const int w = 3;
  const QuadExt one(1);
  std::set<Edge> edges;
  for (std::size_t i = 0; i < t.sites.size(); ++i) {
    for (std::size_t j = 0; j < t.sites.size(); ++j) {
      for (std::int64_t sx = -w; sx <= w; ++sx) {
        for (std::int64_t sy = -w; sy <= w; ++sy) {
          Vec2 d = t.position(static_cast<int>(j), {sx, sy}) - t.sites[i];
          if (d.norm2() == one)
            edges.insert(canonical_edge({static_cast<int>(i), static_cast<int>(j), {sx, sy}}));
        }
      }
    }
  }
  t.edges.assign(edges.begin(), edges.end());
  return t;
}

// ---------------------------------------------------------------- rotation system

namespace {

int slot_of(const Vec2& d) {
  for (int k = 0; k < 12; ++k)
    if (unit_dir(k) == d) return k;
  return -1;
}

}  // namespace

RotationSystem rotation_system(const PeriodicTiling& t) {
  RotationSystem rs(t.sites.size());
  for (const Edge& e : t.edges) {
    Vec2 d = t.position(e.j, e.shift) - t.sites[static_cast<std::size_t>(e.i)];
    rs[static_cast<std::size_t>(e.i)].push_back({e.j, e.shift, d, slot_of(d)});
    Int2 back{-e.shift[0], -e.shift[1]};
    rs[static_cast<std::size_t>(e.j)].push_back({e.i, back, -d, slot_of(-d)});
  }
  for (std::size_t s = 0; s < rs.size(); ++s) {
    if (rs[s].empty()) throw std::runtime_error("isolated site " + std::to_string(s));
    std::sort(rs[s].begin(), rs[s].end(), [](const Germ& a, const Germ& b) {
      return angular_compare(a.dir, b.dir) < 0;
    });
  }
  return rs;
}

int reverse_germ(const RotationSystem& rs, int site, const Germ& g) {
  const auto& at = rs.at(static_cast<std::size_t>(g.target));
  Int2 back{-g.shift[0], -g.shift[1]};
  for (std::size_t k = 0; k < at.size(); ++k)
    if (at[k].target == site && at[k].shift == back && at[k].dir == -g.dir) return static_cast<int>(k);
  throw std::runtime_error("edge germ without reverse");
}

int left_face_size(const RotationSystem& rs, int site, int germ) {
  int s = site, k = germ;
  Int2 acc{0, 0};
  for (int steps = 1; steps <= 12; ++steps) {
    const Germ& g = rs[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
    acc = {acc[0] + g.shift[0], acc[1] + g.shift[1]};
    int r = reverse_germ(rs, s, g);
    const auto& next = rs[static_cast<std::size_t>(g.target)];
    int deg = static_cast<int>(next.size());
    s = g.target;
    k = (r + deg - 1) % deg;  // clockwise neighbour of the way back
    if (s == site && k == germ && acc == Int2{0, 0}) return steps;
  }
  throw std::runtime_error("face walk does not close");
}

VertexType classify_vertex_type(const PeriodicTiling&, const RotationSystem& rs, int site) {
  std::vector<int> cyc;
  const auto& g = rs.at(static_cast<std::size_t>(site));
  for (std::size_t k = 0; k < g.size(); ++k) cyc.push_back(left_face_size(rs, site, static_cast<int>(k)));
  return VertexType::from_cycle(std::move(cyc));
}

// ---------------------------------------------------------------- validation

namespace {

// Walks the left face of a germ and checks the turning is constant at 360/n.
bool regular_left_face(const RotationSystem& rs, int site, int germ, int& size) {
  size = left_face_size(rs, site, germ);
  if (size != 3 && size != 4 && size != 6 && size != 12) return false;
  const int turn = 12 / size;
  int s = site, k = germ;
  for (int step = 0; step < size; ++step) {
    const Germ& g = rs[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
    int r = reverse_germ(rs, s, g);
    const auto& next = rs[static_cast<std::size_t>(g.target)];
    int deg = static_cast<int>(next.size());
    int nk = (r + deg - 1) % deg;
    if (g.slot < 0 || next[static_cast<std::size_t>(nk)].slot != (g.slot + turn) % 12) return false;
    s = g.target;
    k = nk;
  }
  return true;
}

bool is_translation_symmetry(const PeriodicTiling& t, const std::set<Edge>& edges, const Vec2& tr) {
  std::vector<Located> img;
  for (const Vec2& p : t.sites) {
    auto l = locate(t, p + tr);
    if (!l) return false;
    img.push_back(*l);
  }
  for (const Edge& e : t.edges) {
    const Located& a = img[static_cast<std::size_t>(e.i)];
    const Located& b = img[static_cast<std::size_t>(e.j)];
    Int2 sh{b.shift[0] + e.shift[0] - a.shift[0], b.shift[1] + e.shift[1] - a.shift[1]};
    if (!edges.count(canonical_edge({a.site, b.site, sh}))) return false;
  }
  return true;
}

}  // namespace

std::vector<Located> inversion_image(const PeriodicTiling& t) {
  std::vector<Located> out;
  for (const Vec2& p : t.sites) {
    auto l = locate(t, -p);
    if (!l) throw std::runtime_error("inversion does not preserve sites");
    out.push_back(*l);
  }
  return out;
}

ValidationReport validate_tiling(const PeriodicTiling& t) {
  ValidationReport rep;
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    rep.failures.push_back(std::move(msg));
  };
  if (t.sites.empty()) {
    fail(rep.unit_edges, "no sites");
    return rep;
  }
  const QuadExt one(1);
  for (const Edge& e : t.edges) {
    if ((t.position(e.j, e.shift) - t.sites[static_cast<std::size_t>(e.i)]).norm2() != one) {
      fail(rep.unit_edges, "edge " + std::to_string(e.i) + "-" + std::to_string(e.j) + " is not unit length");
      break;
    }
  }
  std::set<VertexType> seen;
  try {
    RotationSystem rs = rotation_system(t);
    for (std::size_t s = 0; s < rs.size() && rep.regular_faces; ++s) {
      for (std::size_t k = 0; k < rs[s].size(); ++k) {
        int size = 0;
        if (!regular_left_face(rs, static_cast<int>(s), static_cast<int>(k), size)) {
          fail(rep.regular_faces, "irregular face at site " + std::to_string(s));
          break;
        }
      }
    }
    if (rep.regular_faces) {
      for (std::size_t s = 0; s < rs.size(); ++s) {
        VertexType vt = classify_vertex_type(t, rs, static_cast<int>(s));
        seen.insert(vt);
        if (vt != t.declared.first && vt != t.declared.second)
          fail(rep.types_realized, "site " + std::to_string(s) + " has undeclared type " + vt.str());
      }
      if (!seen.count(t.declared.first) || !seen.count(t.declared.second))
        fail(rep.types_realized, "a declared type does not occur");
    }
  } catch (const std::exception& ex) {
    fail(rep.regular_faces, ex.what());
  }
  std::set<Edge> edges(t.edges.begin(), t.edges.end());
  {
    bool ok = true;
    std::vector<Located> img;
    for (const Vec2& p : t.sites) {
      auto l = locate(t, -p);
      if (!l) {
        ok = false;
        break;
      }
      img.push_back(*l);
    }
    if (ok) {
      for (const Edge& e : t.edges) {
        const Located& a = img[static_cast<std::size_t>(e.i)];
        const Located& b = img[static_cast<std::size_t>(e.j)];
        Int2 sh{b.shift[0] - e.shift[0] - a.shift[0], b.shift[1] - e.shift[1] - a.shift[1]};
        if (!edges.count(canonical_edge({a.site, b.site, sh}))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) fail(rep.inversion_symmetric, "x -> -x is not a symmetry");
  }
  for (std::size_t j = 1; j < t.sites.size(); ++j) {
    if (is_translation_symmetry(t, edges, t.sites[j] - t.sites[0])) {
      fail(rep.translation_maximal, "site " + std::to_string(j) + " is a translate of site 0");
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------- orbits

int h_orbit_count(const PeriodicTiling& t) { return static_cast<int>(t.sites.size()); }

OrbitCount g_orbit_count(const PeriodicTiling& t) {
  auto img = inversion_image(t);
  OrbitCount oc;
  oc.orbit_of.assign(t.sites.size(), -1);
  for (std::size_t s = 0; s < t.sites.size(); ++s) {
    if (oc.orbit_of[s] >= 0) continue;
    oc.orbit_of[s] = oc.count;
    oc.orbit_of[static_cast<std::size_t>(img[s].site)] = oc.count;
    oc.representatives.push_back(static_cast<int>(s));
    ++oc.count;
  }
  return oc;
}

// ---------------------------------------------------------------- text format

void write_tiling(std::ostream& os, const PeriodicTiling& t) {
  auto rat = [&](const Rational& r) { os << ' ' << QuadExt(r).str(); };
  os << "tiling " << t.id << ' ' << (t.name.empty() ? "-" : t.name) << '\n';
  os << "types " << t.declared.first.str() << ' ' << t.declared.second.str() << '\n';
  os << "basis";
  for (const QuadExt* q : {&t.u.x, &t.u.y, &t.v.x, &t.v.y}) {
    rat(q->a());
    rat(q->b());
  }
  os << '\n';
  os << "sites " << t.sites.size() << '\n';
  for (const Vec2& p : t.sites) os << "site " << p.x.str() << ' ' << p.y.str() << '\n';
  os << "edges " << t.edges.size() << '\n';
  for (const Edge& e : t.edges) os << "edge " << e.i << ' ' << e.j << ' ' << e.shift[0] << ' ' << e.shift[1] << '\n';
}

PeriodicTiling read_tiling(std::istream& is) {
  auto expect = [&](const std::string& kw) {
    std::string w;
    if (!(is >> w) || w != kw) throw std::runtime_error("tiling text: expected '" + kw + "'");
  };
  PeriodicTiling t;
  expect("tiling");
  is >> t.id >> t.name;
  if (t.name == "-") t.name.clear();
  expect("types");
  std::string a, b;
  is >> a >> b;
  t.declared = {VertexType::parse(a), VertexType::parse(b)};
  expect("basis");
  std::vector<QuadExt> comps;
  for (int k = 0; k < 4; ++k) {
    std::string ra, rb;
    is >> ra >> rb;
    QuadExt qa = QuadExt::parse(ra), qb = QuadExt::parse(rb);
    if (!qa.b().is_zero() || !qb.b().is_zero()) throw std::runtime_error("tiling text: basis entries are rational");
    comps.emplace_back(qa.a(), qb.a());
  }
  t.u = {comps[0], comps[1]};
  t.v = {comps[2], comps[3]};
  std::size_t n = 0;
  expect("sites");
  is >> n;
  for (std::size_t k = 0; k < n; ++k) {
    expect("site");
    std::string x, y;
    is >> x >> y;
    t.sites.emplace_back(QuadExt::parse(x), QuadExt::parse(y));
  }
  expect("edges");
  is >> n;
  for (std::size_t k = 0; k < n; ++k) {
    expect("edge");
    Edge e;
    is >> e.i >> e.j >> e.shift[0] >> e.shift[1];
    t.edges.push_back(e);
  }
  if (!is) throw std::runtime_error("tiling text: truncated input");
  return t;
}

// ---------------------------------------------------------------- K_m family

bool km_in_s(int m, std::int64_t i) {
  std::int64_t k = i >= 0 ? i / m : -((-i + m - 1) / m);
  return (k % 2 + 2) % 2 == 1;
}

namespace {

// Diagonal in the unit square with lower-left corner (i, j):
// +1 for (i,j)-(i+1,j+1), -1 for (i,j+1)-(i+1,j), 0 for none.
int km_diagonal(int m, std::int64_t i, std::int64_t j) {
  bool even = (j % 2 + 2) % 2 == 0;
  if (even && km_in_s(m, i)) return 1;
  if (!even && !km_in_s(m, i)) return -1;
  return 0;
}

}  // namespace

KmPatch build_Km(int m, int radius) {
  if (m < 2) throw std::domain_error("K_m requires m >= 2");
  if (radius < 3 * m) throw std::domain_error("K_m patch radius must be at least 3m");
  KmPatch patch;
  patch.m = m;
  patch.radius = radius;
  std::map<Int2, std::vector<std::size_t>> incident;
  for (std::int64_t i = -radius; i < radius; ++i) {
    for (std::int64_t j = -radius; j < radius; ++j) {
      Int2 a{i, j}, b{i + 1, j}, c{i + 1, j + 1}, d{i, j + 1};
      int diag = km_diagonal(m, i, j);
      if (diag == 0) {
        patch.faces.push_back({a, b, c, d});
      } else if (diag > 0) {
        patch.faces.push_back({a, b, c});
        patch.faces.push_back({a, c, d});
      } else {
        patch.faces.push_back({a, b, d});
        patch.faces.push_back({b, c, d});
      }
    }
  }
  for (std::size_t f = 0; f < patch.faces.size(); ++f)
    for (const Int2& p : patch.faces[f]) incident[p].push_back(f);
  const std::int64_t inner = radius - 2;
  for (auto& [p, fs] : incident) {
    if (std::max(std::abs(p[0]), std::abs(p[1])) > inner) continue;
    // Order incident faces by the direction from p to each face's centroid;
    // scaling by 12 keeps everything integral.
    std::vector<std::pair<Vec2, int>> around;
    for (std::size_t f : fs) {
      const auto& face = patch.faces[f];
      std::int64_t n = static_cast<std::int64_t>(face.size());
      std::int64_t sx = 0, sy = 0;
      for (const Int2& q : face) {
        sx += q[0];
        sy += q[1];
      }
      Vec2 dir(QuadExt((12 / n) * sx - 12 * p[0]), QuadExt((12 / n) * sy - 12 * p[1]));
      around.emplace_back(dir, static_cast<int>(n));
    }
    std::sort(around.begin(), around.end(),
              [](const auto& l, const auto& r) { return angular_compare(l.first, r.first) < 0; });
    std::vector<int> cyc;
    for (auto& pr : around) cyc.push_back(pr.second);
    VertexType vt = VertexType::from_cycle(std::move(cyc));
    patch.interior_types[p] = vt;
    ++patch.census[vt];
  }
  // Longest horizontal run of undivided squares among interior squares.
  for (std::int64_t j = -inner; j < inner; ++j) {
    int run = 0;
    for (std::int64_t i = -inner; i < inner; ++i) {
      run = km_diagonal(m, i, j) == 0 ? run + 1 : 0;
      patch.column_run = std::max(patch.column_run, run);
    }
  }
  return patch;
}

}  // namespace tq
