#include "dimer/zigzag.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dimer/errors.hpp"

namespace dimer {

ZigZagSet zigzag_paths(const Quiver& q) {
  const int n = q.num_arrows();
  ZigZagSet z;
  z.zig_path.assign(n, -1);
  z.zig_index.assign(n, -1);
  z.zag_path.assign(n, -1);
  z.zag_index.assign(n, -1);
  for (int seed = 0; seed < n; ++seed) {
    if (z.zig_path[seed] != -1) continue;
    const int id = static_cast<int>(z.paths.size());
    ZigZagPath p;
    int a = seed;
    bool zig = true;
    Vec2 c;
    // The seed is the least zig of its path, so this start is canonical.
    while (true) {
      auto& slot = zig ? z.zig_path[a] : z.zag_path[a];
      if (slot != -1) break;
      slot = id;
      (zig ? z.zig_index[a] : z.zag_index[a]) = p.period();
      p.arrows.push_back(a);
      p.cum.push_back(c);
      c += q.offset(a);
      a = zig ? q.next_in_black(a) : q.next_in_white(a);
      zig = !zig;
    }
    if (a != seed || !zig || p.period() % 2 != 0)
      throw std::logic_error("zig-zag path did not close at its seed");
    p.cls = c;
    z.paths.push_back(std::move(p));
  }
  return z;
}

std::vector<Flow> as_flows(const ZigZagSet& z) {
  std::vector<Flow> f;
  for (const auto& p : z.paths) f.push_back({p.arrows, p.cum, p.cls});
  return f;
}

Sublattice::Sublattice(Vec2 u, Vec2 v) {
  if (cross(u, v) == 0) throw std::invalid_argument("sublattice: dependent generators");
  // Euclid on the x coordinate.
  while (v.x != 0) {
    long k = u.x / v.x;
    Vec2 t = u - v * k;
    u = v;
    v = t;
  }
  if (u.x < 0) u = -u;
  p_ = u.x;
  r_ = std::labs(v.y);
  q_ = floor_mod(u.y, r_);
}

Vec2 Sublattice::reduce(Vec2 w) const {
  long k = floor_div(w.x, p_);
  w -= Vec2{p_, q_} * k;
  w.y = floor_mod(w.y, r_);
  return w;
}

std::string GeomFailure::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::SelfIntersection:
      os << "SelfIntersection path=" << path << " i=" << i << " j=" << j;
      break;
    case Kind::NonPrimitiveClass:
      os << "NonPrimitiveClass path=" << path;
      break;
    case Kind::ZeroClass:
      os << "ZeroClass path=" << path;
      break;
    case Kind::ParallelShare:
      os << "ParallelShare paths=" << path << "," << other << " arrow=" << item;
      break;
    case Kind::CosetCount:
      os << "CosetCount paths=" << path << "," << other << " coset=" << coset << " count=" << count;
      break;
  }
  return os.str();
}

namespace {

GeomFailure failure(GeomFailure::Kind kind, int path, int other = -1) {
  GeomFailure g;
  g.kind = kind;
  g.path = path;
  g.other = other;
  return g;
}

}  // namespace

GeomReport check_flows(const std::vector<Flow>& flows) {
  GeomReport rep;
  const int n = static_cast<int>(flows.size());
  auto fail = [&](GeomFailure f) { rep.failures.push_back(f); };
  for (int k = 0; k < n; ++k) {
    const Flow& f = flows[k];
    if (f.cls.is_zero()) fail(failure(GeomFailure::Kind::ZeroClass, k));
    else if (!is_primitive(f.cls)) fail(failure(GeomFailure::Kind::NonPrimitiveClass, k));
    std::map<int, int> first;
    for (int i = 0; i < static_cast<int>(f.items.size()); ++i) {
      auto [it, fresh] = first.emplace(f.items[i], i);
      if (!fresh) {
        GeomFailure g = failure(GeomFailure::Kind::SelfIntersection, k);
        g.i = it->second;
        g.j = i;
        fail(g);
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      const Flow& a = flows[k];
      const Flow& b = flows[l];
      std::vector<std::pair<int, int>> shared;
      for (int i = 0; i < static_cast<int>(a.items.size()); ++i)
        for (int j = 0; j < static_cast<int>(b.items.size()); ++j)
          if (a.items[i] == b.items[j]) shared.push_back({i, j});
      if (a.cls.is_zero() || b.cls.is_zero()) continue;
      if (cross(a.cls, b.cls) == 0) {
        for (auto [i, j] : shared) {
          GeomFailure g = failure(GeomFailure::Kind::ParallelShare, k, l);
          g.item = a.items[i];
          fail(g);
        }
        // Two fixed lifts meet once per shared pair landing in the same coset
        // of Zu; more than one means the same two lifts cross repeatedly.
        if (is_primitive(a.cls)) {
          long s, t;
          ext_gcd(a.cls.x, a.cls.y, s, t);
          const Vec2 unit{-t, s};  // cross(u, unit) = 1
          std::map<long, int> hits;
          for (auto [i, j] : shared) ++hits[cross(a.cls, a.cum[i] - b.cum[j])];
          for (auto [c, cnt] : hits) {
            if (cnt < 2) continue;
            GeomFailure g = failure(GeomFailure::Kind::CosetCount, k, l);
            g.coset = unit * c;
            g.count = cnt;
            fail(g);
          }
        }
        continue;
      }
      Sublattice lat(a.cls, b.cls);
      std::map<Vec2, int> hits;
      for (auto [i, j] : shared) ++hits[lat.reduce(a.cum[i] - b.cum[j])];
      for (auto [c, cnt] : hits) {
        if (cnt > 1) {
          GeomFailure g = failure(GeomFailure::Kind::CosetCount, k, l);
          g.coset = c;
          g.count = cnt;
          fail(g);
        }
      }
      if (static_cast<long>(hits.size()) < lat.index()) {
        // Report the first coset that no shared item reaches.
        Vec2 missing;
        bool found = false;
        for (long x = 0; x < lat.index() && !found; ++x)
          for (long y = 0; y < lat.index() && !found; ++y) {
            Vec2 c = lat.reduce({x, y});
            if (!hits.count(c)) { missing = c; found = true; }
          }
        GeomFailure g = failure(GeomFailure::Kind::CosetCount, k, l);
        g.coset = missing;
        g.count = 0;
        fail(g);
      }
    }
  }
  rep.verdict = rep.failures.empty();
  return rep;
}

GeomReport geometric_check(const ZigZagSet& z) { return check_flows(as_flows(z)); }

OrderReport properly_ordered(const Quiver& q, const ZigZagSet& z) {
  OrderReport rep;
  std::vector<Vec2> classes;
  for (const auto& p : z.paths) {
    if (p.cls.is_zero()) throw PreconditionError("zig-zag path with zero class");
    classes.push_back(p.cls);
  }
  rep.normal_polygon = polygon_from_edges(classes);
  rep.twice_area = twice_area(rep.normal_polygon);
  rep.quiver_vertices = q.num_vertices;
  rep.area_ok = rep.twice_area == rep.quiver_vertices;
  for (int f = 0; f < q.num_faces(); ++f) {
    const auto& face = q.faces[f];
    std::vector<Vec2> seq;
    for (int a : face.boundary)
      seq.push_back(face.color == Color::Black ? z.paths[z.zig_path[a]].cls
                                               : z.paths[z.zag_path[a]].cls);
    if (face.color == Color::White) std::reverse(seq.begin(), seq.end());
    const std::size_t k = seq.size();
    int descents = 0;
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      Vec2 u = seq[i], v = seq[(i + 1) % k];
      if (cross(u, v) <= 0) ok = false;
      if (angle_less(v, u)) ++descents;
    }
    if (!ok || descents != 1) rep.bad_faces.push_back(f);
  }
  rep.ok = rep.area_ok && rep.bad_faces.empty();
  return rep;
}

BoundaryFlows boundary_flows(const Quiver& q, const ZigZagPath& eta) {
  const int L = eta.period();
  const int N = L / 2;
  auto complement = [&](int face, int pos) {
    const Path& b = q.faces[face].boundary;
    const int k = static_cast<int>(b.size());
    Path r;
    for (int i = 2; i < k; ++i) r.push_back(b[(pos + i) % k]);
    return r;
  };
  BoundaryFlows out;
  for (int n = N - 1; n >= 0; --n) {
    int zig = eta.arrows[2 * n];
    Path c = complement(q.black_face[zig], q.black_pos[zig]);
    out.black.insert(out.black.end(), c.begin(), c.end());
    int zag = eta.arrows[(2 * n + L - 1) % L];
    Path w = complement(q.white_face[zag], q.white_pos[zag]);
    out.white.insert(out.white.end(), w.begin(), w.end());
  }
  for (const Path* p : {&out.black, &out.white}) {
    if (p->empty()) {
      if (!eta.cls.is_zero()) throw std::logic_error("empty boundary flow for a nonzero class");
      continue;
    }
    if (!q.composable(*p) || q.head(p->back()) != q.tail(p->front()))
      throw std::logic_error("boundary flow is not a closed path");
    if (q.path_offset(*p) != -eta.cls) throw std::logic_error("boundary flow class is not -u");
  }
  return out;
}

}  // namespace dimer
