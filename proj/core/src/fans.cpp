#include "dimer/fans.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dimer/errors.hpp"

namespace dimer {

int Fan2D::ray_index(Vec2 r) const {
  auto it = std::find(rays.begin(), rays.end(), r);
  return it == rays.end() ? -1 : static_cast<int>(it - rays.begin());
}

namespace {

std::vector<Vec2> sorted_distinct(std::vector<Vec2> v) {
  std::sort(v.begin(), v.end(), angle_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// v expressed in a frame whose x axis is a; preserves angles.
Vec2 relative(Vec2 a, Vec2 v) { return {dot(a, v), cross(a, v)}; }

}  // namespace

LocalFan local_fan(const Quiver& q, const ZigZagSet& z, int face) {
  LocalFan lf;
  lf.face = face;
  std::vector<Vec2> cls;
  const Path& bd = q.faces[face].boundary;
  for (int a : bd) {
    cls.push_back(z.paths[z.zig_path[a]].cls);
    cls.push_back(z.paths[z.zag_path[a]].cls);
  }
  lf.fan.rays = sorted_distinct(cls);
  const int n = lf.fan.num_cones();
  lf.cone_arrow.assign(n, -1);
  for (int a : bd) {
    int from = lf.fan.ray_index(z.paths[z.zag_path[a]].cls);
    int to = lf.fan.ray_index(z.paths[z.zig_path[a]].cls);
    if (n < 3 || (from + 1) % n != to)
      throw std::logic_error("local fan: arrow " + std::to_string(a) + " at face " +
                             std::to_string(face) + " does not tag a cone");
    if (lf.cone_arrow[from] != -1)
      throw std::logic_error("local fan: cone tagged twice at face " + std::to_string(face));
    lf.cone_arrow[from] = a;
  }
  for (int c = 0; c < n; ++c)
    if (lf.cone_arrow[c] == -1) throw std::logic_error("local fan: untagged cone");
  return lf;
}

Fan2D global_fan(const ZigZagSet& z) {
  Fan2D f;
  std::vector<Vec2> cls;
  for (const auto& p : z.paths) cls.push_back(p.cls);
  f.rays = sorted_distinct(cls);
  return f;
}

bool cone_contains(Vec2 a, Vec2 b, Vec2 d) {
  if (d == a) return true;
  Vec2 rb = relative(a, b), rd = relative(a, d);
  if (rb.y == 0 && rb.x > 0) return d == a || (relative(a, d).y == 0 && relative(a, d).x > 0);
  return !angle_less(rb, rd);
}

Vec2 interior_direction(Vec2 a, Vec2 b) {
  long c = cross(a, b);
  if (c > 0) return a + b;
  if (c == 0) return {-a.y, a.x};
  return -(a + b);
}

std::vector<int> representatives(const ZigZagSet& z, Vec2 ray) {
  std::vector<int> r;
  for (int i = 0; i < static_cast<int>(z.paths.size()); ++i)
    if (z.paths[i].cls == ray) r.push_back(i);
  return r;
}

std::vector<int> zig_vector(const Quiver& q, const ZigZagPath& p) {
  std::vector<int> v(q.num_arrows(), 0);
  for (int i = 0; i < p.period(); i += 2) ++v[p.arrows[i]];
  return v;
}

std::vector<int> zag_vector(const Quiver& q, const ZigZagPath& p) {
  std::vector<int> v(q.num_arrows(), 0);
  for (int i = 1; i < p.period(); i += 2) ++v[p.arrows[i]];
  return v;
}

std::vector<int> support_of(const std::vector<int>& indicator) {
  std::vector<int> s;
  for (int a = 0; a < static_cast<int>(indicator.size()); ++a)
    if (indicator[a]) s.push_back(a);
  return s;
}

ExtremalMatching extremal_matching(const TorusGraph& g, const Quiver& q, const ZigZagSet& z,
                                   int cone, const std::vector<int>& pi0) {
  Fan2D gf = global_fan(z);
  ExtremalMatching em;
  em.ray_from = gf.cone_start(cone);
  em.ray_to = gf.cone_end(cone);
  const Vec2 w = interior_direction(em.ray_from, em.ray_to);
  em.face_choice.assign(q.num_faces(), -1);
  std::vector<int> ind(q.num_arrows(), 0);
  for (int f = 0; f < q.num_faces(); ++f) {
    LocalFan lf = local_fan(q, z, f);
    for (int c = 0; c < lf.fan.num_cones(); ++c) {
      if (cone_contains(lf.fan.cone_start(c), lf.fan.cone_end(c), w)) {
        em.face_choice[f] = lf.cone_arrow[c];
        break;
      }
    }
    if (em.face_choice[f] < 0) throw std::logic_error("extremal matching: no local cone contains sigma");
    if (q.faces[f].color == Color::Black) ind[em.face_choice[f]] += 1;
  }
  for (int f = 0; f < q.num_faces(); ++f) {
    int hits = 0;
    for (int a : q.faces[f].boundary) hits += ind[a];
    if (hits != 1) throw std::logic_error("extremal matching: coboundary is not 1");
    if (!ind[em.face_choice[f]]) throw std::logic_error("extremal matching: white choice disagrees");
  }
  em.matching.edges = support_of(ind);
  if (!is_perfect_matching(g, em.matching.edges))
    throw std::logic_error("extremal matching is not a perfect matching");
  em.matching.cls = pm_class(em.matching.edges, pi0, q);
  return em;
}

std::vector<long> boundary_system(const Quiver& q, const ZigZagSet& z, Vec2 ray) {
  std::vector<long> s(q.num_arrows(), 0);
  auto reps = representatives(z, ray);
  for (int r : reps) {
    BoundaryFlows bf = boundary_flows(q, z.paths[r]);
    for (int a : bf.black) ++s[a];
    for (int a : bf.white) ++s[a];
  }
  if (q.chain_offset(s) != ray * (-2 * static_cast<long>(reps.size())))
    throw std::logic_error("boundary system has the wrong class");
  return s;
}

long pairing(const std::vector<int>& pi, const std::vector<long>& chain) {
  long s = 0;
  for (std::size_t a = 0; a < chain.size(); ++a) s += pi[a] * chain[a];
  return s;
}

std::vector<int> resonate(const TorusGraph& g, const Quiver& q, const std::vector<int>& pi,
                          const ZigZagPath& eta, Resonance dir) {
  auto zig = zig_vector(q, eta), zag = zag_vector(q, eta);
  const auto& take = dir == Resonance::ZigToZag ? zig : zag;
  const auto& give = dir == Resonance::ZigToZag ? zag : zig;
  std::vector<int> out(pi);
  for (int a = 0; a < q.num_arrows(); ++a) {
    out[a] -= take[a];
    if (out[a] < 0) throw PreconditionError("cannot resonate");
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    out[a] += give[a];
    if (out[a] > 1) throw PreconditionError("cannot resonate");
  }
  if (!is_perfect_matching(g, support_of(out))) throw PreconditionError("cannot resonate");
  return out;
}

std::vector<PerfectMatching> external_matchings(const TorusGraph& g, const Quiver& q,
                                                const ZigZagSet& z, Vec2 ray,
                                                const std::vector<int>& pi0) {
  Fan2D gf = global_fan(z);
  int i = gf.ray_index(ray);
  if (i < 0) throw PreconditionError("not a ray of the global fan");
  auto plus = extremal_matching(g, q, z, i, pi0);
  auto reps = representatives(z, ray);
  const int r = static_cast<int>(reps.size());
  std::vector<PerfectMatching> out;
  for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
    std::vector<int> pi = plus.matching.indicator(q.num_arrows());
    for (int k = 0; k < r; ++k)
      if (mask >> k & 1) pi = resonate(g, q, pi, z.paths[reps[k]], Resonance::ZagToZig);
    PerfectMatching m;
    m.edges = support_of(pi);
    m.cls = pm_class(m.edges, pi0, q);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace dimer
