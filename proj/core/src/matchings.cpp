#include "dimer/matchings.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

#include "dimer/errors.hpp"

namespace dimer {

std::vector<int> PerfectMatching::indicator(int num_edges) const {
  std::vector<int> x(num_edges, 0);
  for (int e : edges) x[e] = 1;
  return x;
}

bool is_perfect_matching(const TorusGraph& g, const std::vector<int>& edges) {
  std::vector<int> cover(g.num_vertices(), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    ++cover[g.edge(e).black];
    ++cover[g.edge(e).white];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

Vec2 pm_class(const std::vector<int>& pi, const std::vector<int>& pi0, const Quiver& q) {
  Vec2 c;
  for (int e : pi) c += Vec2{q.gamma_x[e], q.gamma_y[e]};
  for (int e : pi0) c -= Vec2{q.gamma_x[e], q.gamma_y[e]};
  return c;
}

std::vector<PerfectMatching> enumerate_matchings(const TorusGraph& g, const Quiver& q) {
  std::vector<PerfectMatching> out;
  if (g.num_black() != g.num_white()) return out;
  std::vector<int> blacks;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.color(v) == Color::Black) blacks.push_back(v);
  std::vector<char> white_used(g.num_vertices(), 0);
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == blacks.size()) {
      PerfectMatching m;
      m.edges = chosen;
      std::sort(m.edges.begin(), m.edges.end());
      out.push_back(std::move(m));
      return;
    }
    for (int e : g.rotation(blacks[i])) {
      int w = g.edge(e).white;
      if (white_used[w]) continue;
      white_used[w] = 1;
      chosen.push_back(e);
      rec(i + 1);
      chosen.pop_back();
      white_used[w] = 0;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.edges < b.edges; });
  for (auto& m : out) m.cls = pm_class(m.edges, out.front().edges, q);
  return out;
}

std::vector<PerfectMatching> enumerate_matchings(const TorusGraph& g) {
  return enumerate_matchings(g, dualize(g));
}

int max_matching_size(const TorusGraph& g, const std::vector<char>& edge_allowed,
                      const std::vector<char>& vertex_removed, std::vector<int>* match_edges) {
  const int nv = g.num_vertices();
  std::vector<int> mate_edge(nv, -1);  // for white vertices: matched edge
  std::vector<int> black_edge(nv, -1);
  std::vector<char> visited(nv, 0);
  std::function<bool(int)> augment = [&](int b) {
    for (int e : g.rotation(b)) {
      if (!edge_allowed[e]) continue;
      int w = g.edge(e).white;
      if (vertex_removed[w] || visited[w]) continue;
      visited[w] = 1;
      if (mate_edge[w] == -1 || augment(g.edge(mate_edge[w]).black)) {
        mate_edge[w] = e;
        black_edge[b] = e;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int b = 0; b < nv; ++b) {
    if (g.color(b) != Color::Black || vertex_removed[b]) continue;
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(b)) ++size;
  }
  if (match_edges) {
    match_edges->clear();
    for (int w = 0; w < nv; ++w)
      if (mate_edge[w] != -1) match_edges->push_back(mate_edge[w]);
    std::sort(match_edges->begin(), match_edges->end());
  }
  return size;
}

namespace {

std::vector<int> neighbourhood(const TorusGraph& g, const std::vector<int>& blacks) {
  std::set<int> n;
  for (int b : blacks)
    for (int e : g.rotation(b)) n.insert(g.edge(e).white);
  return {n.begin(), n.end()};
}

}  // namespace

HallVerdict hall_check(const TorusGraph& g) {
  HallVerdict v;
  v.blacks = g.num_black();
  v.whites = g.num_white();
  if (v.blacks != v.whites) {
    v.kind = HallVerdict::Kind::Imbalance;
    return v;
  }
  const int nv = g.num_vertices();
  std::vector<char> all(g.num_edges(), 1), none(nv, 0);
  std::vector<int> matched;
  if (max_matching_size(g, all, none, &matched) == v.blacks) return v;

  std::vector<int> partner(nv, -1);  // white -> black along the matching
  std::vector<char> black_matched(nv, 0);
  for (int e : matched) {
    partner[g.edge(e).white] = g.edge(e).black;
    black_matched[g.edge(e).black] = 1;
  }
  int start = -1;
  for (int b = 0; b < nv && start < 0; ++b)
    if (g.color(b) == Color::Black && !black_matched[b]) start = b;
  // Alternating search: every reached white is matched, so the reached blacks
  // have exactly one more element than their neighbourhood.
  std::vector<char> reached(nv, 0);
  std::queue<int> bfs;
  bfs.push(start);
  reached[start] = 1;
  while (!bfs.empty()) {
    int b = bfs.front();
    bfs.pop();
    for (int e : g.rotation(b)) {
      int w = g.edge(e).white;
      if (reached[w]) continue;
      reached[w] = 1;
      if (partner[w] >= 0 && !reached[partner[w]]) {
        reached[partner[w]] = 1;
        bfs.push(partner[w]);
      }
    }
  }
  std::vector<int> subset;
  for (int b = 0; b < nv; ++b)
    if (g.color(b) == Color::Black && reached[b]) subset.push_back(b);
  // Shrink to an inclusion-minimal deficient set.
  for (std::size_t i = 0; i < subset.size();) {
    auto trial = subset;
    trial.erase(trial.begin() + i);
    if (!trial.empty() && neighbourhood(g, trial).size() < trial.size()) subset = trial;
    else ++i;
  }
  v.kind = HallVerdict::Kind::Deficient;
  v.subset = subset;
  v.neighbours = neighbourhood(g, subset);
  return v;
}

NondegVerdict nondegeneracy_check(const TorusGraph& g) {
  NondegVerdict v;
  const int ne = g.num_edges(), nv = g.num_vertices();
  v.edge_ok.assign(ne, false);
  const int need = g.num_black();
  if (g.num_black() == g.num_white()) {
    std::vector<char> all(ne, 1), none(nv, 0);
    v.has_matching = max_matching_size(g, all, none) == need;
    if (v.has_matching) {
      for (int e = 0; e < ne; ++e) {
        std::vector<char> removed(nv, 0);
        removed[g.edge(e).black] = removed[g.edge(e).white] = 1;
        v.edge_ok[e] = max_matching_size(g, all, removed) == need - 1;
        std::vector<char> without(ne, 1);
        without[e] = 0;
        if (max_matching_size(g, without, none) < need) v.forced_edges.push_back(e);
      }
    }
  }
  for (int e = 0; e < ne; ++e)
    if (!v.edge_ok[e]) v.unmatched_edges.push_back(e);
  v.pass = v.unmatched_edges.empty();
  return v;
}

std::optional<bool> strong_marriage_check(const TorusGraph& g, int max_blacks) {
  if (g.num_black() != g.num_white()) return false;
  std::vector<int> blacks;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.color(v) == Color::Black) blacks.push_back(v);
  const int n = static_cast<int>(blacks.size());
  if (n > max_blacks) return std::nullopt;
  for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(blacks[i]);
    if (neighbourhood(g, sub).size() < sub.size() + 1) return false;
  }
  // n == 1: the single black vertex must still see a white one (always true here).
  return true;
}

bool PMPolygon::is_vertex(Vec2 p) const {
  return std::find(vertices.begin(), vertices.end(), p) != vertices.end();
}

bool PMPolygon::is_external(Vec2 p) const {
  const std::size_t n = vertices.size();
  if (n == 0) return false;
  if (n == 1) return p == vertices[0];
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = vertices[i], b = vertices[(i + 1) % n];
    if (cross(b - a, p - a) == 0 && dot(p - a, p - b) <= 0) return true;
    if (n == 2) break;
  }
  return false;
}

long PMPolygon::twice_area() const { return dimer::twice_area(vertices); }

PMPolygon polygon(const std::vector<PerfectMatching>& matchings) {
  if (matchings.empty()) throw PreconditionError("no perfect matchings");
  PMPolygon p;
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    ++p.points[matchings[i].cls];
    p.by_point[matchings[i].cls].push_back(static_cast<int>(i));
    pts.push_back(matchings[i].cls);
  }
  p.vertices = convex_hull(pts);
  return p;
}

namespace {

// Integer matrix [[a,b],[c,d]].
struct Mat2 {
  long a, b, c, d;
  Vec2 operator()(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

// Unimodular map sending the primitive vector e to (1,0).
Mat2 to_x_axis(Vec2 e) {
  long s, t;
  ext_gcd(e.x, e.y, s, t);
  return {s, t, -e.y, e.x};
}

WeightedPoints place(const std::map<Vec2, int>& pts, Vec2 origin, const Mat2& m) {
  WeightedPoints out;
  for (auto& [p, k] : pts) out.push_back({m(p - origin), k});
  std::sort(out.begin(), out.end());
  return out;
}

Vec2 primitive(Vec2 v) {
  long g = gcd(v);
  return {v.x / g, v.y / g};
}

}  // namespace

WeightedPoints normal_form(const std::map<Vec2, int>& points) {
  if (points.empty()) return {};
  std::vector<Vec2> pts;
  for (auto& [p, k] : points) pts.push_back(p);
  auto hull = convex_hull(pts);
  std::optional<WeightedPoints> best;
  auto consider = [&](WeightedPoints cand) {
    if (!best || cand < *best) best = std::move(cand);
  };
  if (hull.size() == 1) {
    consider(place(points, hull[0], {1, 0, 0, 1}));
  } else if (hull.size() == 2) {
    for (int i = 0; i < 2; ++i) {
      Vec2 o = hull[i], e = primitive(hull[1 - i] - hull[i]);
      consider(place(points, o, to_x_axis(e)));
    }
  } else {
    const std::size_t n = hull.size();
    for (std::size_t i = 0; i < n; ++i) {
      Vec2 v = hull[i];
      Vec2 nb[2] = {hull[(i + 1) % n], hull[(i + n - 1) % n]};
      for (int side = 0; side < 2; ++side) {
        Vec2 e = primitive(nb[side] - v);
        Mat2 m = to_x_axis(e);
        Vec2 w = m(nb[1 - side] - v);
        if (w.y < 0) {
          m = Mat2{1, 0, 0, -1} * m;
          w = Vec2{w.x, -w.y};
        }
        long k = -floor_div(w.x, w.y);  // shear so that 0 <= w.x < w.y
        m = Mat2{1, k, 0, 1} * m;
        consider(place(points, v, m));
      }
    }
  }
  return *best;
}

std::vector<PerfectMatching> bvn_decompose(const TorusGraph& g, std::vector<long> v) {
  const int ne = g.num_edges(), nv = g.num_vertices();
  if (static_cast<int>(v.size()) != ne) throw PreconditionError("bvn: vector size mismatch");
  for (long x : v)
    if (x < 0) throw PreconditionError("bvn: negative entry");
  std::vector<long> sum(nv, 0);
  for (int e = 0; e < ne; ++e) {
    sum[g.edge(e).black] += v[e];
    sum[g.edge(e).white] += v[e];
  }
  const long k = sum[0];
  for (long s : sum)
    if (s != k) throw PreconditionError("bvn: vertex sums are not constant");
  std::vector<PerfectMatching> out;
  std::vector<char> none(nv, 0);
  for (long r = 0; r < k; ++r) {
    std::vector<char> support(ne, 0);
    for (int e = 0; e < ne; ++e) support[e] = v[e] > 0;
    PerfectMatching m;
    if (max_matching_size(g, support, none, &m.edges) != g.num_black())
      throw std::logic_error("bvn: support graph has no perfect matching");
    for (int e : m.edges) --v[e];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace dimer
