#include "oracles.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <functional>
#include <numeric>
#include <set>

#ifndef DIMER_DATA_DIR
#error "DIMER_DATA_DIR must be defined"
#endif

namespace oracle {

std::string data_path(const std::string& name) { return std::string(DIMER_DATA_DIR) + "/" + name; }

TorusGraph fixture(const std::string& name) { return dimer::load_file(data_path(name + ".dimer")); }

std::vector<std::vector<int>> brute_matchings(const TorusGraph& g) {
  std::vector<std::vector<int>> out;
  const int ne = g.num_edges(), nb = g.num_black();
  if (nb != g.num_white()) return out;
  std::vector<int> pick(ne, 0);
  std::fill(pick.end() - nb, pick.end(), 1);
  do {
    std::vector<int> deg(g.num_vertices(), 0);
    std::vector<int> edges;
    for (int e = 0; e < ne; ++e) {
      if (!pick[e]) continue;
      edges.push_back(e);
      ++deg[g.edge(e).black];
      ++deg[g.edge(e).white];
    }
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; })) out.push_back(edges);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_hall(const TorusGraph& g, std::vector<int>* witness) {
  std::vector<int> blacks;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.color(v) == dimer::Color::Black) blacks.push_back(v);
  const int n = static_cast<int>(blacks.size());
  bool ok = n == g.num_white();
  int best = -1;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::set<int> nbrs;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1)
        for (int e : g.rotation(blacks[k])) nbrs.insert(g.edge(e).white);
    if (static_cast<int>(nbrs.size()) < __builtin_popcount(mask)) {
      ok = false;
      if (best < 0 || __builtin_popcount(mask) < __builtin_popcount(best)) best = mask;
    }
  }
  if (witness && best >= 0) {
    witness->clear();
    for (int k = 0; k < n; ++k)
      if (best >> k & 1) witness->push_back(blacks[k]);
  }
  return ok;
}

namespace {

bool in_triangle(Vec2 p, Vec2 a, Vec2 b, Vec2 c) {
  long d1 = dimer::cross(b - a, p - a), d2 = dimer::cross(c - b, p - b), d3 = dimer::cross(a - c, p - c);
  bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

bool on_segment(Vec2 p, Vec2 a, Vec2 b) {
  if (dimer::cross(b - a, p - a) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool brute_is_vertex(Vec2 p, const std::vector<Vec2>& pts) {
  std::vector<Vec2> others;
  for (Vec2 q : pts)
    if (q != p) others.push_back(q);
  std::sort(others.begin(), others.end());
  others.erase(std::unique(others.begin(), others.end()), others.end());
  const std::size_t n = others.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (on_segment(p, others[i], others[j])) return false;
      for (std::size_t k = j + 1; k < n; ++k)
        if (dimer::cross(others[j] - others[i], others[k] - others[i]) != 0 &&
            in_triangle(p, others[i], others[j], others[k]))
          return false;
    }
  return true;
}

long brute_twice_hull_area(const std::vector<Vec2>& pts) {
  std::vector<Vec2> v;
  for (Vec2 p : pts)
    if (brute_is_vertex(p, pts) && std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
  if (v.size() < 3) return 0;
  double cx = 0, cy = 0;
  for (Vec2 p : v) {
    cx += static_cast<double>(p.x);
    cy += static_cast<double>(p.y);
  }
  cx /= static_cast<double>(v.size());
  cy /= static_cast<double>(v.size());
  std::sort(v.begin(), v.end(), [&](Vec2 a, Vec2 b) {
    return std::atan2(static_cast<double>(a.y) - cy, static_cast<double>(a.x) - cx) <
           std::atan2(static_cast<double>(b.y) - cy, static_cast<double>(b.x) - cx);
  });
  long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += dimer::cross(v[i], v[(i + 1) % v.size()]);
  return std::labs(s);
}

std::vector<Vec2> strand_classes(const TorusGraph& g) {
  // State: (edge, leaving black?) ; visited per state.
  std::set<std::pair<int, bool>> seen;
  std::vector<Vec2> out;
  for (int e0 = 0; e0 < g.num_edges(); ++e0) {
    for (bool from_black : {true, false}) {
      if (seen.count({e0, from_black})) continue;
      Vec2 total;
      int e = e0;
      bool fb = from_black;
      while (seen.insert({e, fb}).second) {
        const auto& ed = g.edge(e);
        total += fb ? ed.offset : -ed.offset;
        const int v = fb ? ed.white : ed.black;
        const auto& rot = g.rotation(v);
        const int k = static_cast<int>(rot.size());
        const int at = static_cast<int>(std::find(rot.begin(), rot.end(), e) - rot.begin());
        // Left turn at white (clockwise neighbour), right turn at black (counterclockwise).
        // Arrows keep black on their left, so this walks the strand in arrow order.
        e = fb ? rot[(at + k - 1) % k] : rot[(at + 1) % k];
        fb = !fb;
      }
      out.push_back(total);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> paths_of_degree(const dimer::Quiver& q, const std::vector<long>& w, int i,
                                              int j, long degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, long)> dfs = [&](int v, long left) {
    if (left == 0) {
      if (v == j) out.push_back(cur);
      return;
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.tail(a) != v || w[a] > left) continue;
      cur.push_back(a);
      dfs(q.head(a), left - w[a]);
      cur.pop_back();
    }
  };
  dfs(i, degree);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> fterm_components(const dimer::Quiver& q, const std::vector<std::vector<int>>& paths) {
  // Remainder of each face boundary after each of its arrows.
  std::vector<std::vector<int>> rest_black(q.num_arrows()), rest_white(q.num_arrows());
  for (const auto& f : q.faces) {
    const int n = static_cast<int>(f.boundary.size());
    for (int k = 0; k < n; ++k) {
      std::vector<int> rest;
      for (int t = 1; t < n; ++t) rest.push_back(f.boundary[(k + t) % n]);
      (f.color == dimer::Color::Black ? rest_black : rest_white)[f.boundary[k]] = rest;
    }
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t k = 0; k < paths.size(); ++k) index[paths[k]] = static_cast<int>(k);
  std::vector<int> parent(paths.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& p = paths[k];
    for (int a = 0; a < q.num_arrows(); ++a) {
      for (int side = 0; side < 2; ++side) {
        const auto& from = side ? rest_white[a] : rest_black[a];
        const auto& to = side ? rest_black[a] : rest_white[a];
        if (from.empty() || from.size() > p.size()) continue;
        for (std::size_t s = 0; s + from.size() <= p.size(); ++s) {
          if (!std::equal(from.begin(), from.end(), p.begin() + s)) continue;
          std::vector<int> np(p.begin(), p.begin() + s);
          np.insert(np.end(), to.begin(), to.end());
          np.insert(np.end(), p.begin() + s + from.size(), p.end());
          auto it = index.find(np);
          if (it != index.end()) parent[find(static_cast<int>(k))] = find(it->second);
        }
      }
    }
  }
  std::vector<int> comp(paths.size());
  for (std::size_t k = 0; k < paths.size(); ++k) comp[k] = find(static_cast<int>(k));
  return comp;
}

long rational_rank(const std::vector<std::vector<long>>& rows, int cols) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& r : rows) {
    std::vector<mpq_class> row;
    for (int c = 0; c < cols; ++c) row.emplace_back(r[c]);
    m.push_back(row);
  }
  long rank = 0;
  for (int c = 0; c < cols && rank < static_cast<long>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
