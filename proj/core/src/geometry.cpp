#include "dimer/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace dimer {

long ext_gcd(long a, long b, long& s, long& t) {
  long old_r = a, r = b, old_s = 1, cs = 0, old_t = 0, ct = 1;
  while (r != 0) {
    long q = old_r / r;
    long tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * cs; old_s = cs; cs = tmp;
    tmp = old_t - q * ct; old_t = ct; ct = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  s = old_s;
  t = old_t;
  return old_r;
}

long twice_area(const std::vector<Vec2>& poly) {
  long a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
  return a;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;
  // Jarvis march from the lowest-leftmost point; on collinear candidates keep
  // the farthest so only strictly extremal points are emitted.
  auto start = *std::min_element(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  std::vector<Vec2> hull;
  Vec2 cur = start;
  do {
    hull.push_back(cur);
    Vec2 cand = pts[0] == cur ? pts[1] : pts[0];
    for (Vec2 p : pts) {
      if (p == cur) continue;
      long c = cross(cand - cur, p - cur);
      if (c < 0) {
        cand = p;
      } else if (c == 0) {
        Vec2 dc = cand - cur, dp = p - cur;
        if (dot(dp, dp) > dot(dc, dc)) cand = p;
      }
    }
    cur = cand;
    if (hull.size() > pts.size()) break;
  } while (cur != start);
  // A segment comes back as its two endpoints.
  if (hull.size() == 2 || twice_area(hull) == 0) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    return {*lo, *hi};
  }
  return hull;
}

std::vector<Vec2> polygon_from_edges(std::vector<Vec2> edges) {
  std::stable_sort(edges.begin(), edges.end(), angle_less);
  std::vector<Vec2> poly;
  Vec2 p{0, 0};
  for (Vec2 e : edges) {
    poly.push_back(p);
    p += e;
  }
  return poly;
}

std::string to_string(Vec2 v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, Vec2 v) { return os << '(' << v.x << ',' << v.y << ')'; }

}  // namespace dimer
