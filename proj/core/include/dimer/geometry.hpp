#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace dimer {

// Integer vector in H1(T^2; Z) = Z^2.
struct Vec2 {
  long x = 0;
  long y = 0;

  constexpr Vec2() = default;
  constexpr Vec2(long x_, long y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(long k) const { return {x * k, y * k}; }
  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr bool operator==(const Vec2&) const = default;
  constexpr auto operator<=>(const Vec2&) const = default;

  constexpr bool is_zero() const { return x == 0 && y == 0; }
};

constexpr long cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr long dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

inline long gcd(Vec2 v) { return std::gcd(v.x, v.y); }
inline bool is_primitive(Vec2 v) { return gcd(v) == 1; }

// Floor division for possibly negative numerators.
constexpr long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr long floor_mod(long a, long b) { return a - floor_div(a, b) * b; }

// Extended gcd: returns g = gcd(a,b) >= 0 and s,t with s*a + t*b = g.
long ext_gcd(long a, long b, long& s, long& t);

// Angular order starting at the positive x axis, counterclockwise.
// Exact; no floating point.
inline int half_plane(Vec2 v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }
inline bool angle_less(Vec2 a, Vec2 b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Twice the signed area of a closed polygon.
long twice_area(const std::vector<Vec2>& poly);

// Convex hull by gift wrapping, counterclockwise, strictly extremal points only.
// A single point or a segment is returned as 1 or 2 points.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

// Polygon whose edges are the given vectors sorted by angle (vectors sum to 0).
std::vector<Vec2> polygon_from_edges(std::vector<Vec2> edges);

std::string to_string(Vec2 v);
std::ostream& operator<<(std::ostream& os, Vec2 v);

struct Vec2Hash {
  std::size_t operator()(Vec2 v) const noexcept {
    return std::hash<long>()(v.x) * 1000003u ^ std::hash<long>()(v.y);
  }
};

}  // namespace dimer
