#pragma once

#include <vector>

#include "dimer/matchings.hpp"
#include "dimer/zigzag.hpp"

namespace dimer {

// Counterclockwise rays; cone i spans rays[i] .. rays[i+1 mod n].
struct Fan2D {
  std::vector<Vec2> rays;
  int num_cones() const { return static_cast<int>(rays.size()); }
  Vec2 cone_start(int i) const { return rays[i]; }
  Vec2 cone_end(int i) const { return rays[(i + 1) % rays.size()]; }
  int ray_index(Vec2 r) const;
};

struct LocalFan {
  int face = -1;
  Fan2D fan;
  std::vector<int> cone_arrow;  // boundary arrow tagging each cone
};

// Throws std::logic_error if the tagged cones do not form a fan.
LocalFan local_fan(const Quiver& q, const ZigZagSet& z, int face);
Fan2D global_fan(const ZigZagSet& z);

// True when direction d lies in the closed cone from a to b (a != -b, a ^ b > 0 or a = -b
// handled as a half-plane). Exact.
bool cone_contains(Vec2 a, Vec2 b, Vec2 d);
// A direction strictly inside the cone from a counterclockwise to b.
Vec2 interior_direction(Vec2 a, Vec2 b);

struct ExtremalMatching {
  Vec2 ray_from, ray_to;  // the cone
  PerfectMatching matching;
  std::vector<int> face_choice;  // arrow picked at each quiver face
};

// P(sigma) for cone `cone` of the global fan. Class is taken against pi0.
ExtremalMatching extremal_matching(const TorusGraph& g, const Quiver& q, const ZigZagSet& z,
                                   int cone, const std::vector<int>& pi0_edges);

// Indices of the paths whose class is the ray.
std::vector<int> representatives(const ZigZagSet& z, Vec2 ray);

// Zig / zag indicator of a path on arrows.
std::vector<int> zig_vector(const Quiver& q, const ZigZagPath& p);
std::vector<int> zag_vector(const Quiver& q, const ZigZagPath& p);

// Sum of black and white boundary flows over the representatives of the ray,
// as arrow multiplicities. Class check: -2 r u with r representatives.
std::vector<long> boundary_system(const Quiver& q, const ZigZagSet& z, Vec2 ray);

long pairing(const std::vector<int>& pi, const std::vector<long>& chain);

enum class Resonance { ZigToZag, ZagToZig };

// pi - Zig(eta) + Zag(eta) (or the reverse); throws PreconditionError when the
// subtraction leaves N^{Q1} or the result is not a perfect matching.
std::vector<int> resonate(const TorusGraph& g, const Quiver& q, const std::vector<int>& pi,
                          const ZigZagPath& eta, Resonance dir);

// All 2^r resonations of P(sigma+) along the representatives of the ray,
// where sigma+ is the cone starting at the ray. Classes against pi0.
std::vector<PerfectMatching> external_matchings(const TorusGraph& g, const Quiver& q,
                                                const ZigZagSet& z, Vec2 ray,
                                                const std::vector<int>& pi0_edges);

std::vector<int> support_of(const std::vector<int>& indicator);

}  // namespace dimer
