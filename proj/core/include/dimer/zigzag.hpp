#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dimer/quiver.hpp"

namespace dimer {

// Periodic arrow sequence; even positions are zigs, odd positions zags.
// cum[i] is the translation of the lift of arrows[i] (cum[0] = 0).
struct ZigZagPath {
  Path arrows;
  std::vector<Vec2> cum;
  Vec2 cls;
  int period() const { return static_cast<int>(arrows.size()); }
};

struct ZigZagSet {
  std::vector<ZigZagPath> paths;
  std::vector<int> zig_path, zig_index;  // per arrow: path where it is a zig, and its index
  std::vector<int> zag_path, zag_index;
};

ZigZagSet zigzag_paths(const Quiver& q);

// A periodic flow through abstract items (arrows, or crossings of a curve
// pattern). items[i] sits at translation cum[i]; the pattern repeats under cls.
struct Flow {
  std::vector<int> items;
  std::vector<Vec2> cum;
  Vec2 cls;
};

struct GeomFailure {
  enum class Kind { SelfIntersection, NonPrimitiveClass, ZeroClass, ParallelShare, CosetCount };
  Kind kind = Kind::SelfIntersection;
  int path = -1, other = -1;
  int i = -1, j = -1;  // positions (self intersection)
  int item = -1;       // shared arrow (parallel share)
  Vec2 coset;          // representative (coset count)
  int count = 0;       // hits on that coset; 0 means the coset was missed
  std::string describe() const;
};

struct GeomReport {
  bool verdict = true;
  std::vector<GeomFailure> failures;
};

GeomReport check_flows(const std::vector<Flow>& flows);
GeomReport geometric_check(const ZigZagSet& z);
std::vector<Flow> as_flows(const ZigZagSet& z);

// Lattice Zu + Zv for independent u, v, in Hermite form {(p, q), (0, r)}
// with p, r > 0. reduce() gives the canonical coset representative.
class Sublattice {
 public:
  Sublattice(Vec2 u, Vec2 v);
  long index() const { return p_ * r_; }
  Vec2 reduce(Vec2 w) const;

 private:
  long p_, q_, r_;
};

struct OrderReport {
  bool ok = false;
  long quiver_vertices = 0;
  long twice_area = 0;
  bool area_ok = false;
  std::vector<int> bad_faces;  // faces whose crossing order disagrees with the fan order
  std::vector<Vec2> normal_polygon;
};

// Throws PreconditionError on a zero class.
OrderReport properly_ordered(const Quiver& q, const ZigZagSet& z);

struct BoundaryFlows {
  Path black;
  Path white;
};

// Throws std::logic_error if either cycle does not have class -u.
BoundaryFlows boundary_flows(const Quiver& q, const ZigZagPath& eta);

}  // namespace dimer
