#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimer/quiver.hpp"

namespace dimer {

struct PerfectMatching {
  std::vector<int> edges;  // sorted support
  Vec2 cls;                // relative class against the reference matching

  // 0/1 indicator on edges (= arrows).
  std::vector<int> indicator(int num_edges) const;
  bool operator==(const PerfectMatching& o) const { return edges == o.edges; }
};

// All perfect matchings, sorted lexicographically by support. The first
// one is the reference matching; classes are measured against it.
std::vector<PerfectMatching> enumerate_matchings(const TorusGraph& g, const Quiver& q);
std::vector<PerfectMatching> enumerate_matchings(const TorusGraph& g);

// Relative class (<pi - pi0, gamma_x>, <pi - pi0, gamma_y>).
Vec2 pm_class(const std::vector<int>& pi_edges, const std::vector<int>& pi0_edges, const Quiver& q);

bool is_perfect_matching(const TorusGraph& g, const std::vector<int>& edges);

struct HallVerdict {
  enum class Kind { Pass, Imbalance, Deficient };
  Kind kind = Kind::Pass;
  int blacks = 0, whites = 0;
  std::vector<int> subset;      // black vertices with too few neighbours
  std::vector<int> neighbours;  // their white neighbours
  bool pass() const { return kind == Kind::Pass; }
};

HallVerdict hall_check(const TorusGraph& g);

struct NondegVerdict {
  bool pass = false;
  std::vector<bool> edge_ok;      // edge lies in some perfect matching
  std::vector<int> forced_edges;  // edges lying in every perfect matching
  std::vector<int> unmatched_edges;
  bool has_matching = false;
};

NondegVerdict nondegeneracy_check(const TorusGraph& g);

// Strong marriage criterion by subset enumeration (oracle; blacks <= max_blacks).
// True iff every edge lies in some perfect matching.
std::optional<bool> strong_marriage_check(const TorusGraph& g, int max_blacks = 16);

// Maximum matching size on the subgraph given by an edge mask, with some
// vertices removed. Kuhn's augmenting paths.
int max_matching_size(const TorusGraph& g, const std::vector<char>& edge_allowed,
                      const std::vector<char>& vertex_removed, std::vector<int>* match_edges = nullptr);

struct PMPolygon {
  std::map<Vec2, int> points;  // class -> multiplicity
  std::vector<Vec2> vertices;  // counterclockwise hull
  std::map<Vec2, std::vector<int>> by_point;  // indices into the matching list

  bool is_vertex(Vec2 p) const;
  bool is_external(Vec2 p) const;  // on the boundary of the hull
  long twice_area() const;
};

PMPolygon polygon(const std::vector<PerfectMatching>& matchings);

using WeightedPoints = std::vector<std::pair<Vec2, int>>;

// Normal form under GL(2,Z) and translations: lexicographically least
// sorted (point, multiplicity) list over all placements of a hull vertex at
// the origin with an adjacent edge along +x.
WeightedPoints normal_form(const std::map<Vec2, int>& points);

// Writes v (a nonnegative edge vector whose sum at every dimer vertex is k)
// as a sum of k perfect matchings. Classes are left at zero.
std::vector<PerfectMatching> bvn_decompose(const TorusGraph& g, std::vector<long> v);

}  // namespace dimer
