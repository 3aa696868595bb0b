#pragma once

#include <optional>
#include <string>

#include "dimer/torus_graph.hpp"

namespace dimer {

struct SvgOptions {
  int tiles = 3;                 // n x n copies of the fundamental domain
  bool quiver = false;
  std::optional<int> matching;   // index into enumerate_matchings(g)
  std::optional<int> zigzag;     // index into zigzag_paths(dualize(g))
  double scale = 160.0;          // pixels per period
};

// Periodic drawing. Vertex positions come from a Tutte relaxation on the
// torus (each vertex at the mean of its neighbours' lifts). Element classes:
// edge, black, white, arrow, matching, zigzag.
std::string emit_svg(const TorusGraph& g, const SvgOptions& opts = {});

}  // namespace dimer
