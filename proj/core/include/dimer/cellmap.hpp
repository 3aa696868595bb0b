#pragma once

#include <vector>

#include "dimer/geometry.hpp"

namespace dimer {

// A cellular map on the torus given by a rotation system.
//
// Darts come in pairs: dart 2k and 2k+1 are the two ends of link k, and
// alpha(d) = d ^ 1. Each dart starts at a vertex. disp[d] is the lattice
// translation picked up when walking from the start of d to the start of
// alpha(d), so disp[2k+1] = -disp[2k].
//
// Faces are orbits of phi(d) = next_ccw(alpha(d)). With counterclockwise
// rotations this keeps the face on the right of travel, so every face is
// traced clockwise.
struct CellMap {
  int num_vertices = 0;
  std::vector<int> dart_vertex;
  std::vector<Vec2> dart_disp;
  std::vector<int> next_ccw;  // next dart counterclockwise around the start vertex
  std::vector<int> prev_ccw;

  std::vector<std::vector<int>> faces;  // dart sequences, clockwise
  std::vector<int> dart_face;
  std::vector<int> dart_index;  // position of the dart inside its face
  // Translation of the start vertex of each dart inside the frame of its face.
  // The first dart of every face sits at (0,0).
  std::vector<Vec2> dart_shift;

  int num_darts() const { return static_cast<int>(dart_vertex.size()); }
  int num_links() const { return num_darts() / 2; }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int euler_characteristic() const { return num_vertices - num_links() + num_faces(); }
  int phi(int d) const { return next_ccw[d ^ 1]; }
};

// Builds the map and traces faces. rotation[v] lists darts starting at v in
// counterclockwise order. Throws TopologyError when the rotation data is
// inconsistent, the map is disconnected, the Euler characteristic is not 0,
// a face does not close up in the plane, or the offsets do not generate H1.
CellMap trace_cells(int num_vertices, const std::vector<std::vector<int>>& rotation,
                    const std::vector<Vec2>& dart_disp);

// Integer basis change helper shared by the quiver and the checks: given
// vectors v_k, finds integer combinations giving (1,0) and (0,1).
// Returns false when the v_k do not span Z^2.
bool unimodular_combinations(const std::vector<Vec2>& v, std::vector<long>& cx,
                             std::vector<long>& cy);

}  // namespace dimer
