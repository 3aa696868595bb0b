#pragma once

#include <string>
#include <vector>

#include "dimer/torus_graph.hpp"

namespace dimer {

using Path = std::vector<int>;  // arrow ids, composed left to right

struct Arrow {
  int tail = -1;
  int head = -1;
  int edge = -1;  // dual dimer edge; equals the arrow id
  Vec2 offset;    // translation from the tail copy to the head copy
};

struct QuiverFace {
  Color color;
  int dimer_vertex = -1;
  Path boundary;  // cyclic; black faces counterclockwise, white clockwise
};

// Dual of a dimer model. Arrow a is dual to edge a and keeps the black dimer
// vertex on its left.
struct Quiver {
  int num_vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<QuiverFace> faces;  // face f is dual to dimer vertex f
  std::vector<int> black_face, white_face;  // per arrow
  std::vector<int> black_pos, white_pos;    // index of the arrow in those boundaries
  // Integer 1-chains (coefficients per arrow) with zero boundary and offset
  // sums (1,0) and (0,1).
  std::vector<long> gamma_x, gamma_y;

  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int tail(int a) const { return arrows[a].tail; }
  int head(int a) const { return arrows[a].head; }
  Vec2 offset(int a) const { return arrows[a].offset; }

  // Arrow following a in its black (resp. white) face boundary.
  int next_in_black(int a) const;
  int next_in_white(int a) const;

  bool composable(const Path& p) const;
  Vec2 path_offset(const Path& p) const;
  Vec2 chain_offset(const std::vector<long>& chain) const;
};

Quiver dualize(const TorusGraph& g);

struct SuperpotentialTerm {
  int sign = 1;
  int face = -1;
  Path cycle;  // lexicographically least rotation
};

struct Superpotential {
  std::vector<SuperpotentialTerm> terms;
};

Superpotential superpotential(const Quiver& q);
std::string to_string(const Superpotential& w);

struct FTermRelation {
  int arrow = -1;
  Path plus;   // rest of the black face after a, from head(a) to tail(a)
  Path minus;  // rest of the white face after a
};

std::vector<FTermRelation> fterm_relations(const Quiver& q);

// Path helpers shared by several modules.
std::string path_string(const Path& p);

}  // namespace dimer
