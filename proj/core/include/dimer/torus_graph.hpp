#pragma once

#include <string>
#include <vector>

#include "dimer/cellmap.hpp"
#include "dimer/geometry.hpp"

namespace dimer {

enum class Color { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }
inline char color_char(Color c) { return c == Color::Black ? 'B' : 'W'; }

// Doubly periodic bipartite graph on the torus, stored over one fundamental
// domain. The offset of an edge is the translation of its white end's copy
// relative to its black end's copy.
//
// Dart numbering: edge e has dart 2e at its black end and 2e+1 at its white end.
class TorusGraph {
 public:
  struct Edge {
    int black = -1;
    int white = -1;
    Vec2 offset;
  };

  TorusGraph() = default;
  // Validates and traces faces; throws InputError subclasses.
  TorusGraph(std::vector<Color> colors, std::vector<Edge> edges,
             std::vector<std::vector<int>> rotation);

  int num_vertices() const { return static_cast<int>(colors_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return map_.num_faces(); }
  int num_black() const;
  int num_white() const { return num_vertices() - num_black(); }

  Color color(int v) const { return colors_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Color>& colors() const { return colors_; }
  // Counterclockwise incident edge ids.
  const std::vector<int>& rotation(int v) const { return rotation_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rotation_; }
  int valence(int v) const { return static_cast<int>(rotation_[v].size()); }
  int other_end(int e, int v) const { return edges_[e].black == v ? edges_[e].white : edges_[e].black; }
  // Position of an edge inside the rotation of one of its ends.
  int rotation_index(int v, int e) const;

  const CellMap& cells() const { return map_; }

  // Source ids from the file, for messages. Identity when built in code.
  std::vector<long> source_vertex_ids;
  std::vector<long> source_edge_ids;

 private:
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rotation_;
  CellMap map_;
};

// DIMER text format.
TorusGraph load(const std::string& text);
TorusGraph load_file(const std::string& path);
std::string to_dimer_text(const TorusGraph& g, const std::string& comment = "");

// Splits v into two vertices of its colour joined through a new bivalent
// vertex of the other colour. The new same-colour vertex takes `count`
// consecutive rotation edges starting at index `first`.
TorusGraph split_vertex(const TorusGraph& g, int v, int first, int count);

// Removes a bivalent vertex and merges its two neighbours.
// Throws PreconditionError when the neighbours coincide.
TorusGraph contract_bivalent(const TorusGraph& g, int v);

// Combinatorial map isomorphism preserving colours and orientation.
// Offsets are not compared (they depend on the fundamental domain).
bool isomorphic(const TorusGraph& a, const TorusGraph& b);

}  // namespace dimer
