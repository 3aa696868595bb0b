#pragma once

#include <string>
#include <vector>

#include "dimer/geometry.hpp"
#include "dimer/torus_graph.hpp"
#include "dimer/zigzag.hpp"

namespace dimer {

// Oriented curves on the torus meeting in transversal double crossings.
//
// Segment s runs from crossing `from` to crossing `to` along its curve; the
// copy of `to` it reaches sits at translation `offset`. Around each crossing
// the four segment ends are listed counterclockwise, end 2s being the start
// of segment s and end 2s+1 its finish. These are the darts of the
// arrangement's rotation system.
struct PatternSegment {
  int curve = -1;
  int from = -1;
  int to = -1;
  Vec2 offset;
};

struct CurvePattern {
  int num_crossings = 0;
  std::vector<PatternSegment> segments;
  std::vector<std::vector<int>> curves;    // segment ids in travel order
  std::vector<std::vector<int>> rotation;  // per crossing, ends counterclockwise
  bool unrepaired = false;                 // set by merging_move

  int num_curves() const { return static_cast<int>(curves.size()); }
  Vec2 curve_class(int c) const;
  // Crossings met by curve c, in travel order, as a periodic flow.
  Flow curve_flow(int c) const;
};

struct PatternFailure {
  enum class Kind { Structure, Topology, Alternation, MixedCell, Intersection };
  Kind kind = Kind::Structure;
  int where = -1;  // crossing, curve or cell, depending on kind
  std::string detail;
  std::string describe() const;
};

struct PatternVerdict {
  bool ok = true;
  std::vector<PatternFailure> failures;
};

// Curves 0..2n-1 are vertical (up when even), 2n..4n-1 horizontal (right
// when even); crossing (x, y) of the 2n by 2n grid has id y * 2n + x.
CurvePattern square_pattern(int n);

PatternVerdict validate_pattern(const CurvePattern& c);

// Throws ModelError when the pattern does not validate.
TorusGraph pattern_to_dimer(const CurvePattern& c);

// Reconnects the two curves through crossing x into one curve. Throws
// PreconditionError unless those curves meet exactly once. The result is
// not validated and carries unrepaired = true.
CurvePattern merging_move(const CurvePattern& c, int crossing);

// PATTERN text format.
CurvePattern load_pattern(const std::string& text);
CurvePattern load_pattern_file(const std::string& path);
std::string to_pattern_text(const CurvePattern& c);

}  // namespace dimer
