#include <gtest/gtest.h>

#include "dimer/svg.hpp"
#include "dimer/zigzag.hpp"
#include "oracles.hpp"

using namespace dimer;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

void expect_well_formed(const std::string& svg) {
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(count(svg, "<g"), count(svg, "</g>"));
  EXPECT_EQ(svg.find("nan"), std::string::npos);
}

}  // namespace

TEST(Svg, TilingOnlyByDefault) {
  auto g = oracle::fixture("hexagonal");
  auto svg = emit_svg(g);
  expect_well_formed(svg);
  EXPECT_EQ(count(svg, "class=\"edge\""), 27);
  EXPECT_EQ(count(svg, "class=\"black\""), 9);
  EXPECT_EQ(count(svg, "class=\"white\""), 9);
  EXPECT_EQ(count(svg, "class=\"arrow\""), 0);
  EXPECT_EQ(count(svg, "class=\"matching\""), 0);
}

TEST(Svg, LayersScaleWithTiles) {
  auto g = oracle::fixture("memeg");
  for (int tiles = 1; tiles <= 3; ++tiles) {
    SvgOptions o;
    o.tiles = tiles;
    o.quiver = true;
    o.matching = 0;
    o.zigzag = 0;
    auto svg = emit_svg(g, o);
    expect_well_formed(svg);
    const int t2 = tiles * tiles;
    EXPECT_EQ(count(svg, "class=\"edge\""), g.num_edges() * t2);
    EXPECT_EQ(count(svg, "class=\"arrow\""), g.num_edges() * t2);
    EXPECT_EQ(count(svg, "class=\"matching\""), g.num_black() * t2);
    // One full period of the path.
    EXPECT_EQ(count(svg, "class=\"zigzag\""), zigzag_paths(dualize(g)).paths[0].period());
  }
}

TEST(Svg, RejectsBadIndices) {
  auto g = oracle::fixture("conifold");
  SvgOptions o;
  o.matching = 99;
  EXPECT_THROW(emit_svg(g, o), std::out_of_range);
  o.matching.reset();
  o.tiles = 0;
  EXPECT_THROW(emit_svg(g, o), std::invalid_argument);
}
