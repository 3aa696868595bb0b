#include "dimer/svg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dimer/matchings.hpp"
#include "dimer/quiver.hpp"
#include "dimer/zigzag.hpp"

namespace dimer {

namespace {

struct P {
  double x = 0, y = 0;
};

P operator+(P a, P b) { return {a.x + b.x, a.y + b.y}; }
P lift(P a, Vec2 t) { return {a.x + static_cast<double>(t.x), a.y + static_cast<double>(t.y)}; }

std::vector<P> tutte_layout(const TorusGraph& g) {
  const int n = g.num_vertices();
  std::vector<P> pos(n);
  // Seed with a spread so the pinned vertex is not the only distinct point.
  for (int v = 0; v < n; ++v) pos[v] = {std::fmod(0.618034 * v, 1.0), std::fmod(0.754878 * v, 1.0)};
  for (int it = 0; it < 4000; ++it) {
    double moved = 0;
    for (int v = 1; v < n; ++v) {
      P sum;
      for (int e : g.rotation(v)) {
        const auto& ed = g.edge(e);
        Vec2 d = g.color(v) == Color::Black ? ed.offset : -ed.offset;
        sum = sum + lift(pos[g.other_end(e, v)], d);
      }
      P next{sum.x / g.valence(v), sum.y / g.valence(v)};
      moved = std::max(moved, std::abs(next.x - pos[v].x) + std::abs(next.y - pos[v].y));
      pos[v] = next;
    }
    if (moved < 1e-12) break;
  }
  return pos;
}

}  // namespace

std::string emit_svg(const TorusGraph& g, const SvgOptions& opts) {
  if (opts.tiles < 1) throw std::invalid_argument("svg: tiles must be at least 1");
  const auto pos = tutte_layout(g);
  const double s = opts.scale, margin = 0.5;
  const int T = opts.tiles;
  const double size = (T + 2 * margin) * s;
  auto px = [&](P p) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (p.x + margin) * s << ' ' << (T + margin - p.y) * s;
    return os.str();
  };
  auto line = [&](std::ostringstream& os, const char* cls, P a, P b) {
    std::string pa = px(a), pb = px(b);
    auto sp1 = pa.find(' '), sp2 = pb.find(' ');
    os << "<line class=\"" << cls << "\" x1=\"" << pa.substr(0, sp1) << "\" y1=\"" << pa.substr(sp1 + 1) << "\" x2=\""
       << pb.substr(0, sp2) << "\" y2=\"" << pb.substr(sp2 + 1) << "\"/>\n";
  };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << ' ' << size << "\">\n"
     << "<style>.edge{stroke:#555;stroke-width:2}.matching{stroke:#000;stroke-width:7}"
        ".arrow{stroke:#c33;stroke-width:1.5;marker-end:url(#head)}"
        ".zigzag{stroke:#36c;stroke-width:4;marker-end:url(#head)}"
        ".black{fill:#000}.white{fill:#fff;stroke:#000;stroke-width:2}</style>\n"
     << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
        "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"context-stroke\"/></marker></defs>\n";
  std::vector<char> thick(g.num_edges(), 0);
  if (opts.matching) {
    const auto ms = enumerate_matchings(g);
    if (*opts.matching < 0 || *opts.matching >= static_cast<int>(ms.size()))
      throw std::out_of_range("svg: matching index out of range");
    for (int e : ms[*opts.matching].edges) thick[e] = 1;
  }
  os << "<g id=\"tiling\">\n";
  for (int i = 0; i < T; ++i)
    for (int j = 0; j < T; ++j)
      for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        P a = lift(pos[ed.black], {i, j});
        line(os, "edge", a, lift(pos[ed.white], ed.offset + Vec2{i, j}));
      }
  os << "</g>\n";
  if (opts.matching) {
    os << "<g id=\"matching\">\n";
    for (int i = 0; i < T; ++i)
      for (int j = 0; j < T; ++j)
        for (int e = 0; e < g.num_edges(); ++e) {
          if (!thick[e]) continue;
          const auto& ed = g.edge(e);
          line(os, "matching", lift(pos[ed.black], {i, j}), lift(pos[ed.white], ed.offset + Vec2{i, j}));
        }
    os << "</g>\n";
  }
  if (opts.quiver || opts.zigzag) {
    const Quiver q = dualize(g);
    const CellMap& m = g.cells();
    std::vector<P> centre(m.num_faces());
    for (int f = 0; f < m.num_faces(); ++f) {
      P sum;
      for (int d : m.faces[f]) sum = sum + lift(pos[m.dart_vertex[d]], m.dart_shift[d]);
      centre[f] = {sum.x / m.faces[f].size(), sum.y / m.faces[f].size()};
    }
    auto head_of = [&](int a, Vec2 t) { return lift(centre[q.head(a)], q.offset(a) + t); };
    if (opts.quiver) {
      os << "<g id=\"quiver\">\n";
      for (int i = 0; i < T; ++i)
        for (int j = 0; j < T; ++j)
          for (int a = 0; a < q.num_arrows(); ++a) line(os, "arrow", lift(centre[q.tail(a)], {i, j}), head_of(a, {i, j}));
      os << "</g>\n";
    }
    if (opts.zigzag) {
      const auto z = zigzag_paths(q);
      if (*opts.zigzag < 0 || *opts.zigzag >= static_cast<int>(z.paths.size()))
        throw std::out_of_range("svg: zig-zag index out of range");
      const auto& p = z.paths[*opts.zigzag];
      os << "<g id=\"zigzag\">\n";
      for (int i = 0; i < p.period(); ++i) {
        const int a = p.arrows[i];
        line(os, "zigzag", lift(centre[q.tail(a)], p.cum[i]), head_of(a, p.cum[i]));
      }
      os << "</g>\n";
    }
  }
  os << "<g id=\"vertices\">\n";
  for (int i = 0; i < T; ++i)
    for (int j = 0; j < T; ++j)
      for (int v = 0; v < g.num_vertices(); ++v) {
        std::string c = px(lift(pos[v], {i, j}));
        auto sp = c.find(' ');
        os << "<circle class=\"" << (g.color(v) == Color::Black ? "black" : "white") << "\" cx=\"" << c.substr(0, sp)
           << "\" cy=\"" << c.substr(sp + 1) << "\" r=\"" << s * 0.04 << "\"/>\n";
      }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace dimer
