#include "dimer/torus_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "dimer/errors.hpp"

namespace dimer {

TorusGraph::TorusGraph(std::vector<Color> colors, std::vector<Edge> edges,
                       std::vector<std::vector<int>> rotation)
    : colors_(std::move(colors)), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  const int nv = num_vertices();
  const int ne = num_edges();
  if (ne == 0) throw ModelError("no edges");
  if (static_cast<int>(rotation_.size()) != nv) throw ModelError("rotation table size mismatch");
  std::vector<std::multiset<int>> incident(nv);
  for (int e = 0; e < ne; ++e) {
    const Edge& ed = edges_[e];
    if (ed.black < 0 || ed.black >= nv || ed.white < 0 || ed.white >= nv)
      throw ModelError("edge " + std::to_string(e) + " has an endpoint out of range");
    if (colors_[ed.black] != Color::Black || colors_[ed.white] != Color::White)
      throw ModelError("edge " + std::to_string(e) + " does not join a black to a white vertex");
    incident[ed.black].insert(e);
    incident[ed.white].insert(e);
  }
  std::vector<std::vector<int>> dart_rot(nv);
  for (int v = 0; v < nv; ++v) {
    std::multiset<int> listed(rotation_[v].begin(), rotation_[v].end());
    if (listed != incident[v])
      throw ModelError("rotation at vertex " + std::to_string(v) +
                       " does not list exactly its incident edges");
    if (rotation_[v].size() < 2)
      throw ModelError("vertex " + std::to_string(v) + " has valence below 2");
    for (int e : rotation_[v]) dart_rot[v].push_back(2 * e + (colors_[v] == Color::White ? 1 : 0));
  }
  std::vector<Vec2> disp(2 * ne);
  for (int e = 0; e < ne; ++e) {
    disp[2 * e] = edges_[e].offset;
    disp[2 * e + 1] = -edges_[e].offset;
  }
  map_ = trace_cells(nv, dart_rot, disp);
  if (source_vertex_ids.empty()) {
    for (int v = 0; v < nv; ++v) source_vertex_ids.push_back(v);
    for (int e = 0; e < ne; ++e) source_edge_ids.push_back(e);
  }
}

int TorusGraph::num_black() const {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), Color::Black));
}

int TorusGraph::rotation_index(int v, int e) const {
  const auto& r = rotation_[v];
  auto it = std::find(r.begin(), r.end(), e);
  return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

namespace {

long parse_long(const std::string& tok, int line) {
  try {
    std::size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

TorusGraph load(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool header = false;
  std::map<long, std::pair<Color, int>> vertices;  // id -> (colour, line)
  struct RawEdge { long b, w; Vec2 off; int line; };
  std::map<long, RawEdge> edges;
  std::map<long, std::pair<std::vector<long>, int>> rots;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "DIMER" || tok[1] != "1")
        throw ParseError(lineno, "expected header 'DIMER 1'");
      header = true;
      continue;
    }
    const std::string& kw = tok[0];
    if (kw == "vertex") {
      if (tok.size() != 3) throw ParseError(lineno, "vertex record needs <id> <B|W>");
      long id = parse_long(tok[1], lineno);
      Color c;
      if (tok[2] == "B") c = Color::Black;
      else if (tok[2] == "W") c = Color::White;
      else throw ParseError(lineno, "vertex colour must be B or W");
      if (!vertices.emplace(id, std::make_pair(c, lineno)).second)
        throw ParseError(lineno, "duplicate vertex id " + tok[1]);
    } else if (kw == "edge") {
      if (tok.size() != 6) throw ParseError(lineno, "edge record needs <id> <black> <white> <dx> <dy>");
      long id = parse_long(tok[1], lineno);
      RawEdge e{parse_long(tok[2], lineno), parse_long(tok[3], lineno),
                Vec2{parse_long(tok[4], lineno), parse_long(tok[5], lineno)}, lineno};
      if (!edges.emplace(id, e).second) throw ParseError(lineno, "duplicate edge id " + tok[1]);
    } else if (kw == "rot") {
      if (tok.size() < 2) throw ParseError(lineno, "rot record needs a vertex id");
      long v = parse_long(tok[1], lineno);
      std::vector<long> list;
      for (std::size_t i = 2; i < tok.size(); ++i) list.push_back(parse_long(tok[i], lineno));
      if (!rots.emplace(v, std::make_pair(list, lineno)).second)
        throw ParseError(lineno, "duplicate rot record for vertex " + tok[1]);
    } else {
      throw ParseError(lineno, "unknown record '" + kw + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing header 'DIMER 1'");
  if (vertices.empty()) throw ParseError(lineno, "no vertices");
  if (edges.empty()) throw ParseError(lineno, "no edges");

  std::map<long, int> vid, eid;
  std::vector<Color> colors;
  std::vector<long> src_v, src_e;
  for (auto& [id, cv] : vertices) {
    vid[id] = static_cast<int>(colors.size());
    colors.push_back(cv.first);
    src_v.push_back(id);
  }
  std::vector<TorusGraph::Edge> out_edges;
  for (auto& [id, e] : edges) {
    auto b = vid.find(e.b), w = vid.find(e.w);
    if (b == vid.end() || w == vid.end())
      throw ParseError(e.line, "edge " + std::to_string(id) + " refers to an unknown vertex");
    if (colors[b->second] != Color::Black || colors[w->second] != Color::White)
      throw ModelError("edge " + std::to_string(id) +
                       " must list a black vertex then a white vertex (bipartiteness)");
    eid[id] = static_cast<int>(out_edges.size());
    out_edges.push_back({b->second, w->second, e.off});
    src_e.push_back(id);
  }
  std::vector<std::vector<int>> rotation(colors.size());
  for (auto& [v, rl] : rots) {
    auto it = vid.find(v);
    if (it == vid.end()) throw ParseError(rl.second, "rot for unknown vertex " + std::to_string(v));
    for (long e : rl.first) {
      auto ei = eid.find(e);
      if (ei == eid.end()) throw ParseError(rl.second, "rot lists unknown edge " + std::to_string(e));
      rotation[it->second].push_back(ei->second);
    }
  }
  for (auto& [id, cv] : vertices)
    if (!rots.count(id)) throw ParseError(cv.second, "vertex " + std::to_string(id) + " has no rot record");
  TorusGraph g(std::move(colors), std::move(out_edges), std::move(rotation));
  g.source_vertex_ids = std::move(src_v);
  g.source_edge_ids = std::move(src_e);
  return g;
}

TorusGraph load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load(ss.str());
}

std::string to_dimer_text(const TorusGraph& g, const std::string& comment) {
  std::ostringstream os;
  os << "DIMER 1\n";
  if (!comment.empty()) {
    std::istringstream cs(comment);
    for (std::string l; std::getline(cs, l);) os << "# " << l << "\n";
  }
  for (int v = 0; v < g.num_vertices(); ++v) os << "vertex " << v << ' ' << color_char(g.color(v)) << "\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    os << "edge " << e << ' ' << ed.black << ' ' << ed.white << ' ' << ed.offset.x << ' '
       << ed.offset.y << "\n";
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << "rot " << v;
    for (int e : g.rotation(v)) os << ' ' << e;
    os << "\n";
  }
  return os.str();
}

TorusGraph split_vertex(const TorusGraph& g, int v, int first, int count) {
  const int k = g.valence(v);
  if (v < 0 || v >= g.num_vertices()) throw PreconditionError("split: no such vertex");
  if (count < 1 || count > k - 1 || first < 0 || first >= k)
    throw PreconditionError("split: the moved arc must be a proper nonempty part of the rotation");
  auto colors = g.colors();
  auto edges = g.edges();
  auto rot = g.rotations();
  const Color c = g.color(v);
  const int v2 = g.num_vertices();
  const int u = v2 + 1;
  colors.push_back(c);
  colors.push_back(opposite(c));
  const int e1 = g.num_edges();
  const int e2 = e1 + 1;
  auto make_edge = [&](int a, int b) {
    return c == Color::Black ? TorusGraph::Edge{a, b, {0, 0}} : TorusGraph::Edge{b, a, {0, 0}};
  };
  edges.push_back(make_edge(v, u));
  edges.push_back(make_edge(v2, u));
  std::vector<int> keep, moved;
  for (int i = 0; i < k; ++i) {
    int e = g.rotation(v)[(first + i) % k];
    (i < count ? moved : keep).push_back(e);
  }
  for (int e : moved) {
    if (c == Color::Black) edges[e].black = v2;
    else edges[e].white = v2;
  }
  keep.push_back(e1);
  moved.push_back(e2);
  rot[v] = keep;
  rot.push_back(moved);
  rot.push_back({e1, e2});
  return TorusGraph(std::move(colors), std::move(edges), std::move(rot));
}

TorusGraph contract_bivalent(const TorusGraph& g, int u) {
  if (u < 0 || u >= g.num_vertices() || g.valence(u) != 2)
    throw PreconditionError("contract: vertex is not bivalent");
  const int e1 = g.rotation(u)[0], e2 = g.rotation(u)[1];
  const int n1 = g.other_end(e1, u), n2 = g.other_end(e2, u);
  if (n1 == n2)
    throw PreconditionError("contract: bivalent vertex " + std::to_string(u) +
                            " has coincident neighbours and cannot be removed");
  const Color nc = g.color(n1);
  // Displacement along a dart leaving vertex a on edge e.
  auto disp = [&](int e, int a) {
    return g.edge(e).black == a ? g.edge(e).offset : -g.edge(e).offset;
  };
  const Vec2 s = disp(e1, n1) + disp(e2, u);  // copy of n2 relative to copy of n1

  auto edges = g.edges();
  for (int f : g.rotation(n2)) {
    if (f == e2) continue;
    if (nc == Color::Black) {
      edges[f].black = n1;
      edges[f].offset += s;
    } else {
      edges[f].white = n1;
      edges[f].offset -= s;
    }
  }
  auto rot = g.rotations();
  {
    const auto& r2 = g.rotation(n2);
    const int k2 = static_cast<int>(r2.size());
    const int i2 = g.rotation_index(n2, e2);
    std::vector<int> ins;
    for (int i = 1; i < k2; ++i) ins.push_back(r2[(i2 + i) % k2]);
    std::vector<int> merged;
    for (int f : g.rotation(n1)) {
      if (f == e1) merged.insert(merged.end(), ins.begin(), ins.end());
      else merged.push_back(f);
    }
    rot[n1] = merged;
  }

  std::vector<int> vmap(g.num_vertices(), -1), emap(g.num_edges(), -1);
  std::vector<Color> colors;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == u || v == n2) continue;
    vmap[v] = static_cast<int>(colors.size());
    colors.push_back(g.color(v));
  }
  std::vector<TorusGraph::Edge> out_edges;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (e == e1 || e == e2) continue;
    emap[e] = static_cast<int>(out_edges.size());
    auto ed = edges[e];
    ed.black = vmap[ed.black];
    ed.white = vmap[ed.white];
    out_edges.push_back(ed);
  }
  std::vector<std::vector<int>> out_rot;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (vmap[v] < 0) continue;
    std::vector<int> r;
    for (int e : rot[v]) r.push_back(emap[e]);
    out_rot.push_back(r);
  }
  return TorusGraph(std::move(colors), std::move(out_edges), std::move(out_rot));
}

bool isomorphic(const TorusGraph& a, const TorusGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.num_black() != b.num_black() || a.num_faces() != b.num_faces())
    return false;
  const CellMap& ma = a.cells();
  const CellMap& mb = b.cells();
  const int nd = ma.num_darts();
  for (int t = 0; t < nd; t += 2) {
    std::vector<int> fwd(nd, -1), bwd(nd, -1);
    std::queue<int> q;
    fwd[0] = t;
    bwd[t] = 0;
    q.push(0);
    bool ok = true;
    auto bind = [&](int x, int y) {
      if (fwd[x] == -1 && bwd[y] == -1) {
        fwd[x] = y;
        bwd[y] = x;
        q.push(x);
        return true;
      }
      return fwd[x] == y && bwd[y] == x;
    };
    while (ok && !q.empty()) {
      int d = q.front();
      q.pop();
      int e = fwd[d];
      ok = bind(ma.next_ccw[d], mb.next_ccw[e]) && bind(d ^ 1, e ^ 1);
    }
    if (ok && std::find(fwd.begin(), fwd.end(), -1) == fwd.end()) return true;
  }
  return false;
}

}  // namespace dimer
