#include "dimer/quiver.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace dimer {

int Quiver::next_in_black(int a) const {
  const auto& b = faces[black_face[a]].boundary;
  return b[(black_pos[a] + 1) % b.size()];
}

int Quiver::next_in_white(int a) const {
  const auto& b = faces[white_face[a]].boundary;
  return b[(white_pos[a] + 1) % b.size()];
}

bool Quiver::composable(const Path& p) const {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (head(p[i]) != tail(p[i + 1])) return false;
  return true;
}

Vec2 Quiver::path_offset(const Path& p) const {
  Vec2 s;
  for (int a : p) s += offset(a);
  return s;
}

Vec2 Quiver::chain_offset(const std::vector<long>& chain) const {
  Vec2 s;
  for (int a = 0; a < num_arrows(); ++a) s += offset(a) * chain[a];
  return s;
}

Quiver dualize(const TorusGraph& g) {
  const CellMap& m = g.cells();
  Quiver q;
  q.num_vertices = m.num_faces();
  const int ne = g.num_edges();
  q.arrows.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const int db = 2 * e, dw = 2 * e + 1;
    Arrow& a = q.arrows[e];
    a.edge = e;
    a.tail = m.dart_face[db];
    a.head = m.dart_face[dw];
    // Both frames are anchored at a copy of their face; the tail frame sees
    // the black end at dart_shift[db], the head frame sees the white end at
    // dart_shift[dw], and the white copy sits at +offset from the black copy.
    a.offset = m.dart_shift[db] - m.dart_shift[dw] + g.edge(e).offset;
  }

  q.black_face.assign(ne, -1);
  q.white_face.assign(ne, -1);
  q.black_pos.assign(ne, -1);
  q.white_pos.assign(ne, -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    QuiverFace f;
    f.color = g.color(v);
    f.dimer_vertex = v;
    f.boundary = g.rotation(v);
    if (f.color == Color::White) std::reverse(f.boundary.begin(), f.boundary.end());
    for (int i = 0; i < static_cast<int>(f.boundary.size()); ++i) {
      int a = f.boundary[i];
      if (f.color == Color::Black) {
        q.black_face[a] = v;
        q.black_pos[a] = i;
      } else {
        q.white_face[a] = v;
        q.white_pos[a] = i;
      }
    }
    q.faces.push_back(std::move(f));
  }
  for (const auto& f : q.faces) {
    if (!q.composable(f.boundary) || q.head(f.boundary.back()) != q.tail(f.boundary.front()))
      throw std::logic_error("dual face boundary is not a cycle");
    if (!q.path_offset(f.boundary).is_zero())
      throw std::logic_error("dual face boundary has nonzero offset");
  }

  // Spanning tree of the underlying undirected graph and fundamental cycles.
  const int nq = q.num_vertices;
  std::vector<std::vector<int>> inc(nq);
  for (int a = 0; a < ne; ++a) {
    inc[q.tail(a)].push_back(a);
    if (q.head(a) != q.tail(a)) inc[q.head(a)].push_back(a);
  }
  std::vector<Vec2> pot(nq);
  std::vector<std::vector<long>> tree_chain(nq, std::vector<long>(ne, 0));
  std::vector<char> seen(nq, 0), tree(ne, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int a : inc[v]) {
      int w = q.tail(a) == v ? q.head(a) : q.tail(a);
      if (seen[w]) continue;
      seen[w] = 1;
      tree[a] = 1;
      tree_chain[w] = tree_chain[v];
      if (q.tail(a) == v) {
        tree_chain[w][a] += 1;
        pot[w] = pot[v] + q.offset(a);
      } else {
        tree_chain[w][a] -= 1;
        pot[w] = pot[v] - q.offset(a);
      }
      bfs.push(w);
    }
  }
  std::vector<Vec2> cyc_off;
  std::vector<std::vector<long>> cyc_chain;
  for (int a = 0; a < ne; ++a) {
    if (tree[a]) continue;
    std::vector<long> c(ne, 0);
    for (int b = 0; b < ne; ++b) c[b] = tree_chain[q.tail(a)][b] - tree_chain[q.head(a)][b];
    c[a] += 1;
    cyc_off.push_back(pot[q.tail(a)] + q.offset(a) - pot[q.head(a)]);
    cyc_chain.push_back(std::move(c));
  }
  std::vector<long> cx, cy;
  if (!unimodular_combinations(cyc_off, cx, cy))
    throw std::logic_error("quiver cycles do not generate H1");
  q.gamma_x.assign(ne, 0);
  q.gamma_y.assign(ne, 0);
  for (std::size_t k = 0; k < cyc_chain.size(); ++k)
    for (int b = 0; b < ne; ++b) {
      q.gamma_x[b] += cx[k] * cyc_chain[k][b];
      q.gamma_y[b] += cy[k] * cyc_chain[k][b];
    }
  if (q.chain_offset(q.gamma_x) != Vec2{1, 0} || q.chain_offset(q.gamma_y) != Vec2{0, 1})
    throw std::logic_error("homology basis chains have wrong offsets");
  return q;
}

namespace {

Path least_rotation(const Path& p) {
  Path best = p;
  for (std::size_t s = 1; s < p.size(); ++s) {
    Path r(p.begin() + s, p.end());
    r.insert(r.end(), p.begin(), p.begin() + s);
    if (r < best) best = r;
  }
  return best;
}

}  // namespace

Superpotential superpotential(const Quiver& q) {
  Superpotential w;
  for (int f = 0; f < q.num_faces(); ++f) {
    const auto& face = q.faces[f];
    w.terms.push_back({face.color == Color::Black ? 1 : -1, f, least_rotation(face.boundary)});
  }
  std::stable_sort(w.terms.begin(), w.terms.end(), [](const auto& a, const auto& b) {
    if (a.sign != b.sign) return a.sign > b.sign;
    return a.cycle < b.cycle;
  });
  return w;
}

std::string path_string(const Path& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
  return os.str();
}

std::string to_string(const Superpotential& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    const auto& t = w.terms[i];
    if (i == 0) os << (t.sign > 0 ? "" : "-");
    else os << (t.sign > 0 ? " + " : " - ");
    os << '(' << path_string(t.cycle) << ')';
  }
  return os.str();
}

std::vector<FTermRelation> fterm_relations(const Quiver& q) {
  std::vector<FTermRelation> rel;
  auto rest = [](const Path& cyc, int pos) {
    Path r;
    for (std::size_t i = 1; i < cyc.size(); ++i) r.push_back(cyc[(pos + i) % cyc.size()]);
    return r;
  };
  for (int a = 0; a < q.num_arrows(); ++a) {
    rel.push_back({a, rest(q.faces[q.black_face[a]].boundary, q.black_pos[a]),
                   rest(q.faces[q.white_face[a]].boundary, q.white_pos[a])});
  }
  return rel;
}

}  // namespace dimer
