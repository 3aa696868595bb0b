#include "dimer/cellmap.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

struct Row {
  Vec2 v;
  std::vector<long> c;
};

void axpy(Row& dst, const Row& src, long k) {
  dst.v -= src.v * k;
  for (std::size_t i = 0; i < dst.c.size(); ++i) dst.c[i] -= k * src.c[i];
}

// Euclid on one coordinate: afterwards at most one row has a nonzero entry.
// Returns the index of that row or -1.
int eliminate(std::vector<Row>& rows, bool use_x) {
  auto coord = [&](const Row& r) { return use_x ? r.v.x : r.v.y; };
  while (true) {
    int piv = -1;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (coord(rows[i]) == 0) continue;
      if (piv < 0 || std::labs(coord(rows[i])) < std::labs(coord(rows[piv]))) piv = i;
    }
    if (piv < 0) return -1;
    bool again = false;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == piv || coord(rows[i]) == 0) continue;
      axpy(rows[i], rows[piv], coord(rows[i]) / coord(rows[piv]));
      if (coord(rows[i]) != 0) again = true;
    }
    if (!again) return piv;
  }
}

}  // namespace

bool unimodular_combinations(const std::vector<Vec2>& v, std::vector<long>& cx,
                             std::vector<long>& cy) {
  const std::size_t n = v.size();
  std::vector<Row> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].v = v[i];
    rows[i].c.assign(n, 0);
    rows[i].c[i] = 1;
  }
  int px = eliminate(rows, true);
  if (px < 0) return false;
  Row rx = rows[px];
  rows.erase(rows.begin() + px);
  int py = eliminate(rows, false);
  if (py < 0) return false;
  Row ry = rows[py];
  if (std::labs(rx.v.x) != 1 || std::labs(ry.v.y) != 1) return false;
  if (rx.v.x < 0) axpy(rx, rx, 2);  // negate
  if (ry.v.y < 0) axpy(ry, ry, 2);
  axpy(rx, ry, rx.v.y);
  cx = rx.c;
  cy = ry.c;
  return true;
}

CellMap trace_cells(int num_vertices, const std::vector<std::vector<int>>& rotation,
                    const std::vector<Vec2>& dart_disp) {
  CellMap m;
  m.num_vertices = num_vertices;
  const int nd = static_cast<int>(dart_disp.size());
  if (nd % 2 != 0) throw TopologyError("odd number of darts");
  if (static_cast<int>(rotation.size()) != num_vertices)
    throw TopologyError("rotation table size mismatch");
  m.dart_disp = dart_disp;
  m.dart_vertex.assign(nd, -1);
  m.next_ccw.assign(nd, -1);
  m.prev_ccw.assign(nd, -1);
  for (int v = 0; v < num_vertices; ++v) {
    const auto& rot = rotation[v];
    if (rot.empty()) throw TopologyError("vertex " + std::to_string(v) + " is isolated");
    for (std::size_t k = 0; k < rot.size(); ++k) {
      int d = rot[k];
      if (d < 0 || d >= nd) throw TopologyError("dart out of range in rotation");
      if (m.dart_vertex[d] != -1) throw TopologyError("dart listed twice in rotations");
      m.dart_vertex[d] = v;
      m.next_ccw[d] = rot[(k + 1) % rot.size()];
      m.prev_ccw[d] = rot[(k + rot.size() - 1) % rot.size()];
    }
  }
  for (int d = 0; d < nd; ++d)
    if (m.dart_vertex[d] == -1) throw TopologyError("dart missing from rotations");
  for (int d = 0; d < nd; d += 2)
    if (!(dart_disp[d + 1] == -dart_disp[d])) throw TopologyError("dart displacements not antisymmetric");

  // Connectivity and vertex potentials along a spanning tree.
  std::vector<Vec2> pot(num_vertices);
  std::vector<char> seen(num_vertices, 0);
  std::vector<char> tree_link(nd / 2, 0);
  std::vector<std::vector<int>> out(num_vertices);
  for (int d = 0; d < nd; ++d) out[m.dart_vertex[d]].push_back(d);
  std::queue<int> bfs;
  if (num_vertices > 0) {
    bfs.push(0);
    seen[0] = 1;
  }
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int d : out[v]) {
      int w = m.dart_vertex[d ^ 1];
      if (seen[w]) continue;
      seen[w] = 1;
      tree_link[d / 2] = 1;
      pot[w] = pot[v] + dart_disp[d];
      bfs.push(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw TopologyError("graph is disconnected");

  m.dart_face.assign(nd, -1);
  m.dart_index.assign(nd, -1);
  m.dart_shift.assign(nd, Vec2{});
  for (int d0 = 0; d0 < nd; ++d0) {
    if (m.dart_face[d0] != -1) continue;
    const int f = static_cast<int>(m.faces.size());
    std::vector<int> face;
    Vec2 t{0, 0};
    int d = d0;
    do {
      m.dart_face[d] = f;
      m.dart_index[d] = static_cast<int>(face.size());
      m.dart_shift[d] = t;
      face.push_back(d);
      t += dart_disp[d];
      d = m.phi(d);
    } while (d != d0);
    if (!t.is_zero())
      throw TopologyError("face " + std::to_string(f) + " does not close: boundary displacement " +
                          to_string(t));
    m.faces.push_back(std::move(face));
  }

  if (m.euler_characteristic() != 0)
    throw TopologyError("Euler characteristic " + std::to_string(m.euler_characteristic()) +
                        " (not a torus)");

  std::vector<Vec2> cycles;
  for (int d = 0; d < nd; d += 2) {
    if (tree_link[d / 2]) continue;
    cycles.push_back(pot[m.dart_vertex[d]] + dart_disp[d] - pot[m.dart_vertex[d + 1]]);
  }
  std::vector<long> cx, cy;
  if (!unimodular_combinations(cycles, cx, cy))
    throw TopologyError("edge offsets do not generate H1 of the torus");
  return m;
}

}  // namespace dimer
