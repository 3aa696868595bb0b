#include "dimer/polygen.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "dimer/errors.hpp"

namespace dimer {

Vec2 CurvePattern::curve_class(int c) const {
  Vec2 s;
  for (int seg : curves[c]) s += segments[seg].offset;
  return s;
}

Flow CurvePattern::curve_flow(int c) const {
  Flow f;
  Vec2 t;
  for (int seg : curves[c]) {
    f.items.push_back(segments[seg].from);
    f.cum.push_back(t);
    t += segments[seg].offset;
  }
  f.cls = t;
  return f;
}

std::string PatternFailure::describe() const {
  static const char* names[] = {"structure", "topology", "alternation", "mixed-cell", "intersection"};
  std::ostringstream os;
  os << names[static_cast<int>(kind)];
  if (where >= 0) os << " at " << where;
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

namespace {

enum class CellType { White, Black, Quiver, Mixed };

CellType classify(const std::vector<int>& darts) {
  const std::size_t k = darts.size();
  bool all_fwd = true, all_back = true, alternating = k % 2 == 0;
  for (std::size_t i = 0; i < k; ++i) {
    const bool fwd = darts[i] % 2 == 0;
    all_fwd = all_fwd && fwd;
    all_back = all_back && !fwd;
    if (fwd == (darts[(i + 1) % k] % 2 == 0)) alternating = false;
  }
  // Faces are traced clockwise, so forward travel everywhere means the
  // curves circle the cell clockwise.
  if (all_fwd) return CellType::White;
  if (all_back) return CellType::Black;
  return alternating ? CellType::Quiver : CellType::Mixed;
}

CellMap arrangement(const CurvePattern& c) {
  std::vector<Vec2> disp(2 * c.segments.size());
  for (std::size_t s = 0; s < c.segments.size(); ++s) {
    disp[2 * s] = c.segments[s].offset;
    disp[2 * s + 1] = -c.segments[s].offset;
  }
  return trace_cells(c.num_crossings, c.rotation, disp);
}

void check_structure(const CurvePattern& c, std::vector<PatternFailure>& out) {
  using K = PatternFailure::Kind;
  auto fail = [&](int where, std::string msg) { out.push_back({K::Structure, where, std::move(msg)}); };
  const int ns = static_cast<int>(c.segments.size());
  for (int s = 0; s < ns; ++s) {
    const auto& seg = c.segments[s];
    if (seg.curve < 0 || seg.curve >= c.num_curves() || seg.from < 0 || seg.from >= c.num_crossings ||
        seg.to < 0 || seg.to >= c.num_crossings)
      fail(-1, "segment " + std::to_string(s) + " refers to a missing curve or crossing");
  }
  if (!out.empty()) return;
  std::vector<int> uses(ns, 0);
  for (int k = 0; k < c.num_curves(); ++k) {
    const auto& cv = c.curves[k];
    if (cv.empty()) {
      fail(k, "curve " + std::to_string(k) + " has no crossings");
      continue;
    }
    for (std::size_t i = 0; i < cv.size(); ++i) {
      const int s = cv[i];
      if (s < 0 || s >= ns) {
        fail(k, "curve " + std::to_string(k) + " lists a missing segment");
        return;
      }
      ++uses[s];
      if (c.segments[s].curve != k) fail(k, "segment " + std::to_string(s) + " belongs to another curve");
      if (c.segments[s].to != c.segments[cv[(i + 1) % cv.size()]].from)
        fail(k, "curve " + std::to_string(k) + " does not close up after segment " + std::to_string(s));
    }
  }
  for (int s = 0; s < ns; ++s)
    if (uses[s] != 1) fail(-1, "segment " + std::to_string(s) + " is used " + std::to_string(uses[s]) + " times");
  if (static_cast<int>(c.rotation.size()) != c.num_crossings) {
    fail(-1, "rotation table size mismatch");
    return;
  }
  std::vector<int> seen(2 * ns, 0);
  for (int x = 0; x < c.num_crossings; ++x) {
    const auto& r = c.rotation[x];
    if (r.size() != 4) {
      fail(x, "crossing needs exactly 4 segment ends");
      continue;
    }
    bool in_range = true;
    for (int e : r) {
      if (e < 0 || e >= 2 * ns) { in_range = false; continue; }
      ++seen[e];
      const auto& seg = c.segments[e / 2];
      if ((e % 2 == 0 ? seg.from : seg.to) != x)
        fail(x, "segment end " + std::to_string(e) + " listed at the wrong crossing");
    }
    if (!in_range) {
      fail(x, "segment end out of range");
      continue;
    }
    auto curve_of = [&](int e) { return c.segments[e / 2].curve; };
    for (int k = 0; k < 2; ++k) {
      if (curve_of(r[k]) != curve_of(r[k + 2]) || (r[k] % 2) == (r[k + 2] % 2))
        fail(x, "opposite ends must be one curve passing through");
    }
    if (curve_of(r[0]) == curve_of(r[1])) fail(x, "a curve crosses itself");
  }
  for (int e = 0; e < 2 * ns; ++e)
    if (seen[e] != 1) fail(-1, "segment end " + std::to_string(e) + " listed " + std::to_string(seen[e]) + " times");
}

}  // namespace

CurvePattern square_pattern(int n) {
  if (n < 1) throw PreconditionError("square_pattern needs n >= 1");
  const int N = 2 * n;
  CurvePattern c;
  c.num_crossings = N * N;
  c.segments.resize(2 * N * N);
  c.curves.resize(2 * N);
  c.rotation.assign(N * N, std::vector<int>(4));
  auto id = [N](int x, int y) { return ((y + N) % N) * N + (x + N) % N; };
  // Vertical segment starting at (x, y) is x*N + y; horizontal is N*N + y*N + x.
  for (int x = 0; x < N; ++x) {
    const bool up = x % 2 == 0;
    for (int y = 0; y < N; ++y) {
      const int s = x * N + y;
      const int ty = up ? y + 1 : y - 1;
      c.segments[s] = {x, id(x, y), id(x, ty), {0, ty == N ? 1 : ty < 0 ? -1 : 0}};
    }
    for (int k = 0; k < N; ++k) c.curves[x].push_back(x * N + (up ? k : (N - k) % N));
  }
  for (int y = 0; y < N; ++y) {
    const bool right = y % 2 == 0;
    for (int x = 0; x < N; ++x) {
      const int s = N * N + y * N + x;
      const int tx = right ? x + 1 : x - 1;
      c.segments[s] = {N + y, id(x, y), id(tx, y), {tx == N ? 1 : tx < 0 ? -1 : 0, 0}};
    }
    for (int k = 0; k < N; ++k) c.curves[N + y].push_back(N * N + y * N + (right ? k : (N - k) % N));
  }
  for (int y = 0; y < N; ++y) {
    for (int x = 0; x < N; ++x) {
      const bool up = x % 2 == 0, right = y % 2 == 0;
      const int h_here = N * N + y * N + x;
      const int h_west = N * N + y * N + (x + N - 1) % N;
      const int h_east = N * N + y * N + (x + 1) % N;
      const int v_here = x * N + y;
      const int v_south = x * N + (y + N - 1) % N;
      const int v_north = x * N + (y + 1) % N;
      auto& r = c.rotation[id(x, y)];
      r[0] = right ? 2 * h_here : 2 * h_east + 1;       // east
      r[1] = up ? 2 * v_here : 2 * v_north + 1;         // north
      r[2] = right ? 2 * h_west + 1 : 2 * h_here;       // west
      r[3] = up ? 2 * v_south + 1 : 2 * v_here;         // south
    }
  }
  return c;
}

PatternVerdict validate_pattern(const CurvePattern& c) {
  using K = PatternFailure::Kind;
  PatternVerdict v;
  check_structure(c, v.failures);
  if (!v.failures.empty()) {
    v.ok = false;
    return v;
  }
  CellMap m;
  try {
    m = arrangement(c);
  } catch (const TopologyError& e) {
    v.failures.push_back({K::Topology, -1, e.what()});
    v.ok = false;
    return v;
  }
  for (int f = 0; f < m.num_faces(); ++f)
    if (classify(m.faces[f]) == CellType::Mixed)
      v.failures.push_back({K::MixedCell, f, "cell boundary is neither oriented nor alternating"});
  for (int k = 0; k < c.num_curves(); ++k) {
    const auto& cv = c.curves[k];
    std::vector<int> sign;
    for (int s : cv) {
      const auto& r = c.rotation[c.segments[s].from];
      const int at = static_cast<int>(std::find(r.begin(), r.end(), 2 * s) - r.begin());
      // +1 when the other curve leaves to the left of this one.
      sign.push_back(r[(at + 1) % 4] % 2 == 0 ? 1 : -1);
    }
    for (std::size_t i = 0; i < sign.size(); ++i) {
      if (sign[i] == sign[(i + 1) % sign.size()]) {
        v.failures.push_back({K::Alternation, k,
                              "curve " + std::to_string(k) + " crosses with equal orientation at crossings " +
                                  std::to_string(c.segments[cv[i]].from) + " and " +
                                  std::to_string(c.segments[cv[(i + 1) % cv.size()]].from)});
        break;
      }
    }
  }
  std::vector<Flow> flows;
  for (int k = 0; k < c.num_curves(); ++k) flows.push_back(c.curve_flow(k));
  for (const auto& g : check_flows(flows).failures) v.failures.push_back({K::Intersection, g.path, g.describe()});
  v.ok = v.failures.empty();
  return v;
}

TorusGraph pattern_to_dimer(const CurvePattern& c) {
  auto verdict = validate_pattern(c);
  if (!verdict.ok) throw ModelError("invalid pattern: " + verdict.failures.front().describe());
  const CellMap m = arrangement(c);
  std::vector<int> vertex_of(m.num_faces(), -1);
  std::vector<Color> colors;
  std::vector<std::vector<int>> rotation;
  std::vector<TorusGraph::Edge> edges(c.num_crossings);
  std::vector<int> black_dart(c.num_crossings, -1), white_dart(c.num_crossings, -1);
  for (int f = 0; f < m.num_faces(); ++f) {
    const CellType t = classify(m.faces[f]);
    if (t == CellType::Quiver) continue;
    if (t == CellType::Mixed) throw ModelError("invalid pattern: mixed cell " + std::to_string(f));
    const int v = static_cast<int>(colors.size());
    vertex_of[f] = v;
    colors.push_back(t == CellType::White ? Color::White : Color::Black);
    std::vector<int> rot;
    for (int d : m.faces[f]) {
      const int x = m.dart_vertex[d];
      rot.push_back(x);
      auto& slot = t == CellType::White ? white_dart[x] : black_dart[x];
      if (slot >= 0) throw ModelError("invalid pattern: crossing " + std::to_string(x) + " has two corners of one colour");
      slot = d;
    }
    std::reverse(rot.begin(), rot.end());
    rotation.push_back(rot);
  }
  for (int x = 0; x < c.num_crossings; ++x) {
    if (black_dart[x] < 0 || white_dart[x] < 0)
      throw ModelError("invalid pattern: crossing " + std::to_string(x) + " lacks an oriented corner");
    const int db = black_dart[x], dw = white_dart[x];
    edges[x] = {vertex_of[m.dart_face[db]], vertex_of[m.dart_face[dw]], m.dart_shift[db] - m.dart_shift[dw]};
  }
  return TorusGraph(std::move(colors), std::move(edges), std::move(rotation));
}

CurvePattern merging_move(const CurvePattern& c, int x) {
  if (x < 0 || x >= c.num_crossings) throw PreconditionError("merging_move: no such crossing");
  std::vector<PatternFailure> broken;
  check_structure(c, broken);
  if (!broken.empty()) throw PreconditionError("merging_move: " + broken.front().describe());
  const auto& r = c.rotation[x];
  const int A = c.segments[r[0] / 2].curve, B = c.segments[r[1] / 2].curve;
  int meetings = 0;
  std::set<int> on_a;
  for (int s : c.curves[A]) on_a.insert(c.segments[s].from);
  for (int s : c.curves[B])
    if (on_a.count(c.segments[s].from)) ++meetings;
  if (meetings != 1) throw PreconditionError("merging_move: the curves at the crossing meet more than once");
  auto rotate_to_exit = [&](int curve) {
    std::vector<int> cv = c.curves[curve];
    auto it = std::find_if(cv.begin(), cv.end(), [&](int s) { return c.segments[s].from == x; });
    std::rotate(cv.begin(), it, cv.end());
    return cv;
  };
  // B from its exit at x back to x, then A likewise; every join at x is removed.
  std::vector<int> walk = rotate_to_exit(B);
  for (int s : rotate_to_exit(A)) walk.push_back(s);
  const int L = static_cast<int>(walk.size());
  auto ends_at_x = [&](int i) { return c.segments[walk[(i + L) % L]].to == x; };
  int start = 0;
  while (start < L && ends_at_x(start - 1)) ++start;
  if (start == L) throw PreconditionError("merging_move: merged curve would have no crossings");

  CurvePattern out;
  const int merged = std::min(A, B), dropped = std::max(A, B);
  auto new_curve = [&](int k) { return k == A || k == B ? merged : k > dropped ? k - 1 : k; };
  auto new_crossing = [&](int y) { return y > x ? y - 1 : y; };
  out.num_crossings = c.num_crossings - 1;
  out.unrepaired = true;
  std::vector<int> new_id(c.segments.size(), -1);
  std::map<int, int> end_map;  // old end -> new end
  for (std::size_t s = 0; s < c.segments.size(); ++s) {
    const auto& seg = c.segments[s];
    if (seg.curve == A || seg.curve == B) continue;
    new_id[s] = static_cast<int>(out.segments.size());
    out.segments.push_back({new_curve(seg.curve), new_crossing(seg.from), new_crossing(seg.to), seg.offset});
    end_map[2 * s] = 2 * new_id[s];
    end_map[2 * s + 1] = 2 * new_id[s] + 1;
  }
  // Segments joined through x fuse into one.
  std::vector<int> merged_ids;
  for (int i = start; i < start + L;) {
    const int first = walk[i % L];
    Vec2 offset;
    int last = first;
    do {
      last = walk[i % L];
      offset += c.segments[last].offset;
      ++i;
    } while (i < start + L && ends_at_x(i - 1));
    const int id = static_cast<int>(out.segments.size());
    out.segments.push_back({merged, new_crossing(c.segments[first].from), new_crossing(c.segments[last].to), offset});
    end_map[2 * first] = 2 * id;
    end_map[2 * last + 1] = 2 * id + 1;
    merged_ids.push_back(id);
  }
  out.curves.assign(c.num_curves() - 1, {});
  for (int k = 0; k < c.num_curves(); ++k) {
    if (k == A || k == B) continue;
    for (int s : c.curves[k]) out.curves[new_curve(k)].push_back(new_id[s]);
  }
  out.curves[merged] = merged_ids;
  out.rotation.resize(out.num_crossings);
  for (int y = 0; y < c.num_crossings; ++y) {
    if (y == x) continue;
    for (int e : c.rotation[y]) out.rotation[new_crossing(y)].push_back(end_map.at(e));
  }
  return out;
}

namespace {

long parse_int(const std::string& tok, int line) {
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

CurvePattern load_pattern(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool header = false;
  std::map<long, std::pair<std::vector<std::string>, int>> crossings;
  std::map<long, std::pair<PatternSegment, int>> segments;
  std::map<long, std::pair<std::vector<long>, int>> curves;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "PATTERN" || tok[1] != "1")
        throw ParseError(lineno, "expected header 'PATTERN 1'");
      header = true;
      continue;
    }
    if (tok[0] == "crossing") {
      if (tok.size() != 6) throw ParseError(lineno, "crossing record needs <id> and 4 segment ends");
      long id = parse_int(tok[1], lineno);
      if (!crossings.emplace(id, std::make_pair(std::vector<std::string>(tok.begin() + 2, tok.end()), lineno)).second)
        throw ParseError(lineno, "duplicate crossing id " + tok[1]);
    } else if (tok[0] == "segment") {
      if (tok.size() != 7) throw ParseError(lineno, "segment record needs <id> <curve> <from> <to> <dx> <dy>");
      long id = parse_int(tok[1], lineno);
      PatternSegment s{static_cast<int>(parse_int(tok[2], lineno)), static_cast<int>(parse_int(tok[3], lineno)),
                       static_cast<int>(parse_int(tok[4], lineno)),
                       {parse_int(tok[5], lineno), parse_int(tok[6], lineno)}};
      if (!segments.emplace(id, std::make_pair(s, lineno)).second)
        throw ParseError(lineno, "duplicate segment id " + tok[1]);
    } else if (tok[0] == "curve") {
      if (tok.size() < 3) throw ParseError(lineno, "curve record needs <id> and at least one segment");
      long id = parse_int(tok[1], lineno);
      std::vector<long> segs;
      for (std::size_t i = 2; i < tok.size(); ++i) segs.push_back(parse_int(tok[i], lineno));
      if (!curves.emplace(id, std::make_pair(segs, lineno)).second)
        throw ParseError(lineno, "duplicate curve id " + tok[1]);
    } else {
      throw ParseError(lineno, "unknown record '" + tok[0] + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing 'PATTERN 1' header");
  auto dense = [&](const auto& table, const char* what) {
    long expect = 0;
    for (const auto& [id, rec] : table) {
      if (id != expect) throw ParseError(rec.second, std::string(what) + " ids must be 0..n-1");
      ++expect;
    }
  };
  dense(crossings, "crossing");
  dense(segments, "segment");
  dense(curves, "curve");
  CurvePattern c;
  c.num_crossings = static_cast<int>(crossings.size());
  for (const auto& [id, rec] : segments) c.segments.push_back(rec.first);
  for (const auto& [id, rec] : curves) c.curves.emplace_back(rec.first.begin(), rec.first.end());
  for (const auto& [id, rec] : crossings) {
    std::vector<int> ends;
    for (const auto& t : rec.first) {
      if (t.size() < 2 || (t[0] != '+' && t[0] != '-'))
        throw ParseError(rec.second, "segment end must be +s (start) or -s (finish), got '" + t + "'");
      long s = parse_int(t.substr(1), rec.second);
      if (s < 0 || s >= static_cast<long>(segments.size()))
        throw ParseError(rec.second, "segment end refers to missing segment " + t.substr(1));
      ends.push_back(static_cast<int>(2 * s + (t[0] == '-' ? 1 : 0)));
    }
    c.rotation.push_back(ends);
  }
  return c;
}

CurvePattern load_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_pattern(ss.str());
}

std::string to_pattern_text(const CurvePattern& c) {
  std::ostringstream os;
  os << "PATTERN 1\n";
  for (int x = 0; x < c.num_crossings; ++x) {
    os << "crossing " << x;
    for (int e : c.rotation[x]) os << ' ' << (e % 2 == 0 ? '+' : '-') << e / 2;
    os << '\n';
  }
  for (std::size_t s = 0; s < c.segments.size(); ++s) {
    const auto& g = c.segments[s];
    os << "segment " << s << ' ' << g.curve << ' ' << g.from << ' ' << g.to << ' ' << g.offset.x << ' '
       << g.offset.y << '\n';
  }
  for (int k = 0; k < c.num_curves(); ++k) {
    os << "curve " << k;
    for (int s : c.curves[k]) os << ' ' << s;
    os << '\n';
  }
  return os.str();
}

}  // namespace dimer
