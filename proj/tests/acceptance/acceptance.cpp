// Acceptance suite: one line per criterion, `CRITERION n PASS|FAIL detail`.
// Usage: dimer_acceptance [--criterion n]

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "dimer/algebra.hpp"
#include "dimer/fans.hpp"
#include "dimer/ladder.hpp"
#include "dimer/matchings.hpp"
#include "dimer/symmetry.hpp"
#include "dimer/zigzag.hpp"
#include "dimer_cli/cli.hpp"
#include "oracles.hpp"

using namespace dimer;
using oracle::fixture;

namespace {

// Collects failed checks; the first few become the detail text.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failed_.push_back(what);
  }
  bool ok() const { return failed_.empty(); }
  std::string summary() const {
    if (ok()) return std::to_string(total_) + " checks";
    std::ostringstream os;
    os << failed_.size() << "/" << total_ << " checks failed:";
    for (std::size_t k = 0; k < failed_.size() && k < 3; ++k) os << " [" << failed_[k] << "]";
    return os.str();
  }

 private:
  int total_ = 0;
  std::vector<std::string> failed_;
};

std::string str(Vec2 v) { return to_string(v); }

struct Model {
  TorusGraph g;
  Quiver q;
  std::vector<PerfectMatching> ms;
  explicit Model(const std::string& name) : g(fixture(name)), q(dualize(g)), ms(enumerate_matchings(g, q)) {}
};

ToricAlgebra default_algebra(const Model& m) {
  return ToricAlgebra(m.q, m.ms, grading_weights(m.g, m.q, m.ms, Grading::Matchings));
}

int piece_dim(const AlgebraicVerdict& v, int i, int j, long d) {
  for (const auto& p : v.pieces)
    if (p.i == i && p.j == j && p.degree == d) return p.closure_classes;
  return 0;
}

// dim e_i A e_j in degree d from the union-find oracle.
int oracle_dim(const Quiver& q, const std::vector<long>& r, int i, int j, long d) {
  if (d == 0) return i == j ? 1 : 0;
  auto paths = oracle::paths_of_degree(q, r, i, j, d);
  auto comp = oracle::fterm_components(q, paths);
  return static_cast<int>(std::set<int>(comp.begin(), comp.end()).size());
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

WeightedPoints unit_points(std::initializer_list<Vec2> pts) {
  WeightedPoints w;
  for (Vec2 p : pts) w.push_back({p, 1});
  std::sort(w.begin(), w.end());
  return w;
}

bool hull_points_have_weight_one(const PMPolygon& P) {
  for (const auto& [p, k] : P.points)
    if (k != 1) return false;
  return true;
}

// 1. Hexagonal model.
Checks hexagonal() {
  Checks c;
  Model m("hexagonal");
  c.expect(m.ms.size() == 3, "3 matchings");
  c.expect(oracle::brute_matchings(m.g).size() == 3, "brute force finds 3 matchings");
  auto P = polygon(m.ms);
  c.expect(normal_form(P.points) == unit_points({{0, 0}, {1, 0}, {0, 1}}), "normal form is the unit triangle");
  c.expect(geometric_check(zigzag_paths(m.q)).verdict, "geometric");
  auto A = default_algebra(m);
  auto av = A.algebraic_consistency(6);
  c.expect(av.ok, "algebraic(D=6)");
  for (long d = 0; d <= 6; ++d) {
    const long want = oracle::binom(d + 2, 2);
    c.expect(piece_dim(av, 0, 0, d) == want, "eAe degree " + std::to_string(d) + " = " + std::to_string(want));
    c.expect(oracle_dim(m.q, A.r(), 0, 0, d) == want, "oracle eAe degree " + std::to_string(d));
  }
  auto cy = A.cy3_check(4);
  c.expect(!cy.refused && cy.ok, "cy3(D=4) exact");
  return c;
}

// 2. Conifold model.
Checks conifold() {
  Checks c;
  Model m("conifold");
  c.expect(geometric_check(zigzag_paths(m.q)).verdict, "geometric");
  c.expect(m.ms.size() == 4 && oracle::brute_matchings(m.g).size() == 4, "4 matchings");
  auto P = polygon(m.ms);
  c.expect(normal_form(P.points) == unit_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), "unit square");
  c.expect(hull_points_have_weight_one(P), "multiplicities 1");
  std::vector<Vec2> pts;
  for (const auto& pm : m.ms) pts.push_back(pm.cls);
  c.expect(oracle::brute_twice_hull_area(pts) == 2, "brute hull area 1");
  auto A = default_algebra(m);
  auto cy = A.cy3_check(4);
  c.expect(!cy.refused && cy.ok, "cy3(D=4) exact");
  auto gens = A.center_generators(2);
  c.expect(gens.size() == 4, "4 centre generators, got " + std::to_string(gens.size()));
  for (const auto& g : gens) c.expect(A.r_degree(g) * 2 == A.lambda(), "generator at half the face degree");
  return c;
}

// 3. Non-minimal conifold.
Checks nonminimal() {
  Checks c;
  Model a("conifold"), b("nonminimal_conifold");
  auto Pa = polygon(a.ms), Pb = polygon(b.ms);
  c.expect(normal_form(Pa.points) == normal_form(Pb.points), "same polygon normal form");
  auto Aa = default_algebra(a), Ab = default_algebra(b);
  c.expect(Aa.lambda() == Ab.lambda(), "same central degree");
  const long D = 4;
  auto va = Aa.algebraic_consistency(D), vb = Ab.algebraic_consistency(D);
  c.expect(va.ok && vb.ok, "both algebraically consistent to D=4");
  for (long d = 0; d <= D; ++d) {
    long ta = 0, tb = 0, to = 0;
    for (int i = 0; i < a.q.num_vertices; ++i)
      for (int j = 0; j < a.q.num_vertices; ++j) ta += piece_dim(va, i, j, d);
    for (int i = 0; i < b.q.num_vertices; ++i)
      for (int j = 0; j < b.q.num_vertices; ++j) {
        tb += piece_dim(vb, i, j, d);
        to += oracle_dim(b.q, Ab.r(), i, j, d);
      }
    c.expect(ta == tb, "degree " + std::to_string(d) + ": " + std::to_string(ta) + " vs " + std::to_string(tb));
    c.expect(tb == to, "oracle degree " + std::to_string(d));
  }
  return c;
}

// 4. examplestp.
Checks examplestp() {
  Checks c;
  Model m("examplestp");
  c.expect(find_anomaly_free(m.q).has_value(), "anomaly-free R exists");
  auto geo = geometric_check(zigzag_paths(m.q));
  c.expect(!geo.verdict, "geometric check fails");
  bool coset = false;
  for (const auto& f : geo.failures) coset |= f.kind == GeomFailure::Kind::CosetCount;
  c.expect(coset, "a CosetCount failure");
  c.expect(cli({"report", oracle::data_path("examplestp.dimer")}) == 1, "report exits 1");
  return c;
}

// 5. Hall and non-degeneracy witnesses.
Checks witnesses() {
  Checks c;
  auto bal = fixture("balwnopm");
  auto h = hall_check(bal);
  std::vector<int> brute;
  c.expect(!oracle::brute_hall(bal, &brute), "brute Hall fails");
  c.expect(h.kind == HallVerdict::Kind::Deficient && h.subset.size() == 2 && h.neighbours.size() == 1,
           "2 blacks on 1 white");
  c.expect(brute.size() == h.subset.size(), "witness is minimal");
  auto deg = fixture("degenerate");
  auto nd = nondegeneracy_check(deg);
  c.expect(!nd.pass, "nondegeneracy fails");
  auto all = oracle::brute_matchings(deg);
  c.expect(nd.forced_edges.size() == 1, "one forced edge");
  if (nd.forced_edges.size() == 1) {
    const int f = nd.forced_edges.front();
    bool in_all = !all.empty();
    for (const auto& pm : all) in_all &= std::binary_search(pm.begin(), pm.end(), f);
    c.expect(in_all, "forced edge lies in every matching");
    for (int v : {deg.edge(f).black, deg.edge(f).white})
      for (int e : deg.rotation(v)) {
        if (e == f) continue;
        bool named = std::find(nd.unmatched_edges.begin(), nd.unmatched_edges.end(), e) != nd.unmatched_edges.end();
        c.expect(named, "neighbour edge " + std::to_string(e) + " named");
      }
  }
  return c;
}

// 6. memeg zig-zags, fans and externals.
Checks memeg() {
  Checks c;
  Model m("memeg");
  auto z = zigzag_paths(m.q);
  std::vector<Vec2> cls;
  for (const auto& p : z.paths) cls.push_back(p.cls);
  std::sort(cls.begin(), cls.end());
  std::vector<Vec2> want{{-1, -1}, {0, -1}, {0, 1}, {0, 1}, {1, 0}};
  c.expect(cls == want, "5 zig-zag classes");
  auto strands = oracle::strand_classes(m.g);
  c.expect(strands == cls, "strand tracing agrees");
  auto fan = global_fan(z);
  c.expect(fan.num_cones() == 4, "global fan has 4 rays");
  for (int f = 0; f < m.q.num_faces(); ++f) {
    const int sides = static_cast<int>(m.q.faces[f].boundary.size());
    const int rays = local_fan(m.q, z, f).fan.num_cones();
    c.expect((sides == 4 && rays == 4) || (sides == 3 && rays == 3),
             "face " + std::to_string(f) + " has " + std::to_string(rays) + " rays");
  }
  int cone = -1;
  for (int k = 0; k < fan.num_cones(); ++k)
    if (fan.cone_start(k) == Vec2(0, -1) && fan.cone_end(k) == Vec2(1, 0)) cone = k;
  c.expect(cone >= 0, "cone((1,0),(0,-1)) exists");
  if (cone >= 0) {
    auto em = extremal_matching(m.g, m.q, z, cone, m.ms.front().edges);
    auto e3 = representatives(z, {1, 0}), e4 = representatives(z, {0, -1});
    std::vector<int> expect(m.q.num_arrows(), 0);
    auto zig = zig_vector(m.q, z.paths[e3.at(0)]), zag = zag_vector(m.q, z.paths[e4.at(0)]);
    for (int a = 0; a < m.q.num_arrows(); ++a) expect[a] = zig[a] | zag[a];
    c.expect(em.matching.indicator(m.q.num_arrows()) == expect, "P(sigma) = zigs of eta3 + zags of eta4");
  }
  // Externals on the edge dual to (0,1), counted by enumeration.
  auto S = boundary_system(m.q, z, {0, 1});
  std::map<Vec2, int> hist;
  for (const auto& pm : m.ms) {
    long v = 0;
    for (int e : pm.edges) v += S[e];
    if (v == 0) ++hist[pm.cls];
  }
  std::vector<int> mult;
  for (auto& [p, k] : hist) mult.push_back(k);
  c.expect(mult == std::vector<int>({1, 2, 1}), "multiplicities 1,2,1 by enumeration");
  std::map<Vec2, int> ext;
  for (const auto& pm : external_matchings(m.g, m.q, z, {0, 1}, m.ms.front().edges)) ++ext[pm.cls];
  c.expect(ext == hist, "resonated externals agree with enumeration");
  return c;
}

// 7. Fans and extremal matchings on every geometrically consistent fixture.
Checks fans_suite() {
  Checks c;
  int models = 0;
  for (const auto& name : {"hexagonal", "conifold", "nonminimal_conifold", "three_rhombi", "balwnopm", "degenerate",
                           "examplestp", "memeg", "nonalgebraic"}) {
    Model m(name);
    if (m.ms.empty()) continue;
    auto z = zigzag_paths(m.q);
    if (!geometric_check(z).verdict) continue;
    ++models;
    const std::string tag = name;
    auto fan = global_fan(z);
    auto P = polygon(m.ms);
    std::set<Vec2> classes;
    auto eval = [](const std::vector<int>& edges, const std::vector<long>& chain) {
      long s = 0;
      for (int e : edges) s += chain[e];
      return s;
    };
    for (int k = 0; k < fan.num_cones(); ++k) {
      auto em = extremal_matching(m.g, m.q, z, k, m.ms.front().edges);
      classes.insert(em.matching.cls);
      c.expect(P.is_vertex(em.matching.cls) && P.points.at(em.matching.cls) == 1,
               tag + ": P(sigma) at a vertex of multiplicity 1");
      auto Sp = boundary_system(m.q, z, fan.cone_start(k));
      auto Sm = boundary_system(m.q, z, fan.cone_end(k));
      c.expect(eval(em.matching.edges, Sp) == 0 && eval(em.matching.edges, Sm) == 0, tag + ": vanishes on S");
      int vanish = 0;
      for (const auto& pm : m.ms) vanish += eval(pm.edges, Sp) == 0 && eval(pm.edges, Sm) == 0;
      c.expect(vanish == 1, tag + ": unique among matchings");
    }
    std::vector<Vec2> pts;
    for (const auto& pm : m.ms) pts.push_back(pm.cls);
    int brute_vertices = 0;
    for (const auto& [p, k] : P.points) brute_vertices += oracle::brute_is_vertex(p, pts);
    c.expect(static_cast<int>(classes.size()) == fan.num_cones() && brute_vertices == fan.num_cones(),
             tag + ": cones biject with vertices");
    const int n = fan.num_cones();
    for (int k = 0; k < n; ++k) {
      Vec2 ray = fan.rays[k];
      auto plus = extremal_matching(m.g, m.q, z, k, m.ms.front().edges);
      auto minus = extremal_matching(m.g, m.q, z, (k + n - 1) % n, m.ms.front().edges);
      auto pi = plus.matching.indicator(m.q.num_arrows());
      for (int r : representatives(z, ray)) pi = resonate(m.g, m.q, pi, z.paths[r], Resonance::ZagToZig);
      c.expect(support_of(pi) == minus.matching.edges, tag + ": adjacent-cone resonance at " + str(ray));
    }
  }
  c.expect(models >= 3, "at least 3 geometrically consistent fixtures");
  return c;
}

// 8. Birkhoff-von Neumann round trips.
Checks bvn() {
  Checks c;
  std::mt19937 rng(8);
  for (const auto& name : {"hexagonal", "conifold", "nonminimal_conifold", "degenerate", "examplestp", "memeg",
                           "nonalgebraic"}) {
    Model m(name);
    if (m.ms.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, m.ms.size() - 1);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
      const int k = size(rng);
      std::vector<long> v(m.g.num_edges(), 0);
      for (int s = 0; s < k; ++s)
        for (int e : m.ms[pick(rng)].edges) ++v[e];
      auto parts = bvn_decompose(m.g, v);
      std::vector<long> back(m.g.num_edges(), 0);
      bool perfect = true;
      for (const auto& p : parts) {
        perfect &= is_perfect_matching(m.g, p.edges);
        for (int e : p.edges) ++back[e];
      }
      c.expect(static_cast<int>(parts.size()) == k && perfect && back == v,
               std::string(name) + " trial " + std::to_string(trial));
    }
  }
  return c;
}

// 9. gen-square through the CLI.
Checks generator() {
  Checks c;
  const auto dir = std::filesystem::temp_directory_path() / ("dimer_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (int n = 1; n <= 3; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const auto file = (dir / ("square" + std::to_string(n) + ".dimer")).string();
    c.expect(cli({"gen-square", std::to_string(n), "--out", file}) == 0, tag + " generated");
    std::string out;
    const int code = cli({"report", file, "--grading", "extremal", "--max-degree", "4"}, &out);
    c.expect(code == 0, tag + " report exit 0");
    int rungs = 0;
    for (const auto& l : lines(out)) {
      ++rungs;
      c.expect(l.find(" PASS ") != std::string::npos, tag + " " + l);
    }
    c.expect(rungs == 10, tag + " 10 rungs");
    cli({"validate", file, "--format", "json-lines"}, &out);
    auto model = nlohmann::json::parse(lines(out).at(0));
    c.expect(model["quiver_vertices"] == 2 * n * n, tag + " |Q0| = 2n^2");
    cli({"polygon", file, "--format", "json-lines"}, &out);
    std::map<Vec2, int> got;
    for (const auto& l : lines(out)) {
      auto rec = nlohmann::json::parse(l);
      if (rec["kind"] == "normal") got[{rec["x"].get<long>(), rec["y"].get<long>()}] = rec["multiplicity"];
    }
    std::set<Vec2> support, grid;
    for (const auto& [p, k] : got) support.insert(p);
    for (int x = 0; x <= n; ++x)
      for (int y = 0; y <= n; ++y) grid.insert({x, y});
    c.expect(support == grid, tag + " normal form is the n x n square");
  }
  std::filesystem::remove_all(dir);
  return c;
}

// 10. Equal class <=> F-term equivalent, on random pairs.
Checks uniqueness() {
  Checks c;
  std::mt19937 rng(10);
  for (const auto& name : {"hexagonal", "conifold"}) {
    Model m(name);
    auto A = default_algebra(m);
    const long D = 2 * A.lambda();
    // Paths grouped by endpoints and degree.
    std::map<std::tuple<int, int, long>, std::vector<Path>> groups;
    for (int i = 0; i < m.q.num_vertices; ++i)
      for (const auto& p : A.paths_from(i, D)) {
        if (p.empty()) continue;
        long r = 0;
        for (int a : p) r += A.r()[a];
        groups[{i, m.q.head(p.back()), r}].push_back(p);
      }
    std::vector<std::vector<Path>*> pools;
    std::map<std::vector<Path>*, std::vector<int>> comps;
    for (auto& [key, paths] : groups) {
      if (paths.size() < 2) continue;
      std::sort(paths.begin(), paths.end());
      pools.push_back(&paths);
      comps[&paths] = oracle::fterm_components(m.q, paths);
    }
    std::uniform_int_distribution<std::size_t> pool_pick(0, pools.size() - 1);
    int equal = 0, unequal = 0, guard = 0;
    while ((equal < 500 || unequal < 500) && ++guard < 200000) {
      auto& pool = *pools[pool_pick(rng)];
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const std::size_t x = pick(rng), y = pick(rng);
      if (x == y) continue;
      const bool same = A.path_class(pool[x]) == A.path_class(pool[y]);
      if (same ? equal >= 500 : unequal >= 500) continue;
      const bool library = A.fterm_closure(pool[x]).count(pool[y]) > 0;
      const bool brute = comps[&pool][x] == comps[&pool][y];
      const std::string what = std::string(name) + " " + path_string(pool[x]) + " / " + path_string(pool[y]);
      c.expect(library == same && brute == same, what);
      ++(same ? equal : unequal);
    }
    c.expect(equal == 500 && unequal == 500, std::string(name) + " sampled 500 + 500 pairs");
  }
  return c;
}

struct Criterion {
  int id;
  double limit_seconds;  // 0: no runtime bound
  std::function<Checks()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, 5, hexagonal}, {2, 10, conifold}, {3, 30, nonminimal},    {4, 0, examplestp}, {5, 0, witnesses},
      {6, 0, memeg},     {7, 0, fans_suite}, {8, 0, bvn},           {9, 60, generator}, {10, 30, uniqueness}};
  int only = 0;
  for (int k = 1; k < argc; ++k) {
    std::string a = argv[k];
    if (a == "--criterion" && k + 1 < argc) only = std::atoi(argv[++k]);
    else {
      std::cerr << "usage: dimer_acceptance [--criterion n]\n";
      return 2;
    }
  }
  int failures = 0;
  for (const auto& cr : all) {
    if (only && cr.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Checks checks;
    std::string error;
    try {
      checks = cr.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = cr.limit_seconds == 0 || secs < cr.limit_seconds;
    const bool pass = error.empty() && checks.ok() && in_time;
    std::ostringstream detail;
    if (!error.empty()) detail << "exception: " << error;
    else detail << checks.summary();
    detail.precision(2);
    detail << std::fixed << " (" << secs << " s";
    if (cr.limit_seconds > 0) detail << ", limit " << cr.limit_seconds << " s";
    detail << ")";
    std::cout << "CRITERION " << cr.id << ' ' << (pass ? "PASS" : "FAIL") << ' ' << detail.str() << '\n';
    failures += !pass;
  }
  return failures == 0 ? 0 : 1;
}
