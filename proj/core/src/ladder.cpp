#include "dimer/ladder.hpp"

#include <map>
#include <sstream>

#include "dimer/algebra.hpp"
#include "dimer/errors.hpp"
#include "dimer/symmetry.hpp"

namespace dimer {

const char* status_name(RungStatus s) {
  switch (s) {
    case RungStatus::Pass: return "PASS";
    case RungStatus::Fail: return "FAIL";
    default: return "SKIP";
  }
}

const Rung* LadderReport::find(const std::string& prefix) const {
  for (const auto& r : rungs)
    if (r.name.rfind(prefix, 0) == 0) return &r;
  return nullptr;
}

int LadderReport::exit_code() const {
  if (input_error) return 2;
  for (const auto& r : rungs)
    if (r.status == RungStatus::Fail) return 1;
  return 0;
}

namespace {

std::string join(const std::vector<int>& v, const std::vector<long>* names = nullptr) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << (names ? (*names)[v[i]] : v[i]);
  return os.str();
}

std::string degree_tag(const char* base, long D) { return std::string(base) + "(D=" + std::to_string(D) + ")"; }

void skip_rest(LadderReport& rep, const LadderOptions& opts, const std::string& why) {
  static const char* names[] = {"load", "euler", "hall", "nondegeneracy", "R-symmetry", "anomaly-free",
                                "geometric", "properly-ordered"};
  std::size_t k = rep.rungs.size();
  for (; k < 8; ++k) rep.rungs.push_back({names[k], RungStatus::Skip, why});
  if (k == 8) rep.rungs.push_back({degree_tag("algebraic", opts.max_degree), RungStatus::Skip, why});
  rep.rungs.push_back({degree_tag("cy3", opts.max_degree), RungStatus::Skip, why});
}

}  // namespace

std::vector<long> grading_weights(const TorusGraph& g, const Quiver& q,
                                  const std::vector<PerfectMatching>& matchings, Grading grading,
                                  std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return std::vector<long>{};
  };
  if (matchings.empty()) return fail("no perfect matchings");
  std::vector<long> r(q.num_arrows(), 0);
  if (grading == Grading::Matchings) {
    for (const auto& m : matchings)
      for (int e : m.edges) ++r[e];
  } else {
    auto z = zigzag_paths(q);
    if (!geometric_check(z).verdict) return fail("extremal grading needs geometric consistency");
    const auto& pi0 = matchings.front().edges;
    auto fan = global_fan(z);
    for (int c = 0; c < fan.num_cones(); ++c)
      for (int e : extremal_matching(g, q, z, c, pi0).matching.edges) ++r[e];
  }
  for (int a = 0; a < q.num_arrows(); ++a)
    if (r[a] == 0) return fail("arrow " + std::to_string(a) + " has weight 0");
  return r;
}

LadderReport run_ladder(const std::string& dimer_text, const LadderOptions& opts) {
  try {
    return run_ladder(load(dimer_text), opts);
  } catch (const TopologyError& e) {
    LadderReport rep;
    rep.input_error = true;
    rep.rungs.push_back({"load", RungStatus::Pass, "records parsed"});
    rep.rungs.push_back({"euler", RungStatus::Fail, e.what()});
    skip_rest(rep, opts, "not a torus tiling");
    return rep;
  } catch (const InputError& e) {
    LadderReport rep;
    rep.input_error = true;
    rep.rungs.push_back({"load", RungStatus::Fail, e.what()});
    skip_rest(rep, opts, "no model");
    return rep;
  }
}

LadderReport run_ladder(const TorusGraph& g, const LadderOptions& opts) {
  LadderReport rep;
  auto add = [&](std::string name, bool pass, std::string witness) {
    rep.rungs.push_back({std::move(name), pass ? RungStatus::Pass : RungStatus::Fail, std::move(witness)});
  };
  const auto& vid = g.source_vertex_ids;
  const auto& eid = g.source_edge_ids;
  {
    std::ostringstream w;
    w << "V=" << g.num_vertices() << " (" << g.num_black() << "B," << g.num_white() << "W) E=" << g.num_edges();
    add("load", true, w.str());
  }
  {
    std::ostringstream w;
    w << g.num_vertices() << "-" << g.num_edges() << "+" << g.num_faces() << "=" << g.cells().euler_characteristic();
    add("euler", g.cells().euler_characteristic() == 0, w.str());
  }
  {
    auto h = hall_check(g);
    std::ostringstream w;
    if (h.kind == HallVerdict::Kind::Pass) w << "|B|=|W|=" << g.num_black() << ", no deficient subset";
    else if (h.kind == HallVerdict::Kind::Imbalance) w << "imbalance: " << h.blacks << " black vs " << h.whites << " white";
    else w << "black {" << join(h.subset, &vid) << "} meet only white {" << join(h.neighbours, &vid) << "}";
    add("hall", h.pass(), w.str());
  }
  const Quiver q = dualize(g);
  const auto ms = enumerate_matchings(g, q);
  {
    auto nd = nondegeneracy_check(g);
    std::ostringstream w;
    if (nd.pass) {
      w << "every edge lies in one of " << ms.size() << " matchings";
    } else if (!nd.has_matching) {
      w << "no perfect matching";
    } else {
      for (int e : nd.forced_edges)
        w << "forced edge " << eid[e] << " (B" << vid[g.edge(e).black] << "-W" << vid[g.edge(e).white] << "); ";
      w << "edges in no matching {" << join(nd.unmatched_edges, &eid) << "}";
    }
    add("nondegeneracy", nd.pass, w.str());
  }
  std::string why;
  const auto r = grading_weights(g, q, ms, Grading::Matchings, &why);
  if (r.empty()) {
    add("R-symmetry", false, why);
  } else {
    long lambda = 0;
    for (int a : q.faces[0].boundary) lambda += r[a];
    add("R-symmetry", true, "sum of " + std::to_string(ms.size()) + " matchings, degree " + std::to_string(lambda));
  }
  {
    auto af = find_anomaly_free(q);
    if (!euler_check(q)) add("anomaly-free", false, "|Q0|-|Q1|+|Q2| != 0");
    else if (af) add("anomaly-free", true, "R=" + af->to_string());
    else add("anomaly-free", false, "no strictly positive solution");
  }
  const auto z = zigzag_paths(q);
  {
    auto geo = geometric_check(z);
    std::ostringstream w;
    if (geo.verdict) w << z.paths.size() << " zig-zag flows, all intersections proper";
    else {
      std::map<std::string, int> kinds;
      for (const auto& f : geo.failures) {
        const auto d = f.describe();
        ++kinds[d.substr(0, d.find(' '))];
      }
      w << geo.failures.front().describe() << " (" << geo.failures.size() << " failures:";
      for (const auto& [k, n] : kinds) w << ' ' << k << 'x' << n;
      w << ')';
    }
    add("geometric", geo.verdict, w.str());
  }
  {
    std::ostringstream w;
    bool ok = false;
    try {
      auto po = properly_ordered(q, z);
      ok = po.ok;
      w << "2*area=" << po.twice_area << " |Q0|=" << po.quiver_vertices;
      if (!po.bad_faces.empty()) w << " faces out of order {" << join(po.bad_faces) << "}";
    } catch (const PreconditionError& e) {
      w << e.what();
    }
    add("properly-ordered", ok, w.str());
  }
  const long D = opts.max_degree;
  const auto weights = opts.grading == Grading::Matchings ? r : grading_weights(g, q, ms, opts.grading, &why);
  if (weights.empty()) {
    rep.rungs.push_back({degree_tag("algebraic", D), RungStatus::Skip, "no grading: " + why});
    rep.rungs.push_back({degree_tag("cy3", D), RungStatus::Skip, "no grading: " + why});
    return rep;
  }
  ToricAlgebra alg(q, ms, weights);
  auto av = alg.algebraic_consistency(D);
  {
    std::ostringstream w;
    if (av.ok) {
      long total = 0;
      for (const auto& p : av.pieces) total += p.lattice_points;
      w << av.pieces.size() << " graded pieces, " << total << " basis elements";
    } else {
      w << av.counterexamples.front().describe() << " (" << av.counterexamples.size() << " counterexamples)";
    }
    add(degree_tag("algebraic", D), av.ok, w.str());
  }
  if (!av.ok) {
    rep.rungs.push_back({degree_tag("cy3", D), RungStatus::Skip, "requires algebraic consistency"});
    return rep;
  }
  auto cy = alg.cy3_check(D);
  {
    std::ostringstream w;
    if (cy.ok) {
      w << cy.pieces.size() << " one-sided pieces exact";
    } else {
      for (const auto& p : cy.pieces) {
        if (p.ok()) continue;
        w << "piece j=" << p.j << " d=" << p.degree << " dims " << p.dim_t1 << "," << p.dim_t2 << "," << p.dim_t3
          << " ranks " << p.rank_mu2 << "," << p.rank_mu3;
        break;
      }
    }
    add(degree_tag("cy3", D), cy.ok, w.str());
  }
  return rep;
}

}  // namespace dimer
