#include "dimer_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "dimer/algebra.hpp"
#include "dimer/errors.hpp"
#include "dimer/fans.hpp"
#include "dimer/ladder.hpp"
#include "dimer/polygen.hpp"
#include "dimer/svg.hpp"

namespace dimer::cli {

namespace {

using Record = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string out;
  std::string format = "text";
  long max_degree = 4;
  std::string grading = "matchings";
  int n = 1;
  bool pattern = false;
  int tiles = 3;
  bool quiver = false;
  std::optional<int> matching;
  std::optional<int> zigzag;
};

class Output {
 public:
  Record& add(const std::string& kind) {
    records_.push_back(Record{{"v", 1}, {"kind", kind}});
    return records_.back();
  }
  std::string render(bool json) const;

 private:
  std::vector<Record> records_;
};

std::string scalar(const Record& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render_text(const Record& r) {
  const std::string kind = r["kind"];
  if (kind == "content") return r["content"].get<std::string>();
  std::ostringstream os;
  if (kind == "rung") {
    os << "RUNG " << scalar(r["name"]) << ' ' << scalar(r["status"]) << ' ' << scalar(r["witness"]);
  } else if (kind == "point") {
    os << r["x"] << ' ' << r["y"] << ' ' << r["multiplicity"];
    if (!r["flag"].get<std::string>().empty()) os << ' ' << scalar(r["flag"]);
  } else {
    std::string upper = kind;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    os << upper;
    for (const auto& [key, value] : r.items()) {
      if (key == "v" || key == "kind" || key == "text") continue;
      os << ' ' << key << '=';
      if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) os << (i ? "," : "") << scalar(value[i]);
      } else {
        os << scalar(value);
      }
    }
    if (r.contains("text")) os << ' ' << scalar(r["text"]);
  }
  os << '\n';
  return os.str();
}

std::string Output::render(bool json) const {
  std::string s;
  for (const auto& r : records_) s += json ? r.dump() + "\n" : render_text(r);
  return s;
}

Record vec(Vec2 v) { return Record::array({v.x, v.y}); }

Record ids(const std::vector<int>& v, const std::vector<long>* names = nullptr) {
  Record a = Record::array();
  for (int x : v) a.push_back(names ? (*names)[x] : x);
  return a;
}

Grading parse_grading(const std::string& s) { return s == "extremal" ? Grading::Extremal : Grading::Matchings; }

struct Model {
  TorusGraph g;
  Quiver q;
  std::vector<PerfectMatching> ms;
};

Model open_model(const std::string& path) {
  Model m;
  m.g = load_file(path);
  m.q = dualize(m.g);
  m.ms = enumerate_matchings(m.g, m.q);
  return m;
}

int cmd_validate(const Options& o, Output& out) {
  auto m = open_model(o.input);
  auto& r = out.add("model");
  r["vertices"] = m.g.num_vertices();
  r["black"] = m.g.num_black();
  r["white"] = m.g.num_white();
  r["edges"] = m.g.num_edges();
  r["faces"] = m.g.num_faces();
  r["quiver_vertices"] = m.q.num_vertices;
  r["arrows"] = m.q.num_arrows();
  return 0;
}

int cmd_report(const Options& o, Output& out) {
  std::ifstream in(o.input);
  if (!in) throw InputError("cannot open " + o.input);
  std::stringstream ss;
  ss << in.rdbuf();
  auto rep = run_ladder(ss.str(), {o.max_degree, parse_grading(o.grading)});
  for (const auto& rung : rep.rungs) {
    auto& r = out.add("rung");
    r["name"] = rung.name;
    r["status"] = status_name(rung.status);
    r["witness"] = rung.witness;
  }
  return rep.exit_code();
}

int cmd_matchings(const Options& o, Output& out) {
  auto m = open_model(o.input);
  for (std::size_t i = 0; i < m.ms.size(); ++i) {
    auto& r = out.add("matching");
    r["index"] = i;
    r["class"] = vec(m.ms[i].cls);
    r["edges"] = ids(m.ms[i].edges, &m.g.source_edge_ids);
  }
  out.add("matchings")["count"] = m.ms.size();
  return 0;
}

int cmd_polygon(const Options& o, Output& out) {
  auto m = open_model(o.input);
  auto P = polygon(m.ms);
  for (const auto& [p, mult] : P.points) {
    auto& r = out.add("point");
    r["x"] = p.x;
    r["y"] = p.y;
    r["multiplicity"] = mult;
    r["flag"] = P.is_vertex(p) ? "V" : P.is_external(p) ? "E" : "";
  }
  for (const auto& [p, mult] : normal_form(P.points)) {
    auto& r = out.add("normal");
    r["x"] = p.x;
    r["y"] = p.y;
    r["multiplicity"] = mult;
  }
  auto& s = out.add("polygon");
  s["vertices"] = P.vertices.size();
  s["twice_area"] = P.twice_area();
  return 0;
}

int cmd_zigzag(const Options& o, Output& out) {
  auto m = open_model(o.input);
  auto z = zigzag_paths(m.q);
  bool zero = false;
  for (std::size_t i = 0; i < z.paths.size(); ++i) {
    auto& r = out.add("zigzag");
    r["index"] = i;
    r["class"] = vec(z.paths[i].cls);
    r["arrows"] = ids(z.paths[i].arrows);
    zero = zero || z.paths[i].cls.is_zero();
  }
  auto geo = geometric_check(z);
  for (const auto& f : geo.failures) out.add("failure")["text"] = f.describe();
  auto& g = out.add("geometric");
  g["ok"] = geo.verdict;
  g["failures"] = geo.failures.size();
  bool ordered = false;
  if (!zero) {
    auto po = properly_ordered(m.q, z);
    auto& r = out.add("order");
    r["ok"] = ordered = po.ok;
    r["twice_area"] = po.twice_area;
    r["quiver_vertices"] = po.quiver_vertices;
    r["bad_faces"] = ids(po.bad_faces);
  }
  return geo.verdict && ordered ? 0 : 1;
}

int cmd_extremal(const Options& o, Output& out, std::ostream& err) {
  auto m = open_model(o.input);
  auto z = zigzag_paths(m.q);
  if (!geometric_check(z).verdict) {
    err << "extremal: model is not geometrically consistent\n";
    return 1;
  }
  if (m.ms.empty()) {
    err << "extremal: no perfect matchings\n";
    return 1;
  }
  const auto& pi0 = m.ms.front().edges;
  const auto fan = global_fan(z);
  for (int c = 0; c < fan.num_cones(); ++c) {
    auto em = extremal_matching(m.g, m.q, z, c, pi0);
    auto& r = out.add("extremal");
    r["cone"] = c;
    r["from"] = vec(em.ray_from);
    r["to"] = vec(em.ray_to);
    r["class"] = vec(em.matching.cls);
    r["edges"] = ids(em.matching.edges, &m.g.source_edge_ids);
  }
  for (Vec2 ray : fan.rays) {
    std::map<Vec2, int> count;
    for (const auto& pm : external_matchings(m.g, m.q, z, ray, pi0)) ++count[pm.cls];
    auto& r = out.add("edge");
    r["ray"] = vec(ray);
    Record pts = Record::array(), mult = Record::array();
    for (const auto& [p, k] : count) {
      pts.push_back(p.x);
      pts.push_back(p.y);
      mult.push_back(k);
    }
    r["points"] = pts;
    r["multiplicities"] = mult;
  }
  return 0;
}

ToricAlgebra open_algebra(const Model& m, const Options& o) {
  std::string why;
  auto w = grading_weights(m.g, m.q, m.ms, parse_grading(o.grading), &why);
  if (w.empty()) throw PreconditionError("no grading: " + why);
  return ToricAlgebra(m.q, m.ms, w);
}

int cmd_algebra(const Options& o, Output& out) {
  auto m = open_model(o.input);
  auto alg = open_algebra(m, o);
  auto v = alg.algebraic_consistency(o.max_degree);
  for (const auto& p : v.pieces) {
    auto& r = out.add("piece");
    r["i"] = p.i;
    r["j"] = p.j;
    r["degree"] = p.degree;
    r["lattice_points"] = p.lattice_points;
    r["path_classes"] = p.path_classes;
    r["closure_classes"] = p.closure_classes;
    r["surjective"] = p.surjective;
    r["injective"] = p.injective;
  }
  for (const auto& c : v.counterexamples) out.add("counterexample")["text"] = c.describe();
  for (const auto& c : alg.center_generators(o.max_degree)) {
    auto& r = out.add("center");
    r["hom"] = vec(c.hom);
    r["deg"] = c.deg;
    r["r_degree"] = alg.r_degree(c);
  }
  auto& r = out.add("algebraic");
  r["ok"] = v.ok;
  r["max_degree"] = v.max_degree;
  r["lambda"] = alg.lambda();
  r["grading"] = o.grading;
  return v.ok ? 0 : 1;
}

int cmd_cy3(const Options& o, Output& out) {
  auto m = open_model(o.input);
  auto alg = open_algebra(m, o);
  auto v = alg.cy3_check(o.max_degree);
  for (const auto& p : v.pieces) {
    auto& r = out.add("cy3_piece");
    r["j"] = p.j;
    r["degree"] = p.degree;
    r["dim_t1"] = p.dim_t1;
    r["dim_t2"] = p.dim_t2;
    r["dim_t3"] = p.dim_t3;
    r["rank_mu2"] = p.rank_mu2;
    r["rank_mu3"] = p.rank_mu3;
    r["ok"] = p.ok();
  }
  auto& r = out.add("cy3");
  r["ok"] = v.ok;
  r["refused"] = v.refused;
  r["max_degree"] = v.max_degree;
  return v.ok ? 0 : 1;
}

int cmd_gen_square(const Options& o, Output& out) {
  if (o.n < 1) throw InputError("gen-square needs N >= 1");
  auto c = square_pattern(o.n);
  out.add("content")["content"] =
      o.pattern ? to_pattern_text(c)
                : to_dimer_text(pattern_to_dimer(c), "square pattern n=" + std::to_string(o.n));
  return 0;
}

int cmd_svg(const Options& o, Output& out) {
  auto g = load_file(o.input);
  SvgOptions so;
  so.tiles = o.tiles;
  so.quiver = o.quiver;
  so.matching = o.matching;
  so.zigzag = o.zigzag;
  try {
    out.add("content")["content"] = emit_svg(g, so);
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return 0;
}

int cmd_pattern_check(const Options& o, Output& out) {
  auto c = load_pattern_file(o.input);
  auto& r = out.add("pattern");
  r["crossings"] = c.num_crossings;
  r["segments"] = c.segments.size();
  r["curves"] = c.num_curves();
  auto v = validate_pattern(c);
  for (const auto& f : v.failures) out.add("failure")["text"] = f.describe();
  out.add("pattern_verdict")["ok"] = v.ok;
  return v.ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimer model consistency toolkit"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s, bool input) {
    if (input) s->add_option("input", o.input, "model file")->required();
    s->add_option("--out", o.out, "write output to this file");
    s->add_option("--format", o.format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));
    s->add_option("--max-degree", o.max_degree, "largest R-degree examined")->check(CLI::NonNegativeNumber);
    return s;
  };
  auto graded = [&](CLI::App* s) {
    s->add_option("--grading", o.grading, "R-symmetry for the algebra: matchings or extremal")
        ->check(CLI::IsMember({"matchings", "extremal"}));
  };
  std::map<std::string, CLI::App*> sub;
  sub["validate"] = common(app.add_subcommand("validate", "load a DIMER file and print its sizes"), true);
  sub["report"] = common(app.add_subcommand("report", "run the consistency ladder"), true);
  graded(sub["report"]);
  sub["matchings"] = common(app.add_subcommand("matchings", "list perfect matchings"), true);
  sub["polygon"] = common(app.add_subcommand("polygon", "perfect matching polygon"), true);
  sub["zigzag"] = common(app.add_subcommand("zigzag", "zig-zag paths and the geometric check"), true);
  sub["extremal"] = common(app.add_subcommand("extremal", "extremal and external matchings from the fan"), true);
  sub["algebra"] = common(app.add_subcommand("algebra", "algebraic consistency up to the degree bound"), true);
  graded(sub["algebra"]);
  sub["cy3"] = common(app.add_subcommand("cy3", "exactness of the one-sided complex up to the degree bound"), true);
  graded(sub["cy3"]);
  sub["gen-square"] = common(app.add_subcommand("gen-square", "dimer model from the n x n square curve pattern"), false);
  sub["gen-square"]->add_option("N", o.n, "pattern size")->required()->check(CLI::PositiveNumber);
  sub["gen-square"]->add_flag("--pattern", o.pattern, "emit the curve pattern instead of the dimer model");
  sub["svg"] = common(app.add_subcommand("svg", "draw the tiling"), true);
  sub["svg"]->add_option("--tiles", o.tiles, "copies of the fundamental domain per side")->check(CLI::PositiveNumber);
  sub["svg"]->add_flag("--quiver", o.quiver, "draw the quiver");
  sub["svg"]->add_option("--matching", o.matching, "thicken this perfect matching");
  sub["svg"]->add_option("--zigzag", o.zigzag, "draw one period of this zig-zag path");
  sub["pattern-check"] = common(app.add_subcommand("pattern-check", "validate a PATTERN file"), true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  std::string name;
  for (const auto& [k, s] : sub)
    if (s->parsed()) name = k;

  Output output;
  int code = 0;
  try {
    if (name == "validate") code = cmd_validate(o, output);
    else if (name == "report") code = cmd_report(o, output);
    else if (name == "matchings") code = cmd_matchings(o, output);
    else if (name == "polygon") code = cmd_polygon(o, output);
    else if (name == "zigzag") code = cmd_zigzag(o, output);
    else if (name == "extremal") code = cmd_extremal(o, output, err);
    else if (name == "algebra") code = cmd_algebra(o, output);
    else if (name == "cy3") code = cmd_cy3(o, output);
    else if (name == "gen-square") code = cmd_gen_square(o, output);
    else if (name == "svg") code = cmd_svg(o, output);
    else if (name == "pattern-check") code = cmd_pattern_check(o, output);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  }
  const std::string text = output.render(o.format == "json-lines");
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << '\n';
      return 2;
    }
    f << text;
  }
  return code;
}

}  // namespace dimer::cli
