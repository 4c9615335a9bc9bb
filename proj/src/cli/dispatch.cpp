#include <algorithm>
#include <cmath>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "gomega/cli.hpp"
#include "gomega/error.hpp"
#include "gomega/folner.hpp"
#include "gomega/growth.hpp"
#include "gomega/hulanicki.hpp"
#include "gomega/io.hpp"
#include "gomega/kernels.hpp"
#include "gomega/oracles.hpp"
#include "gomega/relators.hpp"
#include "gomega/schreier.hpp"
#include "gomega/spectra.hpp"

namespace gomega {

namespace {

using nlohmann::json;

constexpr const char* kDefaultTarget = "[-0.5,0]u[0.5,1]";

struct Options {
  RunConfig cfg;
  std::string omega;
  unsigned level = 0;
  std::string format = "json";
  std::string weights = "unit";
  // upsilon
  unsigned upsilon_n = 0;
  long long ray = -1;
  std::vector<long long> line;
  bool middle_exception = false;
  std::string check_omega;
  // spectrum / moments
  std::string graph_file;
  std::string op = "markov";
  std::string target;
  std::string vertex;
  unsigned power = 20;
  // sweep
  unsigned max_level = 0;
  // cover-verify
  std::string map_file;
  unsigned from = 0, to = 0;
  std::string source;
  unsigned window = 0;
  unsigned depth = 0;
  std::string write_map;
  // hulanicki
  std::string hul_source = "cayley";
  std::vector<int> ks{4, 6, 8};
  std::string mode = "subexp";
  // growth
  unsigned radius = 0;
  std::string folner;
  unsigned k_max = 0;
  // relators
  unsigned relator_k = 2;
  bool words = true;
  // dihedral
  double x = 0.25, y = 0.5, shift = 0.25;
  std::vector<std::size_t> lengths{16, 64, 256};
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--max-vertices", o.cfg.limits.max_vertices, "Vertex cap");
  sub->add_option("--max-depth", o.cfg.limits.max_depth, "Tree depth cap");
  sub->add_option("--max-ball", o.cfg.limits.max_ball, "Cayley ball cap");
  sub->add_option("--dense-cap", o.cfg.limits.dense_cap, "Largest dense eigenproblem");
  sub->add_option("--tol", o.cfg.membership_tol, "Target membership tolerance");
  sub->add_option("--eigen-tol", o.cfg.eigen_tol, "Eigen/moment agreement tolerance");
  sub->add_flag("--reproducible", o.cfg.reproducible, "Serial kernels only");
  sub->add_option("-o,--output", o.cfg.output, "Artifact path (default: stdout)");
}

class Runner {
 public:
  Runner(Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  void emit(const std::string& text) {
    if (o_.cfg.output.empty())
      out_ << text;
    else
      write_file(o_.cfg.output, text);
  }
  void emit(const json& j) { emit(j.dump(2) + "\n"); }

  OmegaWord omega() const {
    if (o_.omega.empty()) throw InvalidArgument("--omega is required");
    return OmegaWord::parse(o_.omega);
  }

  json omega_meta() const { return {{"omega", o_.omega}, {"level", o_.level}}; }

  WeightedGraph weighted(const WeightedGraph& g) const {
    if (o_.weights == "unit") return g;
    if (o_.weights == "markov") return with_markov_weights(g);
    throw InvalidArgument("--weights must be unit or markov");
  }

  WeightedGraph load_or_build(json& meta) {
    if (!o_.graph_file.empty()) {
      auto doc = parse_graph(read_file(o_.graph_file));
      meta = doc.metadata;
      return std::move(doc.graph);
    }
    meta = omega_meta();
    return *schreier_graph(omega(), o_.level, o_.cfg.limits).graph;
  }

  int schreier() {
    const auto g = schreier_graph(omega(), o_.level, o_.cfg.limits);
    const WeightedGraph wg = weighted(*g.graph);
    json meta = omega_meta();
    meta["weights"] = o_.weights;
    if (o_.format == "dot") {
      emit(export_dot(wg, {true, o_.weights != "unit", "Gamma_" + std::to_string(o_.level)}));
    } else {
      emit(serialize_graph(wg, meta));
    }
    return kExitOk;
  }

  UpsilonSpec upsilon_spec() const {
    const int chosen = (o_.upsilon_n > 0) + (o_.ray >= 0) + (!o_.line.empty());
    if (chosen != 1) throw InvalidArgument("choose exactly one of --n, --ray, --line");
    if (o_.upsilon_n > 0) return UpsilonSpec::finite(o_.upsilon_n, o_.middle_exception);
    if (o_.ray >= 0) return UpsilonSpec::ray(o_.ray);
    return UpsilonSpec::line(o_.line.at(0), o_.line.at(1));
  }

  int upsilon() {
    const UpsilonSpec spec = upsilon_spec();
    if (!o_.check_omega.empty()) {
      if (spec.kind != UpsilonSpec::Kind::finite)
        throw InvalidArgument("--check-omega needs a finite model (--n)");
      const auto g = schreier_graph(OmegaWord::parse(o_.check_omega), spec.n, o_.cfg.limits);
      json j{{"omega", o_.check_omega}, {"level", spec.n},
             {"upsilon_middle_exception", spec.middle_exception}};
      try {
        const auto r = check_isomorphic(*g.graph, spec);
        j["isomorphic"] = r.isomorphic;
        if (r.isomorphic) {
          json mapping = json::object();
          for (Vertex v = 0; v < r.mapping.size(); ++v) mapping[g.graph->name(v)] = r.mapping[v];
          j["mapping"] = std::move(mapping);
        } else {
          j["mismatch_position"] = *r.mismatch_position;
          j["message"] = r.message;
        }
        emit(j);
        return r.isomorphic ? kExitOk : kExitVerificationFailed;
      } catch (const NotAPath& e) {
        j["isomorphic"] = false;
        j["message"] = e.what();
        emit(j);
        return kExitVerificationFailed;
      }
    }
    const WeightedGraph g = upsilon_graph(spec);
    json meta{{"upsilon_middle_exception", spec.middle_exception}};
    if (o_.format == "dot")
      emit(export_dot(g, {false, false, "Upsilon"}));
    else
      emit(serialize_graph(g, meta));
    return kExitOk;
  }

  int spectrum() {
    json meta;
    const WeightedGraph g = load_or_build(meta);
    LinearOperator h;
    if (o_.op == "markov")
      h = markov_operator(g);
    else if (o_.op == "laplace")
      h = laplace_type_operator(g);
    else if (o_.op == "cayley-laplacian")
      h = cayley_laplacian(g, g.max_degree());
    else
      throw InvalidArgument("--operator must be markov, laplace or cayley-laplacian");
    SpectrumReport r = eigenvalues_selfadjoint(h, o_.cfg.limits);
    bool ok = true;
    if (!o_.target.empty()) {
      r.check_against(IntervalUnion::parse(o_.target), o_.cfg.membership_tol);
      ok = r.contained;
    }
    json j{{"graph", meta}, {"operator", o_.op}, {"spectrum", to_json(r)}};
    if (o_.op == "markov" && !r.partial && g.max_degree() % 2 == 0 && g.max_degree() > 0) {
      const auto k = kesten_check(r, static_cast<unsigned>(g.max_degree() / 2), true,
                                  o_.cfg.eigen_tol);
      j["kesten"] = {{"spectral_radius", format_double(k.spectral_radius)},
                     {"lower_bound", format_double(k.lower_bound)},
                     {"ok", k.ok}};
      ok = ok && k.ok;
    }
    emit(j);
    return ok ? kExitOk : kExitVerificationFailed;
  }

  int sweep() {
    const auto target = IntervalUnion::parse(o_.target.empty() ? kDefaultTarget : o_.target);
    const auto rep =
        spectrum_sweep(omega(), o_.max_level, target, o_.cfg.membership_tol, o_.cfg.limits);
    const std::string csv = export_csv(rep.levels);
    json levels = json::array();
    for (const auto& l : rep.levels)
      levels.push_back({{"level", l.level},
                        {"contained", l.report.contained},
                        {"excess", format_double(l.report.excess)},
                        {"cumulative_gap", format_double(l.cumulative_gap)}});
    json summary{{"omega", o_.omega},
                 {"target", target.to_string()},
                 {"all_contained", rep.all_contained},
                 {"gap_non_increasing", rep.gap_non_increasing},
                 {"levels", std::move(levels)},
                 {"conventions", convention_metadata()}};
    if (!o_.cfg.csv.empty()) {
      write_file(o_.cfg.csv, csv);
      emit(summary);
    } else {
      emit(csv);
      err_ << summary.dump() << "\n";
    }
    return rep.all_contained ? kExitOk : kExitVerificationFailed;
  }

  static json witness_json(const CoveringVerdict& v, const CoveringMap& c) {
    json j{{"ok", v.ok}, {"window_radius", v.window_radius}};
    if (v.witness) {
      const auto& w = *v.witness;
      json wj{{"kind", to_string(w.kind)}, {"message", w.message}};
      if (w.vertex) {
        const bool target_side = w.kind == CoveringWitness::Kind::vertex_not_hit;
        wj["vertex"] = target_side ? c.target->name(*w.vertex) : c.source->name(*w.vertex);
      }
      if (w.edge) wj["edge"] = *w.edge;
      j["witness"] = std::move(wj);
    }
    return j;
  }

  int cover_verify() {
    CoveringMap c;
    if (!o_.map_file.empty()) {
      c = parse_covering(read_file(o_.map_file));
    } else if (!o_.source.empty()) {
      if (!o_.source.starts_with("cayley:"))
        throw InvalidArgument("covering verification needs a cayley:OMEGA lazy source");
      if (o_.window == 0 || o_.level == 0)
        throw InvalidArgument("--window and --level are required for lazy sources");
      const OmegaWord w = OmegaWord::parse(o_.source.substr(7));
      const unsigned depth =
          o_.depth ? o_.depth
                   : std::max(stabilized_depth(w, o_.window, o_.cfg.limits), o_.level);
      c = cayley_window_cover(CayleyOracle(w, depth), o_.window, o_.level,
                              o_.cfg.limits.max_vertices);
    } else {
      c = level_projection_covering(omega(), o_.from, o_.to, o_.cfg.limits);
    }
    if (!o_.write_map.empty()) write_file(o_.write_map, serialize_covering(c));
    try {
      const auto v = verify_covering(c);
      emit(witness_json(v, c));
      return v.ok ? kExitOk : kExitVerificationFailed;
    } catch (const WindowTooSmall& e) {
      emit(json{{"ok", false}, {"window_too_small", e.what()}});
      return kExitVerificationFailed;
    }
  }

  int hulanicki() {
    const OmegaWord w = omega();
    if (o_.level == 0) throw InvalidArgument("--level is required");
    const HulanickiMode mode =
        o_.mode == "finite" ? HulanickiMode::finite_target : HulanickiMode::subexp;
    if (o_.mode != "finite" && o_.mode != "subexp")
      throw InvalidArgument("--mode must be finite or subexp");
    CoveringMap c;
    if (o_.hul_source == "cayley") {
      const int k_max = *std::ranges::max_element(o_.ks);
      const int n_target = 1 << o_.level;
      const unsigned radius = o_.window
                                  ? o_.window
                                  : static_cast<unsigned>(
                                        k_max + n_target +
                                        (mode == HulanickiMode::finite_target ? 3 : 1));
      c = cayley_ball(w, radius, o_.level, o_.cfg.limits).cover;
    } else if (o_.hul_source.starts_with("level:")) {
      const unsigned m = static_cast<unsigned>(std::stoul(o_.hul_source.substr(6)));
      c = level_projection_covering(w, m, o_.level, o_.cfg.limits);
    } else {
      throw InvalidArgument("--source must be cayley or level:M");
    }
    c = reweighted(c, with_markov_weights(*c.target));
    const auto report = spectral_inclusion_report(c, o_.ks, mode);
    bool sound = true;
    json entries = json::array();
    for (const auto& e : report) {
      json runs = json::array();
      for (const auto& r : e.runs) {
        sound = sound && r.sound;
        runs.push_back({{"k", r.k},
                        {"residual", format_double(r.residual)},
                        {"bound", format_double(r.bound)},
                        {"sound", r.sound},
                        {"N", r.N},
                        {"support_size", r.support_size}});
      }
      entries.push_back({{"eigenvalue", format_double(e.eigenvalue)},
                         {"best_residual", format_double(e.best_residual)},
                         {"best_k", e.best_k},
                         {"runs", std::move(runs)}});
    }
    emit(json{{"omega", o_.omega},
              {"level", o_.level},
              {"source", o_.hul_source},
              {"mode", o_.mode},
              {"all_sound", sound},
              {"eigenvalues", std::move(entries)}});
    return sound ? kExitOk : kExitVerificationFailed;
  }

  int growth() {
    json j = json::object();
    if (!o_.omega.empty()) {
      const auto census = ball_sizes(omega(), o_.radius, o_.cfg.limits);
      j["omega"] = o_.omega;
      j["gamma"] = census.gamma;
      j["depth"] = census.depth;
      j["identity"] = "verified up to depth " + std::to_string(census.depth);
    }
    if (!o_.folner.empty()) {
      if (o_.k_max == 0) throw InvalidArgument("--k-max is required with --folner");
      unsigned depth = o_.depth;
      if (depth == 0 && o_.folner.starts_with("cayley:"))
        depth = stabilized_depth(OmegaWord::parse(o_.folner.substr(7)), o_.k_max + 1,
                                 o_.cfg.limits);
      const auto oracle = make_oracle(o_.folner, std::max(depth, 1u));
      const auto f = folner_balls(*oracle, o_.k_max, o_.cfg.limits.max_vertices);
      json ratios = json::array();
      for (double r : f.boundary_ratio) ratios.push_back(format_double(r));
      j["folner"] = {{"source", o_.folner},
                     {"ball_sizes", f.ball_sizes},
                     {"boundary_ratio", std::move(ratios)},
                     {"subexponential_evidence", f.subexponential_evidence}};
    }
    if (j.empty()) throw InvalidArgument("give --omega or --folner");
    emit(j);
    return kExitOk;
  }

  int relators() {
    const OmegaWord w = omega();
    const unsigned depth = o_.depth ? o_.depth : 12;
    bool ok = true;
    const auto describe = [&](const GeneratorWord& word) {
      const auto v = verify_trivial(word, w, depth);
      const auto cls = abelianization_class(word);
      ok = ok && v.trivial && cls.in_commutator_subgroup();
      json j{{"length", word.size()},
             {"trivial_to_depth", v.trivial},
             {"abelian_class", {cls.a_parity, cls.klein}}};
      if (o_.words) j["word"] = word.str();
      return j;
    };
    json standard = json::array();
    for (const auto& r : standard_relations()) standard.push_back(describe(r));
    json families = json::array();
    for (unsigned k = 1; k <= o_.relator_k; ++k) {
      json words = json::array();
      for (const auto& r : relators_U(w, k)) words.push_back(describe(r));
      families.push_back({{"k", k}, {"relators", std::move(words)}});
    }
    emit(json{{"omega", o_.omega}, {"depth", depth}, {"all_trivial", ok},
              {"standard", std::move(standard)}, {"U", std::move(families)}});
    return ok ? kExitOk : kExitVerificationFailed;
  }

  int dihedral() {
    bool ok = true;
    json j = json::object();
    const auto spec = dihedral_weighted_spectrum(o_.x, o_.y, o_.lengths);
    json truncs = json::array();
    for (const auto& t : spec.truncations) {
      ok = ok && t.inside;
      truncs.push_back({{"length", t.length},
                        {"inside", t.inside},
                        {"max_excess", format_double(t.max_excess)},
                        {"max_boundary_error",
                         format_double(*std::ranges::max_element(t.boundary_error))}});
    }
    j["x"] = format_double(o_.x);
    j["y"] = format_double(o_.y);
    j["exact"] = spec.exact.to_string();
    j["shift"] = format_double(o_.shift);
    j["shifted_exact"] = spec.exact.affine(1.0, o_.shift).to_string();
    j["truncations"] = std::move(truncs);
    if (!o_.omega.empty()) {
      const unsigned depth = o_.depth ? o_.depth : 6;
      const auto r = dihedral_reduction_check(omega(), depth);
      ok = ok && r.t_squared_identity && r.markov_identity;
      j["reduction"] = {{"omega", o_.omega},
                        {"depth", depth},
                        {"t_squared_identity", r.t_squared_identity},
                        {"markov_identity", r.markov_identity},
                        {"violations", r.violations}};
    }
    emit(j);
    return ok ? kExitOk : kExitVerificationFailed;
  }

  int moments() {
    json meta;
    const WeightedGraph g = load_or_build(meta);
    Vertex v = 0;
    if (!o_.vertex.empty()) {
      const auto found = g.find(o_.vertex);
      if (!found) throw InvalidArgument("unknown vertex '" + o_.vertex + "'");
      v = *found;
    }
    const auto m = spectral_moments(g, v, o_.power, o_.cfg.limits);
    json mom = json::array(), eig = json::array();
    for (double x : m.moments) mom.push_back(format_double(x));
    for (double x : m.eigen_moments) eig.push_back(format_double(x));
    const bool ok = m.max_discrepancy <= o_.cfg.eigen_tol && m.hankel_psd;
    emit(json{{"graph", meta},
              {"vertex", g.name(v)},
              {"moments", std::move(mom)},
              {"eigen_moments", std::move(eig)},
              {"max_discrepancy", format_double(m.max_discrepancy)},
              {"hankel_min_eigenvalue", format_double(m.hankel_min_eigenvalue)},
              {"hankel_psd", m.hankel_psd}});
    return ok ? kExitOk : kExitVerificationFailed;
  }

 private:
  Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.cfg.apply_environment();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Groups G_omega: Schreier graphs, coverings and spectra", "gomega"};
  app.require_subcommand(1);

  auto* schreier = app.add_subcommand("schreier", "Schreier graph Gamma_n as JSON or DOT");
  schreier->add_option("--omega", o.omega, "omega as PRE:PERIOD")->required();
  schreier->add_option("--level", o.level, "Level n")->required();
  schreier->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  schreier->add_option("--weights", o.weights)->check(CLI::IsMember({"unit", "markov"}));

  auto* upsilon = app.add_subcommand("upsilon", "Model graphs Upsilon_n and segments");
  upsilon->add_option("--n", o.upsilon_n, "Upsilon_n");
  upsilon->add_option("--ray", o.ray, "Segment [0, L] of the ray");
  upsilon->add_option("--line", o.line, "Segment LO HI of the line")->expected(2);
  upsilon->add_flag("--middle-exception", o.middle_exception,
                    "Omit the double edge at 2^{n-1}-1");
  upsilon->add_option("--check-omega", o.check_omega, "Compare with Gamma_n of this omega");
  upsilon->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of an operator on one graph");
  spectrum->add_option("--omega", o.omega);
  spectrum->add_option("--level", o.level);
  spectrum->add_option("--graph", o.graph_file, "GraphDocument file");
  spectrum->add_option("--operator", o.op)
      ->check(CLI::IsMember({"markov", "laplace", "cayley-laplacian"}));
  spectrum->add_option("--target", o.target, "Target set [a,b]u[c,d]");

  auto* sweep = app.add_subcommand("sweep", "Level sweep of Markov spectra");
  sweep->add_option("--omega", o.omega)->required();
  sweep->add_option("--max-level", o.max_level)->required();
  sweep->add_option("--target", o.target);
  sweep->add_option("--csv", o.cfg.csv, "CSV path");

  auto* cover = app.add_subcommand("cover-verify", "Verify a covering map");
  cover->add_option("--map", o.map_file, "Covering document");
  cover->add_option("--omega", o.omega);
  cover->add_option("--from", o.from, "Source level m");
  cover->add_option("--to", o.to, "Target level n");
  cover->add_option("--source", o.source, "Lazy source cayley:OMEGA");
  cover->add_option("--window", o.window, "Window radius on a lazy source");
  cover->add_option("--level", o.level, "Target level for a lazy source");
  cover->add_option("--depth", o.depth, "Element identity depth");
  cover->add_option("--write-map", o.write_map, "Save the covering document");

  auto* hul = app.add_subcommand("hulanicki", "Residuals of lifted eigenvectors");
  hul->add_option("--omega", o.omega)->required();
  hul->add_option("--level", o.level, "Target level n")->required();
  hul->add_option("--source", o.hul_source, "cayley or level:M");
  hul->add_option("--k", o.ks, "k schedule");
  hul->add_option("--mode", o.mode)->check(CLI::IsMember({"finite", "subexp"}));
  hul->add_option("--window", o.window, "Cayley ball radius");

  auto* growth = app.add_subcommand("growth", "Growth values and Folner ratios");
  growth->add_option("--omega", o.omega);
  growth->add_option("--radius", o.radius);
  growth->add_option("--folner", o.folner, "cayley:OMEGA, upsilon-ray or binary-tree");
  growth->add_option("--k-max", o.k_max);
  growth->add_option("--depth", o.depth, "Element identity depth for cayley sources");

  auto* rel = app.add_subcommand("relators", "Relator families U_k and their triviality");
  rel->add_option("--omega", o.omega)->required();
  rel->add_option("--k", o.relator_k, "Largest k");
  rel->add_option("--depth", o.depth, "Verification depth (default 12)");
  rel->add_flag("!--no-words", o.words, "Omit the words themselves");

  auto* dih = app.add_subcommand("dihedral", "Dihedral operator spectrum and reduction check");
  dih->add_option("--x", o.x);
  dih->add_option("--y", o.y);
  dih->add_option("--shift", o.shift);
  dih->add_option("--lengths", o.lengths);
  dih->add_option("--omega", o.omega, "Run the reduction identities for this omega");
  dih->add_option("--depth", o.depth);

  auto* mom = app.add_subcommand("moments", "Return-probability moments");
  mom->add_option("--omega", o.omega);
  mom->add_option("--level", o.level);
  mom->add_option("--graph", o.graph_file);
  mom->add_option("--vertex", o.vertex);
  mom->add_option("--power", o.power);

  for (auto* sub : {schreier, upsilon, spectrum, sweep, cover, hul, growth, rel, dih, mom})
    add_common(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  kernels::set_default_policy(o.cfg.reproducible ? kernels::Policy::serial
                                                 : kernels::Policy::parallel);
  Runner run(o, out, err);
  try {
    o.cfg.validate();
    err << "config: " << o.cfg.to_json().dump() << "\n";
    if (*schreier) return run.schreier();
    if (*upsilon) return run.upsilon();
    if (*spectrum) return run.spectrum();
    if (*sweep) return run.sweep();
    if (*cover) return run.cover_verify();
    if (*hul) return run.hulanicki();
    if (*growth) return run.growth();
    if (*rel) return run.relators();
    if (*dih) return run.dihedral();
    if (*mom) return run.moments();
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gomega
