#include "commands.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "hfspan/io.hpp"
#include "hfspan/koch.hpp"
#include "hfspan/random.hpp"
#include "hfspan/spanner.hpp"
#include "hfspan/svg.hpp"
#include "hfspan/verify.hpp"

namespace hfspan::cli {

namespace {

/// Input or argument problem detected after parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_text_file(path, content);
  }
}

std::vector<Point> load_points(const std::string& path) {
  std::istringstream in(read_text_file(path));
  try {
    return read_points_csv(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

GeoGraph load_graph(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return graph_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0' || !std::isfinite(v)) {
      throw UsageError("'" + item + "' is not a number");
    }
    values.push_back(v);
  }
  return values;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::uint64_t seed = 42;
  std::size_t n = 0;
  std::string dist = "uniform-square";
  std::string out = "-";
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const Distribution d = parse_distribution(a.dist);
  if (a.n == 0) err << "warning: n = 0, writing an empty point set\n";
  std::ostringstream csv;
  write_points_csv(csv, generate_points(d, a.n, a.seed));
  emit(a.out, csv.str(), out);
  return kPass;
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string points;
  std::string method = "greedy";
  double t = 0.0;
  double eps = 0.0;
  double s = 0.0;
  CLI::Option* t_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
  CLI::Option* s_opt = nullptr;
  std::string out = "-";
  std::string wspd_out;
};

int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream&) {
  const bool has_t = a.t_opt->count() > 0;
  const bool has_eps = a.eps_opt->count() > 0;
  const bool has_s = a.s_opt->count() > 0;
  if (has_t + has_eps + has_s != 1) throw UsageError("give exactly one of --t, --eps, --s");

  std::vector<Point> points = load_points(a.points);
  Json meta;
  meta["method"] = a.method;
  meta["n"] = points.size();

  GeoGraph graph;
  if (a.method == "greedy") {
    if (has_s) throw UsageError("--s applies to the wspd method only");
    double t = a.t;
    if (has_eps) {
      if (!(a.eps > 0.0)) throw UsageError("--eps must be > 0");
      t = t_for_epsilon(a.eps, EpsilonRegime::general);
      meta["eps"] = a.eps;
    }
    if (!(t >= 1.0)) throw UsageError("--t must be >= 1");
    meta["t"] = t;
    graph = path_greedy_spanner(std::move(points), t);
  } else {
    double t = a.t;
    double s = a.s;
    if (has_eps) {
      if (!(a.eps > 0.0 && a.eps < 0.5)) {
        throw UsageError("--eps must lie in (0, 0.5) for the wspd method; t = (1+2eps)/(1-2eps)");
      }
      t = t_for_epsilon(a.eps, EpsilonRegime::wspd);
      meta["eps"] = a.eps;
    }
    if (has_s) {
      if (!(s > 4.0)) throw UsageError("--s must be > 4 (t = (s+4)/(s-4))");
      t = (s + 4.0) / (s - 4.0);
    } else {
      if (!(t > 1.0)) throw UsageError("--t must be > 1 for the wspd method; s = (4t+4)/(t-1)");
      s = separation_for_stretch(t);
    }
    meta["t"] = t;
    meta["s"] = s;
    WspdSpanner built = build_wspd_spanner(std::move(points), s);
    meta["pairs"] = built.wspd.pairs().size();
    if (!a.wspd_out.empty()) write_text_file(a.wspd_out, dump_json(wspd_to_json(built.wspd)));
    graph = std::move(built.graph);
  }
  meta["edges"] = graph.edge_count();
  emit(a.out, dump_json(graph_to_json(graph, meta)), out);
  return kPass;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string graph;
  std::string check = "stretch";
  double t = 0.0;
  double eps = 0.0;
  CLI::Option* t_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
  double tol = 1e-9;
  bool symmetric = false;
  std::size_t sampled = 0;
  CLI::Option* sampled_opt = nullptr;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string out = "-";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const GeoGraph g = load_graph(a.graph);
  SweepOptions opts;
  opts.tolerance = a.tol;
  opts.symmetric = a.symmetric;
  opts.seed = a.seed;
  opts.threads = a.threads;
  if (a.sampled_opt->count() > 0) {
    opts.force_sampled = true;
    opts.sample_size = a.sampled;
  }
  const bool has_t = a.t_opt->count() > 0;
  const bool has_eps = a.eps_opt->count() > 0;
  if (has_t && !(a.t >= 1.0)) throw UsageError("--t must be >= 1");
  if (has_eps && !(a.eps >= 0.0)) throw UsageError("--eps must be >= 0");

  DilationReport report;
  if (a.check == "stretch") {
    if (!has_t) throw UsageError("--check stretch needs --t");
    report = verify_t_spanner(g, a.t, opts);
  } else {
    const bool hausdorff = a.check == "hausdorff";
    report = hausdorff ? hausdorff_dilation(g, opts) : frechet_dilation(g, opts);
    if (has_eps) {
      apply_bound(report, a.eps);
    } else if (has_t) {
      const BoundSet b = bounds_for_t(a.t);
      apply_bound(report, hausdorff ? b.hausdorff_bound : b.frechet_bound);
    }
  }
  emit(a.out, dump_json(report_to_json(report)), out);
  if (!report.passed) {
    err << a.check << " check failed: ratio " << report.max_ratio << " between " << report.witness_u
        << " and " << report.witness_v << " exceeds " << report.bound.value_or(0.0) << "\n";
  }
  return report.passed ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- koch

struct KochArgs {
  int n = 0;
  int max_n = kDefaultKochMaxGeneration;
  std::string out;
  std::string svg;
  std::string report;
  double check_t = 0.0;
  CLI::Option* check_t_opt = nullptr;
};

int cmd_koch(const KochArgs& a, std::ostream& out, std::ostream&) {
  KochGraph k = [&] {
    try {
      return koch_graph(a.n, a.max_n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  constexpr double kRatioCap = 6.0;
  constexpr int kRectangleGenerations = 4;

  const std::size_t edge_violations = edges_missing_top_level(k).size();
  const std::size_t three_violations = three_between_violations(k).size();
  const RectangleCheck rects = check_bounding_rectangles(k, kRectangleGenerations);
  const KochLemmaReport lemmas = koch_lemma_sweep(k);
  const bool ratio_ok = lemmas.max_hausdorff_ratio <= kRatioCap + 1e-9;
  bool ok = edge_violations == 0 && three_violations == 0 && rects.containment_violations == 0 &&
            rects.shape_violations == 0 && lemmas.passed() && ratio_ok;

  Json report = koch_report_to_json(k, lemmas, rects, edge_violations, three_violations);
  report["hausdorff_ratio_cap"] = kRatioCap;

  out << "F_" << a.n << ": " << k.vertex_count() << " vertices, " << lemmas.pairs_checked
      << " pairs, max Hausdorff ratio " << lemmas.max_hausdorff_ratio << " (cap " << kRatioCap
      << "), invariants " << (ok ? "hold" : "VIOLATED") << "\n";

  if (a.check_t_opt->count() > 0) {
    if (!(a.check_t >= 1.0)) throw UsageError("--check-t must be >= 1");
    const DilationReport stretch = verify_t_spanner(k.graph(), a.check_t);
    Json c;
    c["t"] = a.check_t;
    c["max_stretch"] = stretch.max_ratio;
    c["witness"] = {stretch.witness_u, stretch.witness_v};
    c["is_t_spanner"] = stretch.passed;
    report["check_t"] = std::move(c);
    out << "F_" << a.n << " is " << (stretch.passed ? "" : "not ") << "a " << a.check_t
        << "-spanner (max stretch " << stretch.max_ratio << " between " << stretch.witness_u
        << " and " << stretch.witness_v << ")\n";
    ok = ok && stretch.passed;
  }
  report["pass"] = ok;

  if (!a.out.empty()) {
    Json meta;
    meta["koch_generation"] = a.n;
    meta["levels"] = std::vector<int>(k.levels().begin(), k.levels().end());
    emit(a.out, dump_json(graph_to_json(k.graph(), meta)), out);
  }
  if (!a.svg.empty()) emit(a.svg, render_svg(k.graph(), k.levels()), out);
  if (!a.report.empty()) emit(a.report, dump_json(report), out);
  return ok ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string t_values = "1.1,1.5,2,3";
  std::uint64_t seed = 42;
  std::size_t n = 100;
  std::string dist = "uniform-square";
  std::string method = "greedy";
  double tol = 1e-9;
  unsigned threads = 0;
  std::string out = "-";
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<double> ts = parse_list(a.t_values);
  for (double t : ts) {
    if (a.method == "wspd" ? !(t > 1.0) : !(t >= 1.0)) {
      throw UsageError("t = " + format_double(t) + " is outside the valid range");
    }
  }
  const std::vector<Point> points = generate_points(parse_distribution(a.dist), a.n, a.seed);
  SweepOptions opts;
  opts.tolerance = a.tol;
  opts.threads = a.threads;

  std::ostringstream csv;
  csv << "t,hausdorff_bound,frechet_bound,wspd_frechet_bound,max_stretch,hausdorff_dilation,"
         "frechet_dilation,pass\n";
  bool all_ok = true;
  for (double t : ts) {
    const GeoGraph g = a.method == "wspd" ? wspd_spanner(points, separation_for_stretch(t))
                                          : path_greedy_spanner(points, t);
    const BoundSet b = bounds_for_t(t);
    DilationReport st = verify_t_spanner(g, t, opts);
    DilationReport h = hausdorff_dilation(g, opts);
    DilationReport f = frechet_dilation(g, opts);
    apply_bound(h, b.hausdorff_bound);
    apply_bound(f, b.frechet_bound);
    const bool ok = st.passed && h.passed && f.passed;
    if (!ok) {
      err << "t = " << t << ": measured dilation exceeds its bound\n";
      all_ok = false;
    }
    csv << format_double(t) << ',' << format_double(b.hausdorff_bound) << ','
        << format_double(b.frechet_bound) << ',' << format_double(b.wspd_frechet_bound) << ','
        << format_double(st.max_ratio) << ',' << format_double(h.max_ratio) << ','
        << format_double(f.max_ratio) << ',' << (ok ? "true" : "false") << '\n';
  }
  emit(a.out, csv.str(), out);
  return all_ok ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric spanners with Hausdorff and Frechet dilation checks", "hfspan"};
  app.require_subcommand(1);
  std::function<int()> action;

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a seeded point set as CSV");
  g->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  g->add_option("--n", gen.n, "Number of points")->required();
  g->add_option("--dist", gen.dist, "uniform-square | clustered | grid")
      ->check(CLI::IsMember({"uniform-square", "clustered", "grid"}))
      ->capture_default_str();
  g->add_option("--out", gen.out, "Output CSV path ('-' for stdout)");
  g->callback([&] { action = [&] { return cmd_gen(gen, out, err); }; });

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a spanner from a point CSV");
  b->add_option("--points", build.points, "Point CSV")->required();
  b->add_option("--method", build.method, "greedy | wspd")
      ->check(CLI::IsMember({"greedy", "wspd"}))
      ->capture_default_str();
  build.t_opt = b->add_option("--t", build.t, "Stretch factor");
  build.eps_opt = b->add_option("--eps", build.eps, "Target Frechet dilation");
  build.s_opt = b->add_option("--s", build.s, "WSPD separation");
  b->add_option("--out", build.out, "Output graph JSON path");
  b->add_option("--wspd-out", build.wspd_out, "Also write the WSPD as JSON (wspd method)");
  b->callback([&] { action = [&] { return cmd_build(build, out, err); }; });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check stretch, Hausdorff or Frechet dilation");
  v->add_option("--graph", verify.graph, "Graph JSON")->required();
  v->add_option("--check", verify.check, "stretch | hausdorff | frechet")
      ->check(CLI::IsMember({"stretch", "hausdorff", "frechet"}))
      ->capture_default_str();
  verify.t_opt = v->add_option("--t", verify.t, "Stretch bound, or source of the dilation bound");
  verify.eps_opt = v->add_option("--eps", verify.eps, "Dilation bound");
  v->add_option("--tol", verify.tol, "Absolute ratio tolerance")->capture_default_str();
  v->add_flag("--symmetric-hausdorff", verify.symmetric, "Report symmetric Hausdorff");
  verify.sampled_opt = v->add_option("--sampled", verify.sampled, "Check k random pairs");
  v->add_option("--seed", verify.seed, "Seed for sampled pairs")->capture_default_str();
  v->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
  v->add_option("--out", verify.out, "Report JSON path");
  v->callback([&] { action = [&] { return cmd_verify(verify, out, err); }; });

  KochArgs koch;
  auto* k = app.add_subcommand("koch", "Emit the Koch graph F_n and check its invariants");
  k->add_option("--n", koch.n, "Generation")->required();
  k->add_option("--max-n", koch.max_n, "Largest generation accepted")->capture_default_str();
  k->add_option("--out", koch.out, "Graph JSON path");
  k->add_option("--svg", koch.svg, "SVG path");
  k->add_option("--report", koch.report, "Invariant report JSON path");
  koch.check_t_opt = k->add_option("--check-t", koch.check_t, "Also test whether F_n is a t-spanner");
  k->callback([&] { action = [&] { return cmd_koch(koch, out, err); }; });

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Bounds against measured dilations for a list of t");
  s->add_option("--t-values", sweep.t_values, "Comma-separated t values")->capture_default_str();
  s->add_option("--seed", sweep.seed, "RNG seed")->capture_default_str();
  s->add_option("--n", sweep.n, "Number of points")->capture_default_str();
  s->add_option("--dist", sweep.dist, "uniform-square | clustered | grid")
      ->check(CLI::IsMember({"uniform-square", "clustered", "grid"}))
      ->capture_default_str();
  s->add_option("--method", sweep.method, "greedy | wspd")
      ->check(CLI::IsMember({"greedy", "wspd"}))
      ->capture_default_str();
  s->add_option("--tol", sweep.tol, "Absolute ratio tolerance")->capture_default_str();
  s->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)");
  s->add_option("--out", sweep.out, "Output CSV path");
  s->callback([&] { action = [&] { return cmd_sweep(sweep, out, err); }; });

  std::vector<const char*> argv{"hfspan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace hfspan::cli
