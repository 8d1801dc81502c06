#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "mlines/graph_metrics.hpp"
#include "mlines/io.hpp"

using namespace mlines;

namespace {

struct Globals {
  std::string format = "auto";
  Dist scale = 1;
  std::size_t jobs = 1;
  std::string out;
  std::uint64_t seed = 1;
};

struct Instance {
  std::variant<MetricSpace, BetweennessRelation> space;
  std::optional<Graph> graph;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string detect_format(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw Error(ErrorCode::MalformedInput, "empty input");
  if (text[start] == '{') {
    const Json j = Json::parse(text);
    if (j.contains("dist")) return "metric-json";
    if (j.contains("triples")) return "betweenness-json";
    if (j.contains("adjacency")) return "graph-json";
    throw Error(ErrorCode::MalformedInput, "unrecognised JSON object");
  }
  const std::string first = text.substr(start, text.find('\n', start) - start);
  if (first.rfind(">>graph6<<", 0) == 0) return "graph6";
  if (first.find(',') != std::string::npos) return "csv";
  const bool printable = std::all_of(first.begin(), first.end(), [](char c) {
    return c == '\r' || (c >= 63 && c <= 126);
  });
  return printable ? "graph6" : "edgelist";
}

Instance load(const std::string& path, const Globals& g) {
  const std::string text = read_input(path);
  const std::string fmt = g.format == "auto" ? detect_format(text) : g.format;
  Instance inst{MetricSpace{}, std::nullopt};
  if (fmt == "metric-json") {
    inst.space = metric_from_json(Json::parse(text));
  } else if (fmt == "csv") {
    inst.space = metric_from_csv(text, g.scale);
  } else if (fmt == "betweenness-json") {
    inst.space = relation_from_json(Json::parse(text));
  } else {
    Graph graph = fmt == "graph6"       ? parse_graph6(text)
                  : fmt == "graph-json" ? graph_from_json(Json::parse(text))
                                        : parse_edge_list(text);
    inst.space = graph_metric(graph);
    inst.graph = std::move(graph);
  }
  return inst;
}

const MetricSpace& need_metric(const Instance& inst) {
  if (const auto* m = std::get_if<MetricSpace>(&inst.space)) return *m;
  throw Error(ErrorCode::NoDistances, "this command needs a metric space, not a bare betweenness");
}

std::vector<PointId> parse_points(const std::string& csv) {
  std::vector<PointId> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(static_cast<PointId>(std::stoul(item)));
  return out;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::MalformedInput, "cannot write " + g.out);
  f << text;
}

void emit_json(const Globals& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

std::string render_graph(const Graph& graph, const Globals& g) {
  if (g.format == "graph-json") return graph_to_json(graph).dump(2) + "\n";
  if (g.format == "edgelist") return to_edge_list(graph);
  return to_graph6(graph) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines in finite metric spaces and betweennesses"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Input/output format")
      ->check(CLI::IsMember({"auto", "metric-json", "csv", "betweenness-json", "graph-json", "graph6", "edgelist",
                             "matrix-json"}));
  app.add_option("--scale", g.scale, "Denominator for CSV matrices")->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write JSON here instead of stdout");
  app.add_option("--seed", g.seed, "Seed for randomized sweeps");

  std::string input = "-";
  int status = 0;
  std::function<void()> action;

  auto* validate = app.add_subcommand("validate", "Check metric or betweenness axioms")->require_subcommand(1);
  for (const char* kind : {"metric", "betweenness"}) {
    auto* sub = validate->add_subcommand(kind);
    sub->add_option("input", input);
    sub->callback([&, kind = std::string(kind)] {
      action = [&, kind] {
        const Instance inst = load(input, g);
        const bool is_metric = std::holds_alternative<MetricSpace>(inst.space);
        if (kind == "metric" && !is_metric) throw Error(ErrorCode::NoDistances, "input is a betweenness");
        Json j{{"valid", true}};
        if (is_metric) {
          const auto& m = std::get<MetricSpace>(inst.space);
          j["n"] = m.size();
          if (kind == "betweenness") j["betweenness"] = relation_to_json(induced_betweenness(m));
        } else {
          j["n"] = std::get<BetweennessRelation>(inst.space).size();
        }
        emit_json(g, j);
      };
    });
  }

  auto* lines_cmd = app.add_subcommand("lines", "Compute all distinct lines")->require_subcommand(1);
  for (const char* kind : {"compute", "count", "export"}) {
    auto* sub = lines_cmd->add_subcommand(kind);
    sub->add_option("input", input);
    sub->callback([&, kind = std::string(kind)] {
      action = [&, kind] {
        const Instance inst = load(input, g);
        std::visit(
            [&](const auto& s) {
              const LineSet lines = all_lines(s, g.jobs);
              const bool universal = lines.contains(PointSet::full(s.size()));
              std::cerr << s.size() << " points, " << lines.size() << " lines"
                        << (universal ? ", universal line present" : "") << "\n";
              if (kind == "count") {
                emit(g, std::to_string(lines.size()) + "\n");
              } else if (kind == "export") {
                emit_json(g, lines_to_json(lines));
              } else {
                emit_json(g, Json{{"n", s.size()},
                                  {"line_count", lines.size()},
                                  {"universal", universal},
                                  {"lines", lines_to_json(lines)}});
              }
            },
            inst.space);
      };
    });
  }

  std::string line_arg;
  auto* classify = app.add_subcommand("classify", "Classify generating pairs of one line");
  classify->add_option("input", input);
  classify->add_option("--line", line_arg, "Generating pair a,b")->required();
  classify->callback([&] {
    action = [&] {
      const Instance inst = load(input, g);
      const auto pts = parse_points(line_arg);
      if (pts.size() != 2) throw CLI::ValidationError("--line", "expects two points a,b");
      std::visit(
          [&](const auto& s) {
            const LineSet lines = all_lines(s, g.jobs);
            emit_json(g, classification_to_json(classify_line(s, lines, line(s, pts[0], pts[1]).members)));
          },
          inst.space);
    };
  });

  std::string geodesic_arg;
  std::optional<std::uint64_t> threshold;
  auto* witness = app.add_subcommand("witness", "Extract certified distinct lines")->require_subcommand(1);
  for (const char* kind : {"geodesic", "pseudometric", "metric", "bounded-distances", "3metric", "graph"}) {
    auto* sub = witness->add_subcommand(kind);
    sub->add_option("input", input);
    if (std::string(kind) == "geodesic") sub->add_option("--geodesic", geodesic_arg, "Points p1,...,pk (default: longest)");
    if (std::string(kind) == "metric") sub->add_option("--threshold", threshold, "Replaces ceil(n^0.9)");
    sub->callback([&, kind = std::string(kind)] {
      action = [&, kind] {
        const Instance inst = load(input, g);
        WitnessOptions opt;
        opt.threshold = threshold;
        opt.jobs = g.jobs;
        WitnessReport r;
        if (kind == "geodesic" || kind == "pseudometric") {
          r = std::visit(
              [&](const auto& s) {
                if (kind == "pseudometric") return witness_pseudometric(s, opt);
                return witness_from_geodesic(s, geodesic_arg.empty() ? longest_geodesic(s) : parse_points(geodesic_arg));
              },
              inst.space);
        } else {
          const MetricSpace& m = need_metric(inst);
          if (kind == "metric") r = witness_metric(m, opt);
          if (kind == "bounded-distances") r = witness_bounded_distances(m, opt);
          if (kind == "3metric") r = witness_3metric(m, opt);
          if (kind == "graph") r = witness_graph(m, opt);
        }
        std::cerr << r.construction << ": " << r.lines.size() << " lines, guaranteed " << r.guaranteed_count
                  << (r.verified_distinct ? ", distinct" : ", NOT DISTINCT") << "\n";
        emit_json(g, witness_to_json(r));
        if (!r.verified_distinct || r.guaranteed_count > r.lines.size()) status = 1;
      };
    });
  }

  std::size_t gen_size = 0;
  std::size_t detour = 0;
  std::size_t count = 1000;
  std::size_t max_n = 12;
  Dist max_dist = 6;
  auto* generate = app.add_subcommand("generate", "Write a graph or corpus")->require_subcommand(1);
  for (const char* kind : {"kpartite", "subdivided-path", "cycle", "path", "complete", "connected"}) {
    auto* sub = generate->add_subcommand(kind);
    sub->add_option("size", gen_size, "n, or s for subdivided-path")->required();
    if (std::string(kind) == "subdivided-path") sub->add_option("--detour", detour, "Detour length (default s+1)");
    sub->callback([&, kind = std::string(kind)] {
      action = [&, kind] {
        if (kind == "connected") {
          std::string text;
          for (const Graph& graph : enumerate_connected_graphs(gen_size)) text += render_graph(graph, g);
          emit(g, text);
          return;
        }
        const Graph graph = kind == "kpartite"          ? gen_complete_kpartite(gen_size)
                            : kind == "subdivided-path" ? gen_subdivided_path(gen_size, detour)
                            : kind == "cycle"           ? gen_cycle(gen_size)
                            : kind == "path"            ? gen_path(gen_size)
                                                        : gen_complete(gen_size);
        emit(g, render_graph(graph, g));
      };
    });
  }
  auto* gen_random = generate->add_subcommand("random", "Random metric spaces, one JSON object per line");
  gen_random->add_option("--count", count);
  gen_random->add_option("--max-n", max_n)->check(CLI::Range(2, 4096));
  gen_random->add_option("--max-dist", max_dist)->check(CLI::PositiveNumber);
  gen_random->callback([&] {
    action = [&] {
      std::mt19937_64 rng(g.seed);
      std::uniform_int_distribution<std::size_t> pick_n(2, max_n);
      std::string text;
      for (std::size_t i = 0; i < count; ++i) text += metric_to_json(random_metric(rng, pick_n(rng), max_dist)).dump() + "\n";
      emit(g, text);
    };
  });

  std::string checks = "conjecture,bounds";
  auto* verify = app.add_subcommand("verify", "Check the conjecture and the bounds")->require_subcommand(1);
  auto* v_conj = verify->add_subcommand("conjecture");
  v_conj->add_option("input", input);
  v_conj->callback([&] {
    action = [&] {
      const Instance inst = load(input, g);
      const ConjectureResult r = std::visit([&](const auto& s) { return verify_conjecture(s, g.jobs); }, inst.space);
      std::cerr << (r.holds ? "holds" : "VIOLATED") << "\n";
      emit_json(g, conjecture_to_json(r));
      if (!r.holds) status = 1;
    };
  });
  auto* v_bounds = verify->add_subcommand("bounds");
  v_bounds->add_option("input", input);
  v_bounds->callback([&] {
    action = [&] {
      const Instance inst = load(input, g);
      BoundReport r = std::visit([&](const auto& s) { return verify_bounds(s, g.jobs); }, inst.space);
      for (const auto& b : r.bounds) {
        std::cerr << b.name << " >= " << b.formula_value.str() << ": " << (b.satisfied ? "yes" : "no")
                  << (b.asserted ? " (asserted)" : "") << "\n";
      }
      emit_json(g, bound_report_to_json(r));
      if (!r.asserted_ok()) status = 1;
    };
  });
  auto run_scan = [&](std::istream& in, CorpusFormat format) {
    ScanOptions opt;
    opt.format = format;
    opt.jobs = g.jobs;
    opt.conjecture = opt.bounds = opt.witnesses = false;
    std::istringstream names(checks);
    for (std::string name; std::getline(names, name, ',');) {
      if (name == "conjecture") opt.conjecture = true;
      else if (name == "bounds") opt.bounds = true;
      else if (name == "witnesses") opt.witnesses = true;
      else throw CLI::ValidationError("--checks", name + " is not one of conjecture, bounds, witnesses");
    }
    std::ostringstream out;
    const ScanAggregate agg = scan_corpus(in, opt, out);
    emit(g, out.str());
    std::cerr << agg.instances << " instances, " << agg.parse_errors << " parse errors, "
              << agg.conjecture_violations << " conjecture violations, " << agg.bound_violations
              << " bound violations, " << agg.witness_failures << " witness failures, " << agg.seconds << " s\n";
    if (!agg.ok()) status = 1;
  };
  auto* v_scan = verify->add_subcommand("scan");
  v_scan->add_option("input", input);
  v_scan->add_option("--checks", checks, "Comma-separated: conjecture, bounds, witnesses");
  v_scan->callback([&] {
    action = [&] {
      const CorpusFormat format = g.format == "auto" ? CorpusFormat::Graph6 : parse_corpus_format(g.format);
      if (input == "-") {
        run_scan(std::cin, format);
      } else {
        std::ifstream f(input);
        if (!f) throw Error(ErrorCode::MalformedInput, "cannot read " + input);
        run_scan(f, format);
      }
    };
  });
  auto* v_random = verify->add_subcommand("random", "Scan random metric spaces");
  v_random->add_option("--count", count);
  v_random->add_option("--max-n", max_n)->check(CLI::Range(2, 4096));
  v_random->add_option("--max-dist", max_dist)->check(CLI::PositiveNumber);
  v_random->add_option("--checks", checks, "Comma-separated: conjecture, bounds, witnesses");
  v_random->callback([&] {
    action = [&] {
      std::mt19937_64 rng(g.seed);
      std::uniform_int_distribution<std::size_t> pick_n(2, max_n);
      std::stringstream corpus;
      for (std::size_t i = 0; i < count; ++i) corpus << metric_to_json(random_metric(rng, pick_n(rng), max_dist)).dump() << '\n';
      run_scan(corpus, CorpusFormat::MatrixJson);
    };
  });

  std::string family = "kpartite";
  std::vector<std::size_t> sizes;
  auto* fit = app.add_subcommand("fit", "Log-log scaling of line counts")->require_subcommand(1);
  auto* scaling = fit->add_subcommand("scaling");
  scaling->add_option("--family", family)->check(CLI::IsMember({"kpartite", "subdivided-path"}));
  scaling->add_option("--sizes", sizes, "n for kpartite, s for subdivided-path")->delimiter(',')->required();
  scaling->callback([&] {
    action = [&] {
      const ScalingFit f = scaling_fit(parse_family(family), sizes, g.jobs);
      std::cerr << family << " slope " << f.slope << (f.consistent ? "" : " (inconsistent with 4/3)") << "\n";
      emit_json(g, scaling_fit_to_json(f));
    };
  });

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
    for (auto* leaf : sub->get_subcommands([](const CLI::App*) { return true; })) leaf->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "MalformedInput: " << e.what() << "\n";
    return 1;
  }
  return status;
}
