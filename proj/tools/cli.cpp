#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "romdom/enum_minimal.hpp"
#include "romdom/enum_ur.hpp"
#include "romdom/graph.hpp"
#include "romdom/oracle.hpp"
#include "romdom/reductions.hpp"
#include "romdom/roman.hpp"
#include "romdom/solvers.hpp"

namespace romdom {

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Shared graph-source flags: an edge-list file or a named family.
struct GraphSource {
  std::string file;
  std::string family;
  int t = 0;
  unsigned seed = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", file, "edge-list file");
    cmd->add_option("--family", family,
                    "generated family (split-family, matching, "
                    "cocomplete-bipartite, remark-graph, path, cycle, star, "
                    "complete, random)");
    cmd->add_option("--t", t, "family size parameter");
    cmd->add_option("--seed", seed, "seed for --family random");
  }

  Graph load() const {
    if (!family.empty()) {
      if (family == "random") {
        // G(t, 1/2), isolate-free by rewiring each isolated vertex
        std::mt19937 rng(seed);
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < t; ++u)
          for (int v = u + 1; v < t; ++v)
            if (rng() & 1u) es.emplace_back(u, v);
        Graph g(t, es);
        for (int v = 0; v < g.order(); ++v)
          if (g.degree(v) == 0 && t > 1) {
            int w = static_cast<int>(rng() % static_cast<unsigned>(t - 1));
            if (w >= v) ++w;
            es.emplace_back(v, w);
          }
        return Graph(t, es);
      }
      return generate_family(family, t);
    }
    if (file.empty())
      throw std::runtime_error("need --graph FILE or --family NAME --t N");
    return parse_graph(read_file(file));
  }
};

RomanFunction load_function(const std::string& spec, int order) {
  if (!spec.empty() && spec[0] == '@')
    return parse_function(read_file(spec.substr(1)), order);
  return parse_function(spec, order);
}

std::vector<int> parse_vertex_line(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> out;
  int v;
  while (in >> v) out.push_back(v);
  return out;
}

// Partition file: two lines of vertex indices (clique then independent for
// split graphs, the two cliques for cobipartite ones).
std::pair<std::vector<int>, std::vector<int>> load_two_sets(
    const std::string& path) {
  std::istringstream in(read_file(path));
  std::string l1, l2;
  if (!std::getline(in, l1)) throw std::runtime_error("empty partition file");
  if (!std::getline(in, l2)) l2.clear();
  return {parse_vertex_line(l1), parse_vertex_line(l2)};
}

SplitPartition get_split_partition(const Graph& g, const std::string& spec) {
  if (spec.empty() || spec == "auto") {
    auto p = recognize_split(g);
    if (!p) throw std::runtime_error("graph is not a split graph");
    return *p;
  }
  if (spec[0] != '@') throw std::runtime_error("--partition expects auto|@FILE");
  auto [a, b] = load_two_sets(spec.substr(1));
  return SplitPartition{a, b};
}

CobipartitePartition get_cobipartite_partition(const Graph& g,
                                               const std::string& spec) {
  if (spec.empty() || spec == "auto") {
    auto p = recognize_cobipartite(g);
    if (!p) throw std::runtime_error("graph is not cobipartite");
    return *p;
  }
  if (spec[0] != '@') throw std::runtime_error("--partition expects auto|@FILE");
  auto [a, b] = load_two_sets(spec.substr(1));
  return CobipartitePartition{a, b};
}

json stats_to_json(const EnumStats& stats, bool complete) {
  json j;
  j["solutions"] = stats.solutions;
  j["nodes"] = stats.nodes;
  j["steps"] = stats.steps;
  j["max_gap"] = stats.max_gap();
  j["gaps"] = stats.gaps;
  j["complete"] = complete;
  return j;
}

int cmd_check(const GraphSource& src, const std::string& property,
              const std::string& function_spec, const std::string& format,
              std::ostream& out) {
  Graph g = src.load();
  Property p = parse_property(property);
  bool ok;
  std::optional<Violation> why;
  if (p == Property::TwoPacking) {
    std::istringstream in(function_spec);
    std::vector<int> members;
    int v;
    while (in >> v) members.push_back(v);
    ok = is_two_packing(g, members);
  } else {
    RomanFunction f = load_function(function_spec, g.order());
    switch (p) {
      case Property::Rdf: why = check_rdf(g, f); break;
      case Property::Prdf: why = check_prdf(g, f); break;
      case Property::Urrdf: why = check_urrdf(g, f); break;
      case Property::MinimalRdf: why = check_minimal_rdf(g, f); break;
      case Property::MinimalPrdf: why = check_minimal_prdf(g, f); break;
      default: break;
    }
    ok = !why.has_value();
  }
  if (format == "json") {
    json j;
    j["holds"] = ok;
    if (why) {
      j["condition"] = why->condition;
      j["vertex"] = why->vertex;
    }
    out << j.dump() << '\n';
  } else {
    out << (ok ? "true" : "false");
    if (why) out << "  (" << why->condition << " at vertex " << why->vertex
                 << ")";
    out << '\n';
  }
  return ok ? kExitYes : kExitNo;
}

int cmd_solve(const GraphSource& src, const std::string& what, int budget,
              const std::string& partition, const std::string& format,
              std::ostream& out) {
  Graph g = src.load();
  if (what == "prdf-split-fpt") {
    auto p = get_split_partition(g, partition);
    auto r = solve_prdf_split_fpt(g, p, budget);
    if (format == "json") {
      json j;
      j["feasible"] = r.has_value();
      if (r) {
        j["witness"] = r->to_digits();
        j["weight"] = r->weight();
      }
      out << j.dump() << '\n';
    } else if (r) {
      out << r->to_digits() << '\n';
    } else {
      out << "no\n";
    }
    return r ? kExitYes : kExitNo;
  }
  SolveResult res;
  if (what == "ur-split") {
    res = solve_ur_split(g, get_split_partition(g, partition));
  } else if (what == "prdf-cobipartite") {
    res = solve_prdf_cobipartite(g, get_cobipartite_partition(g, partition));
  } else if (what == "ur-cobipartite") {
    res = solve_ur_cobipartite(g, get_cobipartite_partition(g, partition));
  } else {
    throw std::runtime_error("unknown solver: " + what);
  }
  if (format == "json") {
    json j;
    j["optimum"] = res.optimum;
    j["witness"] = res.witness.to_digits();
    out << j.dump() << '\n';
  } else {
    out << res.optimum << ' ' << res.witness.to_digits() << '\n';
  }
  return kExitYes;
}

int cmd_enumerate(const GraphSource& src, const std::string& what,
                  const std::string& partition, const std::string& format,
                  std::ostream& out) {
  Graph g = src.load();
  bool as_json = format == "json";
  long long count = 0;
  SolutionSink sink = [&](const RomanFunction& f) {
    ++count;
    if (!as_json) out << f.to_digits() << '\n';
  };
  std::vector<std::string> collected;
  if (as_json)
    sink = [&](const RomanFunction& f) {
      ++count;
      collected.push_back(f.to_digits());
    };
  EnumOutcome outcome;
  if (what == "urrdf") {
    outcome = enumerate_urrdf(g, sink);
  } else if (what == "urrdf-split") {
    outcome = enumerate_urrdf_split(g, get_split_partition(g, partition), sink);
  } else if (what == "minimal-rdf") {
    outcome = enumerate_minimal_rdf(g, sink);
  } else if (what == "minimal-prdf") {
    outcome = enumerate_minimal_prdf(g, sink);
  } else {
    throw std::runtime_error("unknown enumerator: " + what);
  }
  if (as_json) {
    json j;
    j["solutions"] = collected;
    j["stats"] = stats_to_json(outcome.stats, outcome.complete);
    out << j.dump() << '\n';
  }
  return kExitYes;
}

int cmd_extend(const GraphSource& src, const std::string& function_spec,
               bool brute, bool fixed_v2, bool bounded, int limit,
               const std::string& format, std::ostream& out) {
  Graph g = src.load();
  RomanFunction f = load_function(function_spec, g.order());
  if (fixed_v2) {
    bool ok = extend_prdf_fixed_v2(g, f);
    out << (ok ? "yes" : "no") << '\n';
    return ok ? kExitYes : kExitNo;
  }
  std::optional<RomanFunction> witness;
  if (brute) {
    OracleLimits limits;
    if (limit > 0) limits.max_order = limit;
    bool ok = brute_extension(g, f, limits);
    out << (ok ? "yes" : "no") << '\n';
    return ok ? kExitYes : kExitNo;
  }
  if (bounded) {
    witness = extend_prdf_bounded(g, f, limit > 0 ? limit : 20);
  } else {
    witness = extend_prdf(g, f);
  }
  if (format == "json") {
    json j;
    j["feasible"] = witness.has_value();
    if (witness) j["witness"] = witness->to_digits();
    out << j.dump() << '\n';
  } else if (witness) {
    out << witness->to_digits() << '\n';
  } else {
    out << "no\n";
  }
  return witness ? kExitYes : kExitNo;
}

int cmd_oracle(const GraphSource& src, const std::string& what,
               const std::string& mode, int limit, std::ostream& out) {
  Graph g = src.load();
  Property p = parse_property(what);
  OracleLimits limits;
  if (limit > 0) {
    limits.max_order = limit;
    limits.max_order_two_packing = limit;
  }
  if (mode == "count") {
    out << brute_count(g, p, limits) << '\n';
  } else if (mode == "min-weight") {
    out << brute_min_weight(g, p, limits) << '\n';
  } else if (mode == "enumerate") {
    if (p == Property::TwoPacking) {
      for (const auto& s : brute_enumerate_two_packings(g, limits)) {
        for (size_t i = 0; i < s.size(); ++i)
          out << (i ? " " : "") << s[i];
        out << '\n';
      }
    } else {
      for (const auto& f : brute_enumerate(g, p, limits))
        out << f.to_digits() << '\n';
    }
  } else {
    throw std::runtime_error("unknown oracle mode: " + mode);
  }
  return kExitYes;
}

int cmd_gadget(const GraphSource& src, const std::string& which, int k,
               const std::string& classes_file, const std::string& out_prefix,
               std::ostream& out) {
  Graph g = src.load();
  GadgetOutput gadget;
  if (which == "perfect-dom-split") {
    gadget = gadget_perfect_domination_split(g, k);
  } else if (which == "irredundant") {
    gadget = gadget_irredundant_extension(g, k);
  } else if (which == "multicolored-ds") {
    std::vector<std::vector<int>> classes;
    if (classes_file.empty())
      throw std::runtime_error("multicolored-ds needs --classes FILE");
    std::istringstream in(read_file(classes_file));
    std::string line;
    while (std::getline(in, line)) {
      auto vs = parse_vertex_line(line);
      if (!vs.empty()) classes.push_back(vs);
    }
    gadget = gadget_multicolored_ds_extension(g, classes);
  } else {
    throw std::runtime_error("unknown gadget: " + which);
  }
  json j;
  j["order"] = gadget.graph.order();
  j["edges"] = gadget.graph.edges();
  if (gadget.presolution) j["presolution"] = gadget.presolution->to_digits();
  if (gadget.budget) j["budget"] = *gadget.budget;
  j["annotation"] = gadget.annotation;
  if (!out_prefix.empty()) {
    std::ofstream(out_prefix + ".el") << serialize_graph(gadget.graph);
    if (gadget.presolution)
      std::ofstream(out_prefix + ".f") << gadget.presolution->to_digits()
                                       << '\n';
    std::ofstream(out_prefix + ".json") << j.dump(2) << '\n';
    out << "wrote " << out_prefix << ".el";
    if (gadget.presolution) out << ", " << out_prefix << ".f";
    out << ", " << out_prefix << ".json\n";
  } else {
    out << j.dump(2) << '\n';
  }
  return kExitYes;
}

int cmd_bench_delay(const GraphSource& src, const std::string& enumerator,
                    long long step_budget, const std::string& format,
                    std::ostream& out) {
  Graph g = src.load();
  EnumControl control;
  control.step_limit = step_budget;
  SolutionSink sink = [](const RomanFunction&) {};
  EnumOutcome outcome;
  if (enumerator == "urrdf") {
    outcome = enumerate_urrdf(g, sink, control);
  } else if (enumerator == "minimal-rdf") {
    outcome = enumerate_minimal_rdf(g, sink, control);
  } else if (enumerator == "minimal-prdf") {
    outcome = enumerate_minimal_prdf(g, sink, control);
  } else {
    throw std::runtime_error("unknown enumerator: " + enumerator);
  }
  if (format == "json") {
    json j = stats_to_json(outcome.stats, outcome.complete);
    j["enumerator"] = enumerator;
    j["order"] = g.order();
    out << j.dump() << '\n';
  } else {
    out << "enumerator: " << enumerator << "\norder: " << g.order()
        << "\nsolutions: " << outcome.stats.solutions
        << "\nsteps: " << outcome.stats.steps
        << "\nmax gap: " << outcome.stats.max_gap()
        << "\ncomplete: " << (outcome.complete ? "yes" : "no") << '\n';
  }
  return outcome.complete ? kExitYes : kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Roman domination variants: checkers, solvers, enumerators"};
  app.require_subcommand(1);

  GraphSource src;
  std::string property, function_spec, what, mode, format = "text";
  std::string partition = "auto", which, classes_file, out_prefix, enumerator;
  int budget = 0, k = 1, limit = 0;
  long long step_budget = -1;
  bool brute = false, fixed_v2 = false, bounded = false;

  auto* check = app.add_subcommand("check", "test a property of a function");
  src.attach(check);
  check->add_option("--property", property, "rdf, prdf, urrdf, minimal-rdf, "
                    "minimal-prdf or 2-packing")->required();
  check->add_option("--function", function_spec,
                    "digit string, @file, or vertex list for 2-packing")
      ->required();
  check->add_option("--format", format, "text or json");

  auto* solve = app.add_subcommand("solve", "optimize on a graph class");
  src.attach(solve);
  solve->add_option("--what", what, "ur-split, prdf-split-fpt, "
                    "prdf-cobipartite or ur-cobipartite")->required();
  solve->add_option("--budget", budget, "weight budget for prdf-split-fpt");
  solve->add_option("--partition", partition, "auto or @file");
  solve->add_option("--format", format, "text or json");

  auto* enumerate = app.add_subcommand("enumerate", "stream all solutions");
  src.attach(enumerate);
  enumerate->add_option("--what", what, "urrdf, urrdf-split, minimal-rdf or "
                        "minimal-prdf")->required();
  enumerate->add_option("--partition", partition, "auto or @file");
  enumerate->add_option("--format", format, "text or json");

  auto* extend = app.add_subcommand("extend",
                                    "minimal perfect RDF above a pre-solution");
  src.attach(extend);
  extend->add_option("--function", function_spec, "digit string or @file")
      ->required();
  extend->add_flag("--brute", brute, "use the exhaustive oracle");
  extend->add_flag("--fixed-v2", fixed_v2, "decide without growing V2");
  extend->add_flag("--bounded", bounded, "exhaustive over free positions");
  extend->add_option("--limit", limit, "oracle cap / free-position cap");
  extend->add_option("--format", format, "text or json");

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  src.attach(oracle);
  oracle->add_option("--what", what, "property")->required();
  oracle->add_option("--mode", mode, "enumerate, count or min-weight")
      ->required();
  oracle->add_option("--limit", limit, "order cap override");

  auto* gadget = app.add_subcommand("gadget", "hardness-gadget instances");
  src.attach(gadget);
  gadget->add_option("--which", which, "perfect-dom-split, irredundant or "
                     "multicolored-ds")->required();
  gadget->add_option("--k", k, "parameter of the source problem");
  gadget->add_option("--classes", classes_file,
                     "vertex classes, one line per class");
  gadget->add_option("--out", out_prefix, "write PREFIX.el/.f/.json");

  auto* bench = app.add_subcommand("bench-delay", "delay profile of an "
                                   "enumerator");
  src.attach(bench);
  bench->add_option("--enumerator", enumerator,
                    "urrdf, minimal-rdf or minimal-prdf")->required();
  bench->add_option("--step-budget", step_budget, "abort after this many "
                    "elementary steps");
  bench->add_option("--format", format, "text or json");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*check)
      return cmd_check(src, property, function_spec, format, out);
    if (*solve) return cmd_solve(src, what, budget, partition, format, out);
    if (*enumerate)
      return cmd_enumerate(src, what, partition, format, out);
    if (*extend)
      return cmd_extend(src, function_spec, brute, fixed_v2, bounded, limit,
                        format, out);
    if (*oracle) return cmd_oracle(src, what, mode, limit, out);
    if (*gadget)
      return cmd_gadget(src, which, k, classes_file, out_prefix, out);
    if (*bench)
      return cmd_bench_delay(src, enumerator, step_budget, format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace romdom
