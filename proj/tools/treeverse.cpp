#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "treeverse/analytics.hpp"
#include "treeverse/balanced.hpp"
#include "treeverse/decomposition.hpp"
#include "treeverse/embedder.hpp"
#include "treeverse/graph_gen.hpp"
#include "treeverse/oracle.hpp"

using namespace treeverse;
using json = nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

RootedTree family_tree(const std::string& family, int k) {
  if (k < 0) throw UsageError("--k must be non-negative");
  if (family == "binary") return perfect_binary(k);
  if (family == "ternary-typed") return build_typed_tree(k).tree;
  throw UsageError("unknown family '" + family + "'");
}

RootedTree read_tree(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return parse_tree(buf.str());
}

std::string render(const BoundReport& r, const std::string& format) {
  if (format == "json") return to_json(r) + "\n";
  if (format == "table") return to_table(r);
  return to_csv(r);
}

std::string pairs(const std::vector<std::pair<Vertex, Vertex>>& p) {
  std::string s;
  for (auto [a, b] : p) s += (s.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
  return s.empty() ? "none" : s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal graphs for trees: generators, embedder, oracle and bound tables"};
  app.require_subcommand(1);

  std::string family = "ternary-typed", format, tree_file, guest_file;
  int k = 2, r = 2, k_max = 7, x = 0, y = 0, jobs = 0, prefix = 0;
  Vertex u = 0, x1 = 0, x2 = 0;
  bool legacy = false, prefix_sweep = false, as_json = false, interval = false, unsafe_large = false;

  auto* gen_tree = app.add_subcommand("gen-tree", "Print a tree of a family");
  gen_tree->add_option("--family", family)->check(CLI::IsMember({"binary", "ternary-typed"}));
  gen_tree->add_option("--k", k, "Level")->required();
  gen_tree->add_option("--format", format, "paren or csv")->check(CLI::IsMember({"paren", "csv"}));

  auto* gen_graph = app.add_subcommand("gen-graph", "Generate G^r of a tree");
  gen_graph->add_option("--family", family)->check(CLI::IsMember({"binary", "ternary-typed"}));
  gen_graph->add_option("--k", k, "Level");
  gen_graph->add_option("--tree", tree_file, "Tree file (overrides --family)");
  gen_graph->add_option("--r", r, "Radius");
  gen_graph->add_flag("--legacy", legacy, "Older three-rule generator on B(k)");
  gen_graph->add_option("--prefix", prefix, "Restrict to the first m preorder vertices");
  gen_graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* decompose = app.add_subcommand("decompose", "Bounded or feasible/critical component collection");
  decompose->add_option("--tree", tree_file, "Tree file")->required();
  decompose->add_option("--u", u, "Vertex to avoid");
  decompose->add_option("--x", x)->required();
  decompose->add_option("--y", y, "With y: feasible or critical; without: x <= |C| <= 2x - 1");

  auto* embed_cmd = app.add_subcommand("embed", "Admissible embedding into G^2 of a balanced host");
  embed_cmd->add_option("--host-family", family)->check(CLI::IsMember({"binary", "ternary-typed"}));
  embed_cmd->add_option("--k", k, "Host level")->required();
  embed_cmd->add_option("--guest", guest_file, "Guest tree file, - for stdin")->required();
  embed_cmd->add_option("--x1", x1);
  embed_cmd->add_option("--x2", x2);
  embed_cmd->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "Exhaustive (interval) universality check");
  verify->add_option("--family", family)->check(CLI::IsMember({"binary", "ternary-typed", "legacy"}));
  verify->add_option("--k", k)->required();
  verify->add_flag("--interval", interval, "Every block of consecutive preorder vertices");
  verify->add_option("--jobs", jobs, "Worker threads (default: TREEVERSE_JOBS, else all cores)");
  verify->add_flag("--unsafe-large", unsafe_large, "Lift the size guards");

  auto* bounds = app.add_subcommand("bounds", "Edge counts against the bounding formulas");
  bounds->add_option("--family", family)->check(CLI::IsMember({"binary", "ternary-typed"}));
  bounds->add_option("--k-max", k_max)->required();
  bounds->add_flag("--prefix-sweep", prefix_sweep);
  bounds->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "table"}));

  auto* counter = app.add_subcommand("counterexample", "Reproduce the legacy generator counterexample");
  counter->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* gap = app.add_subcommand("gap", "Edges radius 2 adds over radius 0 on T_k");
  gap->add_option("--k", k)->required();
  gap->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_tree) {
      const RootedTree t = family_tree(family, k);
      std::cout << (format == "csv" ? to_parent_csv(t) : to_paren_string(t)) << "\n";
      return 0;
    }

    if (*gen_graph) {
      GeneratedDigraph d = legacy ? legacy_generate(k)
                                  : generate(tree_file.empty() ? family_tree(family, k) : read_tree(tree_file), r);
      const int m = prefix > 0 ? prefix : d.source.size();
      if (format == "json") {
        if (prefix > 0) throw UsageError("--prefix is only supported with --format dot");
        std::cout << to_json(d, 2) << "\n";
      } else {
        std::cout << to_dot(admissible_induced(d, m), d.source.prefix(m));
      }
      return 0;
    }

    if (*decompose) {
      const Forest f = Forest::from_tree(read_tree(tree_file));
      ComponentCollection c;
      std::string kind;
      if (y > 0) {
        const ClassifiedCollection cc = find_feasible_or_critical(f, u, x, y);
        c = cc.collection;
        kind = to_string(cc.kind);
      } else {
        c = find_bounded_components(f, u, x);
        kind = "bounded";
      }
      json out{{"w", c.w}, {"u", c.u}, {"kind", kind}, {"union_size", c.union_size}, {"components", c.components}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*embed_cmd) {
      const auto host = make_host(family_tree(family, k));
      const RootedTree guest = read_tree(guest_file);
      const Embedding e = embed(host, guest, x1, x2);
      const bool phi2 = phi2_applies(host->tree, guest.size());
      const Verification v = verify_embedding(e, guest, x1, x2, phi2);
      if (as_json) {
        json out{{"map", e.map},
                 {"ok", v.ok},
                 {"admissible_complement", v.flags.admissible_complement},
                 {"phi1_ok", v.flags.phi1_ok},
                 {"phi2_applicable", v.flags.phi2_applicable},
                 {"phi2_ok", v.flags.phi2_ok},
                 {"diagnostics", v.diagnostics}};
        std::cout << out.dump(2) << "\n";
      } else {
        for (Vertex g = 0; g < guest.size(); ++g) std::cout << g << " -> " << e.map[g] << "\n";
        std::cout << "admissible_complement=" << v.flags.admissible_complement << " phi1=" << v.flags.phi1_ok
                  << " phi2_applicable=" << v.flags.phi2_applicable << " phi2=" << v.flags.phi2_ok << "\n";
        for (const auto& d : v.diagnostics) std::cout << "error: " << d << "\n";
      }
      return v.ok ? 0 : kExitViolation;
    }

    if (*verify) {
      const UndirectedGraph g = family == "legacy"      ? underlying(legacy_generate(k))
                                : family == "binary"    ? underlying(generate(perfect_binary(k), 0))
                                                        : underlying(generate(build_typed_tree(k).tree, 2));
      const OracleOptions opts{resolve_jobs(jobs), unsafe_large};
      UniversalityResult res;
      if (interval) {
        std::vector<Vertex> order(g.size());
        for (Vertex v = 0; v < g.size(); ++v) order[v] = v;
        res = is_interval_universal(g, order, opts);
      } else {
        res = is_universal(g, opts);
      }
      std::cout << (res.universal ? "universal" : "not universal") << " (" << res.trees_checked << " trees checked)\n";
      if (res.witness) {
        if (interval) std::cout << "interval start " << res.start << " size " << res.size << "\n";
        std::cout << "witness " << to_paren_string(*res.witness) << "\n";
      }
      return res.universal ? 0 : kExitViolation;
    }

    if (*bounds) {
      const BoundReport rep = family == "binary" ? bound_table_binary(k_max, prefix_sweep)
                                                 : bound_table_ternary(k_max, prefix_sweep);
      std::cout << render(rep, format);
      return rep.ok() ? 0 : kExitViolation;
    }

    if (*counter) {
      const CounterexampleReport rep = reproduce_counterexample();
      if (format == "json") {
        json six = json::object();
        for (auto [l, complete] : rep.six_vertex_complete) six[std::to_string(l)] = complete;
        json out{{"legacy_missing", rep.legacy_missing},
                 {"expected_missing", CounterexampleReport::expected_missing()},
                 {"six_vertex_complete", six},
                 {"corrected_missing", rep.corrected_missing},
                 {"ok", rep.ok()}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "legacy G(3), 11-vertex prefix, missing on 5..10: " << pairs(rep.legacy_missing) << "\n";
        for (auto [l, complete] : rep.six_vertex_complete)
          std::cout << "legacy G(" << l << ") first six vertices complete: " << (complete ? "yes" : "no") << "\n";
        std::cout << "corrected B(3), r=0, missing on 5..10: " << pairs(rep.corrected_missing) << "\n";
      }
      return rep.ok() ? 0 : kExitViolation;
    }

    if (*gap) {
      const GapReport rep = edge_gap_summary(k);
      if (format == "json") {
        json out{{"k", rep.k},         {"n", rep.n},   {"edges_r2", rep.edges_r2}, {"edges_r0", rep.edges_r0},
                 {"gap", rep.gap},     {"limit", rep.limit}, {"ok", rep.ok()}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "k=" << rep.k << " n=" << rep.n << " r2=" << rep.edges_r2 << " r0=" << rep.edges_r0
                  << " gap=" << rep.gap << " limit=" << rep.limit << "\n";
      }
      return rep.ok() ? 0 : kExitViolation;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
  return 0;
}
