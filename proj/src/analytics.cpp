#include "treeverse/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "treeverse/balanced.hpp"
#include "treeverse/graph_gen.hpp"

namespace treeverse {

namespace {

constexpr const char* kTernaryFormula = "14/3*n*log3(n)+200*n";
constexpr const char* kBinaryFullFormula = "7/2*k*n+n";
constexpr const char* kBinaryPrefixFormula = "7/2*k*n+4*n";

/// Edge and per-tag arc counts of every admissible prefix, read off one
/// generated digraph: an edge belongs to prefix m iff its larger end is < m.
struct PrefixCounts {
  std::vector<std::uint64_t> edges, g1, g2, g3, g4;

  explicit PrefixCounts(const GeneratedDigraph& d) {
    const std::size_t n = d.source.size();
    edges.assign(n + 1, 0);
    g1 = g2 = g3 = g4 = edges;
    const UndirectedGraph g = underlying(d);
    for (auto [a, b] : g.edges()) ++edges[std::max(a, b) + 1];
    for (const Arc& arc : d.arcs) {
      const std::size_t at = std::max(arc.from, arc.to) + 1;
      g1[at] += (arc.tags & kG1) != 0;
      g2[at] += (arc.tags & kG2) != 0;
      g3[at] += (arc.tags & kG3) != 0;
      g4[at] += (arc.tags & kG4) != 0;
    }
    for (auto* v : {&edges, &g1, &g2, &g3, &g4})
      for (std::size_t i = 1; i <= n; ++i) (*v)[i] += (*v)[i - 1];
  }

  BoundRow row(std::string family, int k, int m, std::string formula, double bound) const {
    BoundRow r{std::move(family), k, m, edges[m], g1[m], g2[m], g3[m], g4[m], std::move(formula), bound, 0};
    r.slack = bound - static_cast<double>(r.edges);
    return r;
  }
};

/// Up to `count` sizes spread over [lo, hi], both ends included.
std::vector<int> spread(int lo, int hi, int count) {
  std::set<int> picks;
  if (lo > hi) return {};
  if (count <= 1 || lo == hi) return {hi};
  for (int i = 0; i < count; ++i)
    picks.insert(lo + static_cast<int>(std::llround(static_cast<double>(hi - lo) * i / (count - 1))));
  return {picks.begin(), picks.end()};
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::uint64_t to_u64(const std::string& s) {
  std::size_t used = 0;
  const auto v = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw std::invalid_argument("malformed number '" + s + "'");
  return v;
}

const char* kCsvHeader = "family,k,n,edges,g1,g2,g3,g4,formula,bound,slack";

}  // namespace

bool BoundReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.slack >= -kBoundTolerance; });
}

BoundReport bound_table_ternary(int k_max, bool prefix_sweep, int per_level) {
  if (k_max < 1 || k_max > kTernaryGuard)
    throw std::invalid_argument("k_max must be in [1, " + std::to_string(kTernaryGuard) + "]");
  BoundReport report;
  for (int k = 1; k <= k_max; ++k) {
    const TypedTree t = build_typed_tree(k);
    const PrefixCounts counts(generate(t.tree, 2));
    const int n = t.tree.size();
    const std::vector<int> sizes = prefix_sweep ? spread(n / 3 + 1, n, per_level) : std::vector<int>{n};
    for (int m : sizes) {
      const double bound = 14.0 / 3.0 * m * (std::log(m) / std::log(3.0)) + 200.0 * m;
      report.rows.push_back(counts.row("ternary-typed", k, m, kTernaryFormula, bound));
    }
  }
  return report;
}

BoundReport bound_table_binary(int k_max, bool prefix_sweep, int per_level) {
  if (k_max < 0 || k_max > kBinaryGuard)
    throw std::invalid_argument("k_max must be in [0, " + std::to_string(kBinaryGuard) + "]");
  BoundReport report;
  for (int k = 0; k <= k_max; ++k) {
    const RootedTree t = perfect_binary(k);
    const PrefixCounts counts(generate(t, 0));
    const int n = t.size();
    if (prefix_sweep)
      for (int m : spread((n + 1) / 2, n - 1, per_level)) {
        if (m < 1) continue;
        report.rows.push_back(counts.row("binary", k, m, kBinaryPrefixFormula, 3.5 * k * m + 4.0 * m));
      }
    report.rows.push_back(counts.row("binary", k, n, kBinaryFullFormula, 3.5 * k * n + n));
  }
  return report;
}

std::string to_csv(const BoundReport& report) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : report.rows)
    os << r.family << ',' << r.k << ',' << r.n << ',' << r.edges << ',' << r.g1 << ',' << r.g2 << ',' << r.g3
       << ',' << r.g4 << ',' << r.formula << ',' << fmt_double(r.bound) << ',' << fmt_double(r.slack) << '\n';
  return os.str();
}

std::string to_json(const BoundReport& report, int indent) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"family", r.family},
                    {"k", r.k},
                    {"n", r.n},
                    {"edges", r.edges},
                    {"edges_by_type", {{"G1", r.g1}, {"G2", r.g2}, {"G3", r.g3}, {"G4", r.g4}}},
                    {"formula", r.formula},
                    {"bound", r.bound},
                    {"slack", r.slack}});
  return nlohmann::json{{"rows", rows}, {"ok", report.ok()}}.dump(indent);
}

std::string to_table(const BoundReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "family" << std::right << std::setw(4) << "k" << std::setw(8) << "n"
     << std::setw(10) << "edges" << std::setw(16) << "bound" << std::setw(16) << "slack" << '\n';
  os << std::fixed << std::setprecision(2);
  for (const auto& r : report.rows)
    os << std::left << std::setw(14) << r.family << std::right << std::setw(4) << r.k << std::setw(8) << r.n
       << std::setw(10) << r.edges << std::setw(16) << r.bound << std::setw(16) << r.slack << '\n';
  return os.str();
}

BoundReport parse_bound_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw std::invalid_argument("missing or unexpected CSV header");
  BoundReport report;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 11) throw std::invalid_argument("CSV row must have 11 fields: " + line);
    report.rows.push_back({f[0], static_cast<int>(to_u64(f[1])), static_cast<int>(to_u64(f[2])), to_u64(f[3]),
                           to_u64(f[4]), to_u64(f[5]), to_u64(f[6]), to_u64(f[7]), f[8], to_double(f[9]),
                           to_double(f[10])});
  }
  return report;
}

BoundReport parse_bound_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  BoundReport report;
  for (const auto& r : j.at("rows")) {
    const auto& t = r.at("edges_by_type");
    report.rows.push_back({r.at("family").get<std::string>(), r.at("k").get<int>(), r.at("n").get<int>(),
                           r.at("edges").get<std::uint64_t>(), t.at("G1").get<std::uint64_t>(),
                           t.at("G2").get<std::uint64_t>(), t.at("G3").get<std::uint64_t>(),
                           t.at("G4").get<std::uint64_t>(), r.at("formula").get<std::string>(),
                           r.at("bound").get<double>(), r.at("slack").get<double>()});
  }
  return report;
}

bool CounterexampleReport::ok() const {
  if (legacy_missing != expected_missing()) return false;
  if (six_vertex_complete.size() != 4) return false;
  return std::all_of(six_vertex_complete.begin(), six_vertex_complete.end(), [](const auto& p) { return p.second; });
}

namespace {

std::vector<std::pair<Vertex, Vertex>> missing_in(const UndirectedGraph& g, Vertex lo, Vertex hi) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a = lo; a < hi; ++a)
    for (Vertex b = a + 1; b < hi; ++b)
      if (!g.has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

}  // namespace

CounterexampleReport reproduce_counterexample() {
  CounterexampleReport r;
  const UndirectedGraph legacy = admissible_induced(legacy_generate(3), 11);
  r.legacy_missing = missing_in(legacy, 5, 11);
  for (int l = 2; l <= 5; ++l) {
    const UndirectedGraph six = admissible_induced(legacy_generate(l), 6);
    r.six_vertex_complete.emplace_back(l, six.edge_count() == 15);
  }
  const UndirectedGraph corrected = admissible_induced(generate(perfect_binary(3), 0), 11);
  r.corrected_missing = missing_in(corrected, 5, 11);
  return r;
}

GapReport edge_gap_summary(int k) {
  if (k < 0 || k > kGapGuard) throw std::invalid_argument("k must be in [0, " + std::to_string(kGapGuard) + "]");
  const RootedTree t = build_typed_tree(k).tree;
  GapReport r;
  r.k = k;
  r.n = t.size();
  r.edges_r2 = underlying(generate(t, 2)).edge_count();
  r.edges_r0 = underlying(generate(t, 0)).edge_count();
  r.gap = r.edges_r2 - r.edges_r0;
  r.limit = 32ull * static_cast<std::uint64_t>(r.n);
  return r;
}

}  // namespace treeverse
