#include "romdom/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

#include "romdom/vertex_set.hpp"

namespace romdom {

Graph::Graph(int order, std::span<const std::pair<int, int>> edges)
    : adj_(order) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += static_cast<long long>(nb.size());
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

// Strips a trailing comment and surrounding whitespace; empty result means
// the line carries no data.
std::string strip_line(const std::string& raw) {
  std::string s = raw;
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back())))
    s.pop_back();
  size_t b = 0;
  while (b < s.size() && is_space(static_cast<unsigned char>(s[b]))) ++b;
  return s.substr(b);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_line(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw ParseError(lineno, "expected header 'n m'");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens after header");
      continue;
    }
    long long u, v;
    if (!(ls >> u >> v)) throw ParseError(lineno, "expected edge 'u v'");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing tokens after edge");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(lineno, "vertex index out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError(lineno, "more edges than declared");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno, "fewer edges than declared");
  return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<int> neighborhood(const Graph& g, int v, bool closed) {
  if (v < 0 || v >= g.order())
    throw std::invalid_argument("neighborhood: vertex out of range");
  std::vector<int> out = g.neighbors(v);
  if (closed) {
    out.push_back(v);
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<int> open_neighborhood(const Graph& g, std::span<const int> a) {
  std::vector<int> out;
  for (int v : a) out.insert(out.end(), g.neighbors(v).begin(),
                             g.neighbors(v).end());
  return sorted_unique(std::move(out));
}

std::vector<int> closed_neighborhood(const Graph& g, std::span<const int> a) {
  std::vector<int> out(a.begin(), a.end());
  for (int v : a) out.insert(out.end(), g.neighbors(v).begin(),
                             g.neighbors(v).end());
  return sorted_unique(std::move(out));
}

std::vector<int> private_neighborhood(const Graph& g, std::span<const int> a,
                                      int v) {
  if (!set_contains(a, v))
    throw std::invalid_argument("private_neighborhood: v not in A");
  std::vector<int> rest;
  rest.reserve(a.size() - 1);
  for (int u : a)
    if (u != v) rest.push_back(u);
  auto nv = neighborhood(g, v, /*closed=*/true);
  auto blocked = closed_neighborhood(g, rest);
  return set_difference(nv, blocked);
}

bool is_clique(const Graph& g, std::span<const int> vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_independent_set(const Graph& g, std::span<const int> vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_connected(const Graph& g) {
  int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == n;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool split_partition_valid(const Graph& g, const SplitPartition& p) {
  auto c = sorted_unique(p.clique);
  auto i = sorted_unique(p.independent);
  if (c.size() != p.clique.size() || i.size() != p.independent.size())
    return false;
  auto all = set_union(c, i);
  if (static_cast<int>(all.size()) != g.order() ||
      all.size() != c.size() + i.size())
    return false;
  return is_clique(g, c) && is_independent_set(g, i);
}

bool split_clique_maximal(const Graph& g, const SplitPartition& p) {
  for (int v : p.independent) {
    bool dominates_clique = true;
    for (int c : p.clique)
      if (!g.adjacent(v, c)) {
        dominates_clique = false;
        break;
      }
    if (dominates_clique) return false;
  }
  return true;
}

bool cobipartite_partition_valid(const Graph& g,
                                 const CobipartitePartition& p) {
  auto a = sorted_unique(p.clique_a);
  auto b = sorted_unique(p.clique_b);
  if (a.size() != p.clique_a.size() || b.size() != p.clique_b.size())
    return false;
  auto all = set_union(a, b);
  if (static_cast<int>(all.size()) != g.order() ||
      all.size() != a.size() + b.size())
    return false;
  return is_clique(g, a) && is_clique(g, b);
}

SplitPartition normalize_split_partition(const Graph& g, SplitPartition p) {
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t k = 0; k < p.independent.size(); ++k) {
      int v = p.independent[k];
      bool adj_all = true;
      for (int c : p.clique)
        if (!g.adjacent(v, c)) {
          adj_all = false;
          break;
        }
      if (adj_all) {  // smallest-index mover first (independent is sorted)
        p.independent.erase(p.independent.begin() + k);
        p.clique.insert(
            std::lower_bound(p.clique.begin(), p.clique.end(), v), v);
        moved = true;
        break;
      }
    }
  }
  return p;
}

std::optional<SplitPartition> recognize_split(const Graph& g) {
  int n = g.order();
  // Degree-sequence characterization: with degrees sorted descending and
  // m = max{ i : d_i >= i-1 }, the graph is split iff
  // sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and the m vertices of largest
  // degree then form a clique.
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  int m = 0;
  for (int i = 1; i <= n; ++i)
    if (g.degree(by_degree[i - 1]) >= i - 1) m = i;
  long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
  for (int i = 0; i < n; ++i) {
    if (i < m)
      lhs += g.degree(by_degree[i]);
    else
      rhs += g.degree(by_degree[i]);
  }
  if (lhs != rhs) return std::nullopt;
  SplitPartition p;
  p.clique.assign(by_degree.begin(), by_degree.begin() + m);
  p.independent.assign(by_degree.begin() + m, by_degree.end());
  p = normalize_split_partition(g, std::move(p));
  if (!split_partition_valid(g, p)) return std::nullopt;
  return p;
}

std::optional<CobipartitePartition> recognize_cobipartite(const Graph& g) {
  int n = g.order();
  // 2-color the complement; deterministic BFS from the lowest unvisited
  // vertex, root colored 0.
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (w == v || g.adjacent(v, w)) continue;  // complement edge v-w
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  CobipartitePartition p;
  for (int v = 0; v < n; ++v)
    (color[v] == 0 ? p.clique_a : p.clique_b).push_back(v);
  return p;
}

Graph generate_family(const std::string& name, int t) {
  std::vector<std::pair<int, int>> es;
  if (name == "split-family") {
    if (t < 1) throw std::invalid_argument("split-family requires t >= 1");
    // clique c_1..c_t = 0..t-1, independent v_1..v_2t = t..3t-1
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) es.emplace_back(i, j);
    for (int i = 1; i <= t; ++i) {
      es.emplace_back(i - 1, t + 2 * i - 2);  // c_i -- v_{2i-1}
      es.emplace_back(i - 1, t + 2 * i - 1);  // c_i -- v_{2i}
    }
    return Graph(3 * t, es);
  }
  if (name == "matching") {
    if (t < 1) throw std::invalid_argument("matching requires t >= 1");
    for (int i = 0; i < t; ++i) es.emplace_back(2 * i, 2 * i + 1);
    return Graph(2 * t, es);
  }
  if (name == "cocomplete-bipartite") {
    if (t < 1)
      throw std::invalid_argument("cocomplete-bipartite requires t >= 1");
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) {
        es.emplace_back(i, j);
        es.emplace_back(t + i, t + j);
      }
    return Graph(2 * t, es);
  }
  if (name == "remark-graph") {
    es = {{0, 2}, {1, 2}, {3, 2}, {4, 2}, {3, 5}, {4, 5}, {6, 5}, {7, 5}};
    return Graph(8, es);
  }
  if (name == "path") {
    if (t < 1) throw std::invalid_argument("path requires n >= 1");
    for (int i = 0; i + 1 < t; ++i) es.emplace_back(i, i + 1);
    return Graph(t, es);
  }
  if (name == "cycle") {
    if (t < 3) throw std::invalid_argument("cycle requires n >= 3");
    for (int i = 0; i + 1 < t; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(t - 1, 0);
    return Graph(t, es);
  }
  if (name == "star") {
    if (t < 1) throw std::invalid_argument("star requires n >= 1");
    for (int i = 1; i < t; ++i) es.emplace_back(0, i);
    return Graph(t, es);
  }
  if (name == "complete") {
    if (t < 1) throw std::invalid_argument("complete requires n >= 1");
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) es.emplace_back(i, j);
    return Graph(t, es);
  }
  throw std::invalid_argument("unknown family: " + name);
}

bool graph_well_formed(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const auto& nb = g.neighbors(v);
    if (!std::is_sorted(nb.begin(), nb.end())) return false;
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
    for (int w : nb) {
      if (w == v || w < 0 || w >= g.order()) return false;
      if (!g.adjacent(w, v)) return false;
    }
  }
  return true;
}

}  // namespace romdom
