#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace romdom {

// Simple undirected graph on vertices 0..n-1.
// Immutable once constructed: neighbor lists are sorted and duplicate-free,
// self-loops are rejected, adjacency is symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order) : adj_(order) {}
  Graph(int order, std::span<const std::pair<int, int>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  // Edges as (u,v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  long long edge_count_ = 0;
};

// Raised by parse_graph and parse_function with a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Clique/independent-set vertex partition of a split graph.
struct SplitPartition {
  std::vector<int> clique;
  std::vector<int> independent;
};

// Partition of the vertex set into two cliques.
struct CobipartitePartition {
  std::vector<int> clique_a;
  std::vector<int> clique_b;
};

// Edge-list format: line 1 "n m", then m lines "u v"; '#' starts a comment
// line, blank lines are skipped. Duplicate edges collapse silently,
// self-loops are an error.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

std::vector<int> neighborhood(const Graph& g, int v, bool closed);
std::vector<int> open_neighborhood(const Graph& g, std::span<const int> a);
std::vector<int> closed_neighborhood(const Graph& g, std::span<const int> a);

// N[v] \ N[A \ {v}]; requires v in A.
std::vector<int> private_neighborhood(const Graph& g, std::span<const int> a,
                                      int v);

bool is_clique(const Graph& g, std::span<const int> vs);
bool is_independent_set(const Graph& g, std::span<const int> vs);
bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);

// Validity = the two sets partition V, clique induces a complete subgraph,
// independent induces an edgeless one. Maximality of the clique is checked
// separately; normalize_split_partition establishes it.
bool split_partition_valid(const Graph& g, const SplitPartition& p);
bool split_clique_maximal(const Graph& g, const SplitPartition& p);
SplitPartition normalize_split_partition(const Graph& g, SplitPartition p);
bool cobipartite_partition_valid(const Graph& g,
                                 const CobipartitePartition& p);

// Returns a split partition with inclusion-wise maximal clique, or nullopt
// if the graph is not split. Deterministic for a fixed graph.
std::optional<SplitPartition> recognize_split(const Graph& g);

// Two-clique partition if the complement is bipartite, else nullopt.
std::optional<CobipartitePartition> recognize_cobipartite(const Graph& g);

// Named instance families:
//   split-family(t)          clique c_1..c_t, independent v_1..v_2t,
//                            c_i adjacent to v_{2i-1} and v_{2i}
//   matching(t)              t disjoint edges
//   cocomplete-bipartite(t)  two disjoint K_t (complement of K_{t,t})
//   remark-graph             fixed 8-vertex, 8-edge double-spider
//   path(n), cycle(n), star(n), complete(n)
Graph generate_family(const std::string& name, int t);

// Internal consistency check (symmetry, sortedness, no loops); used by tests.
bool graph_well_formed(const Graph& g);

}  // namespace romdom
