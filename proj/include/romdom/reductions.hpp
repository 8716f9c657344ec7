#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "romdom/graph.hpp"
#include "romdom/roman.hpp"

namespace romdom {

// A constructed instance: the gadget graph plus, depending on the target
// problem, a pre-solution or a weight budget. The annotation maps the
// gadget's symbolic vertex names to indices.
struct GadgetOutput {
  Graph graph;
  std::optional<RomanFunction> presolution;
  std::optional<long long> budget;
  std::map<std::string, int> annotation;
};

// PERFECT DOMINATION (G, k) -> budgeted perfect Roman domination on a split
// graph. Layout: primes v' = 0..n-1, then the t copies per source vertex,
// then x, y, then the a-block and b-block. Requires k <= |V|.
GadgetOutput gadget_perfect_domination_split(const Graph& g, int k);

// IRREDUNDANT SET (G, k) -> extension instance on a bipartite graph.
// Layout: the k+1 copy blocks of V first, then u_1..u_k, then a,b,c,d.
// Requires k >= 1.
GadgetOutput gadget_irredundant_extension(const Graph& g, int k);

// MULTICOLORED DOMINATING SET (G, W_1..W_k) -> extension instance on a
// bipartite graph. Layout: first copies v_1 = 0..n-1, second copies
// v_2 = n..2n-1, then x_1..x_k, then a, b.
GadgetOutput gadget_multicolored_ds_extension(
    const Graph& g, const std::vector<std::vector<int>>& classes);

// Brute-force deciders for the source problems, used to cross-validate the
// gadgets at small scale.
bool has_perfect_dominating_set(const Graph& g, int k);
bool has_irredundant_set(const Graph& g, int k);
bool has_multicolored_dominating_set(
    const Graph& g, const std::vector<std::vector<int>>& classes);

// 2-colorability check used for the bipartiteness claims.
bool is_bipartite(const Graph& g);

}  // namespace romdom
