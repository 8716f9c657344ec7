#pragma once

#include <optional>

#include "romdom/graph.hpp"
#include "romdom/roman.hpp"

namespace romdom {

struct SolveResult {
  int optimum = 0;
  RomanFunction witness;
};

// Minimum-weight unique-response RDF of a connected split graph: best
// clique singleton versus the all-ones function.
SolveResult solve_ur_split(const Graph& g, const SplitPartition& p);

// Budgeted perfect-Roman-domination on split graphs: branches the side the
// value-2 vertices avoid, completing the other side greedily. Returns a
// perfect RDF of weight <= k if one exists.
std::optional<RomanFunction> solve_prdf_split_fpt(const Graph& g,
                                                  const SplitPartition& p,
                                                  int k);

// Minimum-weight perfect RDF of a cobipartite graph; at most one value-2
// vertex per clique, so n^2 + n + 1 candidates suffice.
SolveResult solve_prdf_cobipartite(const Graph& g,
                                   const CobipartitePartition& p);

// Minimum-weight unique-response RDF of a cobipartite graph via the
// 2-packings with at most one vertex per clique.
SolveResult solve_ur_cobipartite(const Graph& g,
                                 const CobipartitePartition& p);

// Recursive extension solver: returns a minimal perfect RDF above f, or
// nullopt when none exists. A returned witness g obeys
// |V2(g) \ V2(f)| <= |V1(f)| and |V2(g)| <= weight(f).
std::optional<RomanFunction> extend_prdf(const Graph& g,
                                         const RomanFunction& f);

// Can f be extended without growing V_2? Holds iff every value-2 vertex has
// a private 0-neighbor and no value-1 vertex sees exactly one 2-neighbor.
bool extend_prdf_fixed_v2(const Graph& g, const RomanFunction& f);

// Exhaustive extension over the free positions (value-0 vertices range over
// {0,1,2}, value-1 over {1,2}); refuses when more than `cap` positions are
// free. Returns the first minimal perfect RDF in counter order.
std::optional<RomanFunction> extend_prdf_bounded(const Graph& g,
                                                 const RomanFunction& f,
                                                 int cap = 20);

}  // namespace romdom
