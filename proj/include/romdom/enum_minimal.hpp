#pragma once

#include <span>
#include <vector>

#include "romdom/enum_ur.hpp"
#include "romdom/graph.hpp"
#include "romdom/roman.hpp"

namespace romdom {

// The unique function with V_2 = S, V_1 = V \ N[S], V_0 = N(S) \ S; every
// minimal RDF has this shape, so the set S determines the candidate.
RomanFunction rdf_from_v2(const Graph& g, std::span<const int> s);

// Does S induce a minimal RDF? Requires every member to keep a private
// 0-neighbor besides itself, and S to minimally dominate G[N[S]].
bool v2_candidate_feasible(const Graph& g, std::span<const int> s);

// All minimal Roman dominating functions, via a binary in/out search over
// candidate V_2 sets with private-neighbor pruning.
EnumOutcome enumerate_minimal_rdf(const Graph& g, const SolutionSink& sink,
                                  const EnumControl& control = {});
std::vector<RomanFunction> enumerate_minimal_rdf(const Graph& g);

// All minimal perfect Roman dominating functions: the image of the minimal
// RDFs under the weight-monotone bijection.
EnumOutcome enumerate_minimal_prdf(const Graph& g, const SolutionSink& sink,
                                   const EnumControl& control = {});
std::vector<RomanFunction> enumerate_minimal_prdf(const Graph& g);

}  // namespace romdom
