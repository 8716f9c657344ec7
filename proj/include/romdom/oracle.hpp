#pragma once

#include <functional>
#include <string>
#include <vector>

#include "romdom/graph.hpp"
#include "romdom/roman.hpp"

namespace romdom {

// Properties the brute-force oracle can enumerate, count and minimize over.
enum class Property {
  Rdf,
  Prdf,
  Urrdf,
  MinimalRdf,
  MinimalPrdf,
  TwoPacking,
};

Property parse_property(const std::string& name);
std::string property_name(Property p);

struct OracleLimits {
  int max_order = 12;
  int max_order_two_packing = 20;
};

// All satisfying functions in increasing digit-string order. The oracle
// stays deliberately naive: it walks all 3^n assignments (2^n subsets for
// 2-packings) and tests the definition.
std::vector<RomanFunction> brute_enumerate(const Graph& g, Property p,
                                           const OracleLimits& limits = {});

// All 2-packings in sorted-set (DFS inclusion) order.
std::vector<std::vector<int>> brute_enumerate_two_packings(
    const Graph& g, const OracleLimits& limits = {});

long long brute_count(const Graph& g, Property p,
                      const OracleLimits& limits = {});

// Minimum weight of a satisfying function; for Property::TwoPacking the
// score of a packing S is 2|S| + |V \ N[S]|.
int brute_min_weight(const Graph& g, Property p,
                     const OracleLimits& limits = {});

// Does some minimal perfect RDF extend f pointwise?
bool brute_extension(const Graph& g, const RomanFunction& f,
                     const OracleLimits& limits = {});

}  // namespace romdom
