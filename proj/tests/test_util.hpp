#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "romdom/graph.hpp"
#include "romdom/roman.hpp"

namespace romdom::testutil {

// Labeled graph from an edge-presence mask; pairs (u,v), u<v, in
// lexicographic order carry the bits.
inline Graph graph_from_mask(int n, unsigned long mask) {
  std::vector<std::pair<int, int>> es;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask & (1UL << bit)) es.emplace_back(u, v);
  return Graph(n, es);
}

inline int edge_slots(int n) { return n * (n - 1) / 2; }

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

// G(n,p) with every isolated vertex rewired to a random partner.
inline Graph random_isolate_free_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  Graph g(n, es);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) {
      int w = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      if (w >= v) ++w;
      es.emplace_back(v, w);
      g = Graph(n, es);
    }
  return g;
}

// Random spanning tree plus G(n,p) noise: connected, isolate-free for n>=2.
inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v)
    es.emplace_back(v, static_cast<int>(rng() % static_cast<unsigned>(v)));
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

// Connected split graph: clique 0..c-1, independent rest, every independent
// vertex attached to at least one clique vertex.
inline Graph random_split_graph(std::mt19937& rng, int n) {
  int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < c; ++u)
    for (int v = u + 1; v < c; ++v) es.emplace_back(u, v);
  std::bernoulli_distribution extra(0.3);
  for (int v = c; v < n; ++v) {
    int anchor = static_cast<int>(rng() % static_cast<unsigned>(c));
    es.emplace_back(anchor, v);
    for (int u = 0; u < c; ++u)
      if (u != anchor && extra(rng)) es.emplace_back(u, v);
  }
  return Graph(n, es);
}

inline Graph random_cobipartite_graph(std::mt19937& rng, int n) {
  int a = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) es.emplace_back(u, v);
  for (int u = a; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  std::bernoulli_distribution cross(0.4);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < n; ++v)
      if (cross(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

inline RomanFunction random_function(std::mt19937& rng, int n) {
  RomanFunction f(n);
  for (int v = 0; v < n; ++v)
    f.set(v, static_cast<std::uint8_t>(rng() % 3));
  return f;
}

inline std::vector<std::string> digit_set(const std::vector<RomanFunction>& fs) {
  std::vector<std::string> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.to_digits());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace romdom::testutil
