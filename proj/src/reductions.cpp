#include "romdom/reductions.hpp"

#include <queue>
#include <stdexcept>

namespace romdom {

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

GadgetOutput gadget_perfect_domination_split(const Graph& g, int k) {
  int n = g.order();
  if (k > n)
    throw std::invalid_argument(
        "gadget_perfect_domination_split: k must be at most |V|");
  int t = 3 * n + 4;
  // primes 0..n-1; copy v_i at n + v*t + (i-1); then x, y, a_1..a_t,
  // b_1..b_t
  auto prime = [&](int v) { return v; };
  auto copy = [&](int v, int i) { return n + v * t + (i - 1); };
  int x = n + n * t;
  int y = x + 1;
  auto a_vert = [&](int i) { return y + i; };          // a_i, i in 1..t
  auto b_vert = [&](int i) { return y + t + i; };      // b_i
  int order = n + n * t + 2 + 2 * t;

  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= t; ++i) {
    es.emplace_back(x, a_vert(i));
    es.emplace_back(y, b_vert(i));
  }
  // v' adjacent to u_i for every u in N[v]
  for (int v = 0; v < n; ++v) {
    for (int i = 1; i <= t; ++i) es.emplace_back(prime(v), copy(v, i));
    for (int u : g.neighbors(v))
      for (int i = 1; i <= t; ++i) es.emplace_back(prime(v), copy(u, i));
  }
  // {x, y} and the primes form a clique
  std::vector<int> cl;
  cl.push_back(x);
  cl.push_back(y);
  for (int v = 0; v < n; ++v) cl.push_back(prime(v));
  for (size_t i = 0; i < cl.size(); ++i)
    for (size_t j = i + 1; j < cl.size(); ++j)
      es.emplace_back(cl[i], cl[j]);

  GadgetOutput out;
  out.graph = Graph(order, es);
  out.budget = static_cast<long long>(k) + n + 4;
  out.annotation["x"] = x;
  out.annotation["y"] = y;
  for (int v = 0; v < n; ++v) {
    out.annotation["prime:" + std::to_string(v)] = prime(v);
    out.annotation["copy:" + std::to_string(v) + ":1"] = copy(v, 1);
  }
  out.annotation["a:1"] = a_vert(1);
  out.annotation["b:1"] = b_vert(1);
  return out;
}

GadgetOutput gadget_irredundant_extension(const Graph& g, int k) {
  if (k < 1)
    throw std::invalid_argument("gadget_irredundant_extension: k must be >= 1");
  int n = g.order();
  // copy blocks V_1..V_{k+1} first, then u_1..u_k, then a, b, c, d
  auto copy = [&](int v, int i) { return (i - 1) * n + v; };  // i in 1..k+1
  auto u_vert = [&](int i) { return (k + 1) * n + (i - 1); };  // i in 1..k
  int a = (k + 1) * n + k;
  int b = a + 1;
  int c = a + 2;
  int d = a + 3;
  int order = (k + 1) * n + k + 4;

  std::vector<std::pair<int, int>> es;
  es.emplace_back(a, b);
  es.emplace_back(c, d);
  for (int v = 0; v < n; ++v)
    for (int i = 1; i <= k; ++i) {
      es.emplace_back(a, u_vert(i));
      es.emplace_back(copy(v, i), u_vert(i));
      es.emplace_back(copy(v, i), c);
      // closed neighborhood: v_i is adjacent to w_{k+1} for w in N[v]
      es.emplace_back(copy(v, i), copy(v, k + 1));
      for (int w : g.neighbors(v)) es.emplace_back(copy(v, i), copy(w, k + 1));
    }

  GadgetOutput out;
  out.graph = Graph(order, es);
  RomanFunction f(order, 0);
  for (int i = 1; i <= k; ++i) f.set(u_vert(i), 1);
  f.set(a, 2);
  f.set(c, 2);
  // b, d and all copies stay 0
  out.presolution = std::move(f);
  out.annotation["a"] = a;
  out.annotation["b"] = b;
  out.annotation["c"] = c;
  out.annotation["d"] = d;
  for (int i = 1; i <= k; ++i)
    out.annotation["u:" + std::to_string(i)] = u_vert(i);
  for (int v = 0; v < n; ++v)
    out.annotation["copy:" + std::to_string(v) + ":1"] = copy(v, 1);
  return out;
}

GadgetOutput gadget_multicolored_ds_extension(
    const Graph& g, const std::vector<std::vector<int>>& classes) {
  int n = g.order();
  int k = static_cast<int>(classes.size());
  {
    std::vector<char> seen(n, 0);
    for (const auto& cls : classes)
      for (int v : cls) {
        if (v < 0 || v >= n || seen[v])
          throw std::invalid_argument(
              "gadget_multicolored_ds_extension: classes must partition V");
        seen[v] = 1;
      }
    for (char s : seen)
      if (!s)
        throw std::invalid_argument(
            "gadget_multicolored_ds_extension: classes must cover V");
  }
  // first copies 0..n-1, second copies n..2n-1, then x_1..x_k, then a, b
  auto first = [&](int v) { return v; };
  auto second = [&](int v) { return n + v; };
  auto x_vert = [&](int j) { return 2 * n + j; };  // j in 0..k-1
  int a = 2 * n + k;
  int b = a + 1;
  int order = 2 * n + k + 2;

  std::vector<std::pair<int, int>> es;
  es.emplace_back(a, b);
  for (int v = 0; v < n; ++v) es.emplace_back(a, second(v));
  for (int j = 0; j < k; ++j)
    for (int v : classes[j]) es.emplace_back(first(v), x_vert(j));
  for (int v = 0; v < n; ++v) {
    es.emplace_back(first(v), second(v));  // u in N[v] includes v itself
    for (int u : g.neighbors(v)) es.emplace_back(first(v), second(u));
  }

  GadgetOutput out;
  out.graph = Graph(order, es);
  RomanFunction f(order, 0);
  for (int v = 0; v < n; ++v) {
    f.set(first(v), 1);
    f.set(second(v), 1);
  }
  f.set(a, 2);
  // X and b stay 0
  out.presolution = std::move(f);
  out.annotation["a"] = a;
  out.annotation["b"] = b;
  for (int j = 0; j < k; ++j)
    out.annotation["x:" + std::to_string(j + 1)] = x_vert(j);
  for (int v = 0; v < n; ++v) {
    out.annotation["first:" + std::to_string(v)] = first(v);
    out.annotation["second:" + std::to_string(v)] = second(v);
  }
  return out;
}

namespace {

bool is_dominating(const Graph& g, const std::vector<int>& d) {
  std::vector<char> dom(g.order(), 0);
  for (int v : d) {
    dom[v] = 1;
    for (int w : g.neighbors(v)) dom[w] = 1;
  }
  for (char x : dom)
    if (!x) return false;
  return true;
}

}  // namespace

bool has_perfect_dominating_set(const Graph& g, int k) {
  int n = g.order();
  if (n > 24)
    throw std::invalid_argument("has_perfect_dominating_set: graph too large");
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (static_cast<int>(__builtin_popcountl(mask)) > k) continue;
    std::vector<int> d;
    for (int v = 0; v < n; ++v)
      if (mask & (1UL << v)) d.push_back(v);
    if (!is_dominating(g, d)) continue;
    // perfect: pairwise disjoint closed neighborhoods
    if (is_two_packing(g, d)) return true;
  }
  return false;
}

bool has_irredundant_set(const Graph& g, int k) {
  int n = g.order();
  if (n > 24)
    throw std::invalid_argument("has_irredundant_set: graph too large");
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (static_cast<int>(__builtin_popcountl(mask)) != k) continue;
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
      if (mask & (1UL << v)) set.push_back(v);
    bool ok = true;
    for (int v : set)
      if (private_neighborhood(g, set, v).empty()) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

bool has_multicolored_dominating_set(
    const Graph& g, const std::vector<std::vector<int>>& classes) {
  for (const auto& cls : classes)
    if (cls.empty()) return false;
  std::vector<int> pick(classes.size(), 0);
  std::vector<int> d(classes.size());
  // product over the classes, one representative each
  while (true) {
    for (size_t j = 0; j < classes.size(); ++j) d[j] = classes[j][pick[j]];
    if (is_dominating(g, d)) return true;
    size_t j = 0;
    while (j < classes.size() &&
           ++pick[j] == static_cast<int>(classes[j].size())) {
      pick[j] = 0;
      ++j;
    }
    if (j == classes.size()) return false;
  }
}

}  // namespace romdom
