#include "romdom/solvers.hpp"

#include <algorithm>
#include <stdexcept>

namespace romdom {

namespace {

std::vector<int> two_neighbor_counts_raw(const Graph& g,
                                         const RomanFunction& f) {
  std::vector<int> c2(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    if (f[v] == 2)
      for (int w : g.neighbors(v)) ++c2[w];
  return c2;
}

}  // namespace

SolveResult solve_ur_split(const Graph& g, const SplitPartition& p) {
  if (!split_partition_valid(g, p))
    throw std::invalid_argument("solve_ur_split: invalid partition");
  if (!is_connected(g))
    throw std::invalid_argument("solve_ur_split: graph must be connected");
  SplitPartition norm = normalize_split_partition(g, p);
  int n = g.order();

  int best = n;  // all-ones fallback
  int best_center = -1;
  for (int c : norm.clique) {
    // weight of the singleton solution at c: 2 + |I \ N(c)|
    int uncovered = 0;
    for (int v : norm.independent)
      if (!g.adjacent(c, v)) ++uncovered;
    int w = 2 + uncovered;
    // ties go to the singleton witness, then the lowest clique index
    if (best_center < 0 ? w <= best : w < best) {
      best = w;
      best_center = c;
    }
  }
  SolveResult res;
  res.optimum = best;
  res.witness = best_center >= 0
                    ? pack_to_urrdf(g, TwoPacking{{best_center}})
                    : RomanFunction(n, 1);
  return res;
}

namespace {

// Branches the undecided side over values {1,2} under the remaining budget,
// completing the opposite side with 0 where exactly one 2-neighbor exists
// and 1 otherwise. `side` gets branched, `other` completed.
class SplitBudgetSearch {
 public:
  SplitBudgetSearch(const Graph& g, int budget) : g_(g), budget_(budget) {}

  std::optional<RomanFunction> search(const std::vector<int>& side,
                                      const std::vector<int>& other,
                                      RomanFunction base, int spent) {
    side_ = &side;
    other_ = &other;
    f_ = std::move(base);
    return descend(0, spent);
  }

 private:
  std::optional<RomanFunction> descend(size_t idx, int spent) {
    if (spent > budget_) return std::nullopt;
    if (idx == side_->size()) return complete(spent);
    int v = (*side_)[idx];
    f_.set(v, 1);
    if (auto r = descend(idx + 1, spent + 1)) return r;
    f_.set(v, 2);
    if (auto r = descend(idx + 1, spent + 2)) return r;
    return std::nullopt;
  }

  std::optional<RomanFunction> complete(int spent) {
    RomanFunction f = f_;
    for (int v : *other_) {
      int two = 0;
      for (int w : g_.neighbors(v))
        if (f[w] == 2) ++two;
      if (two == 1) {
        f.set(v, 0);
      } else {
        f.set(v, 1);
        ++spent;
      }
    }
    if (spent > budget_) return std::nullopt;
    return f;
  }

  const Graph& g_;
  int budget_;
  const std::vector<int>* side_ = nullptr;
  const std::vector<int>* other_ = nullptr;
  RomanFunction f_;
};

}  // namespace

std::optional<RomanFunction> solve_prdf_split_fpt(const Graph& g,
                                                  const SplitPartition& p,
                                                  int k) {
  if (!split_partition_valid(g, p))
    throw std::invalid_argument("solve_prdf_split_fpt: invalid partition");
  SplitPartition norm = normalize_split_partition(g, p);
  const auto& clique = norm.clique;
  const auto& indep = norm.independent;
  int n = g.order();

  // One value-2 vertex in the clique: the cheapest completion assigns 0 to
  // its whole neighborhood and 1 elsewhere.
  for (int c : clique) {
    int w = 2 + (n - 1 - g.degree(c));
    if (w <= k) {
      RomanFunction f(n, 1);
      f.set(c, 2);
      for (int u : g.neighbors(c)) f.set(u, 0);
      return f;
    }
  }

  // V_2 avoids the clique: branch the independent side.
  {
    SplitBudgetSearch search(g, k);
    if (auto r = search.search(indep, clique, RomanFunction(n, 0), 0))
      return r;
  }

  // V_2 is at least two clique vertices: guess the pair, branch the rest of
  // the clique over {1,2}, complete the independent side.
  for (size_t i = 0; i < clique.size(); ++i) {
    for (size_t j = i + 1; j < clique.size(); ++j) {
      RomanFunction base(n, 0);
      base.set(clique[i], 2);
      base.set(clique[j], 2);
      std::vector<int> rest;
      for (size_t t = 0; t < clique.size(); ++t)
        if (t != i && t != j) rest.push_back(clique[t]);
      SplitBudgetSearch search(g, k);
      if (auto r = search.search(rest, indep, std::move(base), 4)) return r;
    }
  }
  return std::nullopt;
}

namespace {

// Completes a candidate V_2 set: non-members take 0 exactly when they see
// one 2-neighbor, 1 otherwise. Always a perfect RDF.
RomanFunction complete_prdf_from_v2(const Graph& g, std::span<const int> s) {
  RomanFunction f(g.order(), 1);
  std::vector<int> two(g.order(), 0);
  for (int v : s) {
    f.set(v, 2);
    for (int w : g.neighbors(v)) ++two[w];
  }
  for (int v = 0; v < g.order(); ++v)
    if (f[v] != 2 && two[v] == 1) f.set(v, 0);
  return f;
}

void consider(const Graph& g, std::span<const int> s, SolveResult& best,
              bool& first) {
  RomanFunction f = complete_prdf_from_v2(g, s);
  int w = f.weight();
  if (first || w < best.optimum) {
    best = SolveResult{w, std::move(f)};
    first = false;
  }
}

}  // namespace

SolveResult solve_prdf_cobipartite(const Graph& g,
                                   const CobipartitePartition& p) {
  if (!cobipartite_partition_valid(g, p))
    throw std::invalid_argument("solve_prdf_cobipartite: invalid partition");
  SolveResult best;
  bool first = true;
  consider(g, {}, best, first);
  for (int a : p.clique_a) consider(g, std::vector<int>{a}, best, first);
  for (int b : p.clique_b) consider(g, std::vector<int>{b}, best, first);
  for (int a : p.clique_a)
    for (int b : p.clique_b)
      consider(g, std::vector<int>{a, b}, best, first);
  return best;
}

SolveResult solve_ur_cobipartite(const Graph& g,
                                 const CobipartitePartition& p) {
  if (!cobipartite_partition_valid(g, p))
    throw std::invalid_argument("solve_ur_cobipartite: invalid partition");
  SolveResult best;
  bool first = true;
  auto consider_pack = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (!is_two_packing(g, s)) return;
    RomanFunction f = pack_to_urrdf(g, TwoPacking{std::move(s)});
    int w = f.weight();
    if (first || w < best.optimum) {
      best = SolveResult{w, std::move(f)};
      first = false;
    }
  };
  consider_pack({});
  for (int a : p.clique_a) consider_pack({a});
  for (int b : p.clique_b) consider_pack({b});
  for (int a : p.clique_a)
    for (int b : p.clique_b) consider_pack({a, b});
  return best;
}

bool extend_prdf_fixed_v2(const Graph& g, const RomanFunction& f) {
  if (f.size() != g.order())
    throw std::invalid_argument("extend_prdf_fixed_v2: length mismatch");
  auto c2 = two_neighbor_counts_raw(g, f);
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] == 2) {
      bool has_private = false;
      for (int w : g.neighbors(v))
        if (f[w] == 0 && c2[w] == 1) {
          has_private = true;
          break;
        }
      if (!has_private) return false;
    } else if (f[v] == 1 && c2[v] == 1) {
      return false;
    }
  }
  return true;
}

namespace {

std::optional<RomanFunction> extend_rec(const Graph& g,
                                        const RomanFunction& f) {
  auto c2 = two_neighbor_counts_raw(g, f);
  // every value-2 vertex needs a private 0-neighbor, or nothing above f can
  // be minimal
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] != 2) continue;
    bool has_private = false;
    for (int w : g.neighbors(v))
      if (f[w] == 0 && c2[w] == 1) {
        has_private = true;
        break;
      }
    if (!has_private) return std::nullopt;
  }
  // a value-1 vertex u with exactly one 2-neighbor cannot stay as it is:
  // either u itself becomes a 2 or a second 2 appears next to it. The
  // candidates therefore range over the closed neighborhood N[u] \ V_2.
  for (int u = 0; u < g.order(); ++u) {
    if (f[u] != 1 || c2[u] != 1) continue;
    for (int x : neighborhood(g, u, /*closed=*/true)) {
      if (f[x] == 2) continue;
      RomanFunction fx = f;
      fx.set(x, 2);
      if (auto r = extend_rec(g, fx)) return r;
    }
    return std::nullopt;
  }
  // stable: raise the 0-vertices that see no unique 2-neighbor to 1
  RomanFunction out = f;
  for (int v = 0; v < g.order(); ++v)
    if (f[v] == 0 && c2[v] != 1) out.set(v, 1);
  return out;
}

}  // namespace

std::optional<RomanFunction> extend_prdf(const Graph& g,
                                         const RomanFunction& f) {
  if (f.size() != g.order())
    throw std::invalid_argument("extend_prdf: length mismatch");
  return extend_rec(g, f);
}

std::optional<RomanFunction> extend_prdf_bounded(const Graph& g,
                                                 const RomanFunction& f,
                                                 int cap) {
  if (f.size() != g.order())
    throw std::invalid_argument("extend_prdf_bounded: length mismatch");
  int free = 0;
  for (int v = 0; v < g.order(); ++v)
    if (f[v] != 2) ++free;
  if (free > cap)
    throw std::invalid_argument(
        "extend_prdf_bounded: " + std::to_string(free) +
        " free positions exceed cap " + std::to_string(cap));
  RomanFunction h = f;
  int n = g.order();
  while (true) {
    if (is_minimal_prdf(g, h)) return h;
    int i = n - 1;
    while (i >= 0 && (f[i] == 2 || h[i] == 2)) {
      h.set(i, f[i]);
      --i;
    }
    if (i < 0) return std::nullopt;
    h.set(i, static_cast<std::uint8_t>(h[i] + 1));
  }
}

}  // namespace romdom
