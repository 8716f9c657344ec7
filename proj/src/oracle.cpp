#include "romdom/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace romdom {

Property parse_property(const std::string& name) {
  if (name == "rdf") return Property::Rdf;
  if (name == "prdf") return Property::Prdf;
  if (name == "urrdf") return Property::Urrdf;
  if (name == "minimal-rdf") return Property::MinimalRdf;
  if (name == "minimal-prdf") return Property::MinimalPrdf;
  if (name == "2-packing") return Property::TwoPacking;
  throw std::invalid_argument("unknown property: " + name);
}

std::string property_name(Property p) {
  switch (p) {
    case Property::Rdf: return "rdf";
    case Property::Prdf: return "prdf";
    case Property::Urrdf: return "urrdf";
    case Property::MinimalRdf: return "minimal-rdf";
    case Property::MinimalPrdf: return "minimal-prdf";
    case Property::TwoPacking: return "2-packing";
  }
  return "?";
}

namespace {

using Values = std::vector<std::uint8_t>;

void require_order(const Graph& g, int limit, const char* what) {
  if (g.order() > limit)
    throw std::invalid_argument(std::string("oracle refuses ") + what +
                                ": order " + std::to_string(g.order()) +
                                " exceeds limit " + std::to_string(limit));
}

// Walks all 3^n assignments as a base-3 counter over the digit string, i.e.
// in increasing lexicographic order.
template <class Fn>
void for_each_assignment(int n, Fn&& fn) {
  Values vals(n, 0);
  while (true) {
    fn(static_cast<const Values&>(vals));
    int i = n - 1;
    while (i >= 0 && vals[i] == 2) vals[i--] = 0;
    if (i < 0) break;
    ++vals[i];
  }
}

bool raw_is_rdf(const Graph& g, const Values& f) {
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] != 0) continue;
    bool dom = false;
    for (int w : g.neighbors(v))
      if (f[w] == 2) {
        dom = true;
        break;
      }
    if (!dom) return false;
  }
  return true;
}

bool raw_is_prdf(const Graph& g, const Values& f) {
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] != 0) continue;
    int two = 0;
    for (int w : g.neighbors(v))
      if (f[w] == 2 && ++two > 1) break;
    if (two != 1) return false;
  }
  return true;
}

bool raw_is_urrdf(const Graph& g, const Values& f) {
  if (!raw_is_prdf(g, f)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] == 0) continue;
    for (int w : g.neighbors(v))
      if (f[w] == 2) return false;
  }
  return true;
}

// Local minimality test (0-vertices see one 2, 1-vertices never exactly
// one, 2-vertices keep a 0-neighbor), allocation-free; the extension
// decider runs it on every candidate.
bool raw_is_minimal_prdf(const Graph& g, const Values& f) {
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] == 2) {
      bool zero_nb = false;
      for (int w : g.neighbors(v))
        if (f[w] == 0) {
          zero_nb = true;
          break;
        }
      if (!zero_nb) return false;
    } else {
      int two = 0;
      for (int w : g.neighbors(v))
        if (f[w] == 2 && ++two > 1) break;
      if (f[v] == 0 ? two != 1 : two == 1) return false;
    }
  }
  return true;
}

bool strictly_below(const Values& a, const Values& b) {
  bool strict = false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

// All assignments satisfying the base predicate, then pointwise-minimality
// by pairwise comparison against the full list. Deliberately brute.
std::vector<Values> satisfying(const Graph& g, Property p) {
  std::vector<Values> base;
  bool want_minimal =
      p == Property::MinimalRdf || p == Property::MinimalPrdf;
  auto pred = [&](const Values& f) {
    switch (p) {
      case Property::Rdf:
      case Property::MinimalRdf: return raw_is_rdf(g, f);
      case Property::Prdf:
      case Property::MinimalPrdf: return raw_is_prdf(g, f);
      case Property::Urrdf: return raw_is_urrdf(g, f);
      default: throw std::logic_error("satisfying: bad property");
    }
  };
  for_each_assignment(g.order(), [&](const Values& f) {
    if (pred(f)) base.push_back(f);
  });
  if (!want_minimal) return base;
  std::vector<Values> out;
  for (const auto& f : base) {
    bool minimal = true;
    for (const auto& h : base)
      if (strictly_below(h, f)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(f);
  }
  return out;
}

template <class Fn>
void for_each_two_packing(const Graph& g, Fn&& fn) {
  int n = g.order();
  std::vector<char> covered(n, 0);
  std::vector<int> current;
  // Emit-then-extend DFS yields sorted-set (inclusion-lex) order.
  auto rec = [&](auto&& self, int from) -> void {
    fn(static_cast<const std::vector<int>&>(current));
    for (int v = from; v < n; ++v) {
      if (covered[v]) continue;
      bool ok = true;
      for (int w : g.neighbors(v))
        if (covered[w]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      covered[v] = 1;
      for (int w : g.neighbors(v)) covered[w] = 1;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
      covered[v] = 0;
      for (int w : g.neighbors(v)) covered[w] = 0;
    }
  };
  rec(rec, 0);
}

int packing_score(const Graph& g, const std::vector<int>& s) {
  // 2|S| + |V \ N[S]|, the weight of the matching unique-response RDF.
  std::vector<char> covered(g.order(), 0);
  for (int v : s) {
    covered[v] = 1;
    for (int w : g.neighbors(v)) covered[w] = 1;
  }
  int outside = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!covered[v]) ++outside;
  return 2 * static_cast<int>(s.size()) + outside;
}

}  // namespace

std::vector<RomanFunction> brute_enumerate(const Graph& g, Property p,
                                           const OracleLimits& limits) {
  if (p == Property::TwoPacking)
    throw std::invalid_argument(
        "brute_enumerate: use brute_enumerate_two_packings for 2-packings");
  require_order(g, limits.max_order, property_name(p).c_str());
  std::vector<RomanFunction> out;
  for (auto& vals : satisfying(g, p)) out.emplace_back(std::move(vals));
  return out;
}

std::vector<std::vector<int>> brute_enumerate_two_packings(
    const Graph& g, const OracleLimits& limits) {
  require_order(g, limits.max_order_two_packing, "2-packing");
  std::vector<std::vector<int>> out;
  for_each_two_packing(g, [&](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

long long brute_count(const Graph& g, Property p, const OracleLimits& limits) {
  if (p == Property::TwoPacking) {
    require_order(g, limits.max_order_two_packing, "2-packing");
    long long c = 0;
    for_each_two_packing(g, [&](const std::vector<int>&) { ++c; });
    return c;
  }
  require_order(g, limits.max_order, property_name(p).c_str());
  return static_cast<long long>(satisfying(g, p).size());
}

int brute_min_weight(const Graph& g, Property p, const OracleLimits& limits) {
  if (p == Property::TwoPacking) {
    require_order(g, limits.max_order_two_packing, "2-packing");
    int best = std::numeric_limits<int>::max();
    for_each_two_packing(g, [&](const std::vector<int>& s) {
      best = std::min(best, packing_score(g, s));
    });
    return best;
  }
  require_order(g, limits.max_order, property_name(p).c_str());
  int best = std::numeric_limits<int>::max();
  for (const auto& vals : satisfying(g, p)) {
    int w = 0;
    for (auto x : vals) w += x;
    best = std::min(best, w);
  }
  if (best == std::numeric_limits<int>::max())
    throw std::runtime_error("no satisfying assignment");  // unreachable
  return best;
}

bool brute_extension(const Graph& g, const RomanFunction& f,
                     const OracleLimits& limits) {
  require_order(g, limits.max_order, "extension");
  if (f.size() != g.order())
    throw std::invalid_argument("brute_extension: length mismatch");
  int n = g.order();
  Values h(f.values());
  // mixed-radix counter over h >= f, digit v running f(v)..2
  while (true) {
    if (raw_is_minimal_prdf(g, h)) return true;
    int i = n - 1;
    while (i >= 0 && h[i] == 2) h[i] = f[i], --i;
    if (i < 0) return false;
    ++h[i];
  }
}

}  // namespace romdom
