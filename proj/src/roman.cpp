#include "romdom/roman.hpp"

#include <algorithm>
#include <sstream>

namespace romdom {

int RomanFunction::weight() const {
  int w = 0;
  for (auto v : values_) w += v;
  return w;
}

std::vector<int> RomanFunction::level_set(std::uint8_t value) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (values_[v] == value) out.push_back(v);
  return out;
}

std::string RomanFunction::to_digits() const {
  std::string s(values_.size(), '0');
  for (size_t i = 0; i < values_.size(); ++i)
    s[i] = static_cast<char>('0' + values_[i]);
  return s;
}

RomanFunction parse_function(std::string_view text, int order) {
  // Single all-digit token: positional digit string.
  std::string trimmed;
  {
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<std::string> toks;
    while (in >> tok) toks.push_back(tok);
    if (toks.size() == 1 &&
        toks[0].find_first_not_of("012") == std::string::npos) {
      if (static_cast<int>(toks[0].size()) != order)
        throw std::invalid_argument(
            "function length " + std::to_string(toks[0].size()) +
            " does not match graph order " + std::to_string(order));
      std::vector<std::uint8_t> vals(order);
      for (int i = 0; i < order; ++i)
        vals[i] = static_cast<std::uint8_t>(toks[0][i] - '0');
      return RomanFunction(std::move(vals));
    }
  }
  // Otherwise: per-line "v value" pairs; unlisted vertices stay 0.
  RomanFunction f(order, 0);
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::istringstream ls(raw);
    long long v, val;
    if (!(ls >> v)) continue;  // blank line
    if (!(ls >> val)) throw ParseError(lineno, "expected 'vertex value'");
    if (v < 0 || v >= order) throw ParseError(lineno, "vertex out of range");
    if (val < 0 || val > 2) throw ParseError(lineno, "value not in {0,1,2}");
    f.set(static_cast<int>(v), static_cast<std::uint8_t>(val));
  }
  return f;
}

bool pointwise_leq(const RomanFunction& f, const RomanFunction& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("pointwise_leq: length mismatch");
  for (int v = 0; v < f.size(); ++v)
    if (f[v] > g[v]) return false;
  return true;
}

bool is_two_packing(const Graph& g, std::span<const int> members) {
  // Pairwise distance >= 3 means the closed neighborhoods never overlap.
  std::vector<char> covered(g.order(), 0);
  for (int s : members) {
    if (s < 0 || s >= g.order()) return false;
    if (covered[s]) return false;
    for (int w : g.neighbors(s))
      if (covered[w]) return false;
    covered[s] = 1;
    for (int w : g.neighbors(s)) covered[w] = 1;
  }
  return true;
}

namespace {

void require_same_order(const Graph& g, const RomanFunction& f,
                        const char* where) {
  if (f.size() != g.order())
    throw std::invalid_argument(std::string(where) +
                                ": function length does not match graph");
}

// Number of value-2 neighbors per vertex.
std::vector<int> two_neighbor_counts(const Graph& g, const RomanFunction& f) {
  std::vector<int> c2(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    if (f[v] == 2)
      for (int w : g.neighbors(v)) ++c2[w];
  return c2;
}

}  // namespace

std::optional<Violation> check_rdf(const Graph& g, const RomanFunction& f) {
  require_same_order(g, f, "check_rdf");
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] != 0) continue;
    bool dominated = false;
    for (int w : g.neighbors(v))
      if (f[w] == 2) {
        dominated = true;
        break;
      }
    if (!dominated) return Violation{"0-vertex without 2-neighbor", v};
  }
  return std::nullopt;
}

std::optional<Violation> check_prdf(const Graph& g, const RomanFunction& f) {
  require_same_order(g, f, "check_prdf");
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] != 0) continue;
    int two = 0;
    for (int w : g.neighbors(v))
      if (f[w] == 2) ++two;
    if (two != 1)
      return Violation{two == 0 ? "0-vertex without 2-neighbor"
                                : "0-vertex with several 2-neighbors",
                       v};
  }
  return std::nullopt;
}

std::optional<Violation> check_urrdf(const Graph& g, const RomanFunction& f) {
  require_same_order(g, f, "check_urrdf");
  if (auto bad = check_prdf(g, f)) return bad;
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] == 0) continue;
    for (int w : g.neighbors(v))
      if (f[w] == 2)
        return Violation{"positive-value vertex with 2-neighbor", v};
  }
  return std::nullopt;
}

std::optional<Violation> check_minimal_prdf(const Graph& g,
                                            const RomanFunction& f) {
  require_same_order(g, f, "check_minimal_prdf");
  auto c2 = two_neighbor_counts(g, f);
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] == 0 && c2[v] != 1)
      return Violation{"0-vertex without unique 2-neighbor", v};
    if (f[v] == 1 && c2[v] == 1)
      return Violation{"1-vertex with exactly one 2-neighbor", v};
    if (f[v] == 2) {
      bool has_zero_neighbor = false;
      for (int w : g.neighbors(v))
        if (f[w] == 0) {
          has_zero_neighbor = true;
          break;
        }
      if (!has_zero_neighbor)
        return Violation{"2-vertex without 0-neighbor", v};
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_minimal_rdf(const Graph& g,
                                           const RomanFunction& f) {
  require_same_order(g, f, "check_minimal_rdf");
  auto c2 = two_neighbor_counts(g, f);
  // 1: no 1-vertex inside N[V_2]
  for (int v = 0; v < g.order(); ++v)
    if (f[v] == 1 && c2[v] > 0)
      return Violation{"1-vertex adjacent to V2", v};
  // 2: each 2-vertex has a private neighbor besides itself in G[V0 u V2].
  // Within that induced graph, w is private for v exactly when w is a
  // 0-vertex whose only 2-neighbor is v.
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] != 2) continue;
    bool has_private = false;
    for (int w : g.neighbors(v))
      if (f[w] == 0 && c2[w] == 1) {
        has_private = true;
        break;
      }
    if (!has_private)
      return Violation{"2-vertex without private 0-neighbor", v};
  }
  // 3: V2 minimally dominates G[V0 u V2]. With condition 2 in place the
  // minimality half is implied; domination of the 0-vertices remains.
  for (int v = 0; v < g.order(); ++v)
    if (f[v] == 0 && c2[v] == 0)
      return Violation{"0-vertex not dominated by V2", v};
  return std::nullopt;
}

bool is_rdf(const Graph& g, const RomanFunction& f) {
  return !check_rdf(g, f).has_value();
}
bool is_prdf(const Graph& g, const RomanFunction& f) {
  return !check_prdf(g, f).has_value();
}
bool is_urrdf(const Graph& g, const RomanFunction& f) {
  return !check_urrdf(g, f).has_value();
}
bool is_minimal_prdf(const Graph& g, const RomanFunction& f) {
  return !check_minimal_prdf(g, f).has_value();
}
bool is_minimal_rdf(const Graph& g, const RomanFunction& f) {
  return !check_minimal_rdf(g, f).has_value();
}

RomanFunction pack_to_urrdf(const Graph& g, const TwoPacking& s) {
  if (!is_two_packing(g, s.members))
    throw std::invalid_argument("pack_to_urrdf: set is not a 2-packing");
  RomanFunction f(g.order(), 1);
  for (int v : s.members) {
    f.set(v, 2);
    for (int w : g.neighbors(v)) f.set(w, 0);
  }
  return f;
}

TwoPacking urrdf_to_pack(const Graph& g, const RomanFunction& f) {
  if (auto bad = check_urrdf(g, f))
    throw std::invalid_argument("urrdf_to_pack: not a unique-response RDF (" +
                                bad->condition + " at vertex " +
                                std::to_string(bad->vertex) + ")");
  return TwoPacking{f.level_set(2)};
}

RomanFunction bijection_b(const Graph& g, const RomanFunction& f) {
  if (!is_minimal_rdf(g, f))
    throw std::invalid_argument("bijection_b: input is not a minimal RDF");
  auto c2 = two_neighbor_counts(g, f);
  RomanFunction out = f;
  for (int v = 0; v < g.order(); ++v)
    if (f[v] == 0 && c2[v] >= 2) out.set(v, 1);
  return out;
}

RomanFunction bijection_b_inverse(const Graph& g, const RomanFunction& f) {
  if (!is_minimal_prdf(g, f))
    throw std::invalid_argument(
        "bijection_b_inverse: input is not a minimal perfect RDF");
  auto c2 = two_neighbor_counts(g, f);
  RomanFunction out = f;
  for (int v = 0; v < g.order(); ++v)
    if (f[v] == 1 && c2[v] >= 2) out.set(v, 0);
  return out;
}

}  // namespace romdom
