#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "romdom/graph.hpp"
#include "romdom/roman.hpp"

namespace romdom {

// Exact rational, only as reduced num/den; the branching measure needs
// fifths (weight constant 3/5) and exact comparisons in the debug checks.
struct Fraction {
  long long num = 0;
  long long den = 1;

  static Fraction of(long long num, long long den) {
    long long g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
  }
  bool operator==(const Fraction&) const = default;
};

// Where a vertex currently lives during the branching search.
enum class Slot : std::uint8_t {
  Undecided,      // still free
  ExcludedFrom2,  // will not take value 2; 0-or-1 open
  Zero,
  One,
  Two,
};

// The five-set search state. The sets partition V; measure is
// |undecided| + (3/5)|excluded|.
struct PartialState {
  std::vector<Slot> slot;
  int undecided = 0;
  int excluded = 0;

  static PartialState initial(int order) {
    PartialState s;
    s.slot.assign(order, Slot::Undecided);
    s.undecided = order;
    return s;
  }
  // 5 * measure, used for exact decrease assertions.
  long long measure_fifths() const {
    return 5LL * undecided + 3LL * excluded;
  }
};

Fraction measure(const PartialState& s);

struct EnumControl {
  long long step_limit = -1;   // < 0: unlimited
  bool verify_measure = false; // assert per-rule measure decreases
};

// Elementary steps are branching-node expansions plus reduction-rule
// applications; gaps has one entry per solution plus the closing gap, so
// its length is always solution count + 1.
struct EnumStats {
  long long nodes = 0;
  long long steps = 0;
  long long solutions = 0;
  std::vector<long long> gaps;

  long long max_gap() const {
    long long m = 0;
    for (long long g : gaps) m = std::max(m, g);
    return m;
  }
};

struct EnumOutcome {
  EnumStats stats;
  bool complete = true;  // false when the step budget ran out
};

using SolutionSink = std::function<void(const RomanFunction&)>;

// Branch-and-reduce enumeration of all unique-response RDFs of an
// isolate-free graph. Streams each solution exactly once.
EnumOutcome enumerate_urrdf(const Graph& g, const SolutionSink& sink,
                            const EnumControl& control = {});
std::vector<RomanFunction> enumerate_urrdf(const Graph& g);

// Specialized enumerator for connected split graphs: the clique-rooted
// solutions first, then a subset search over the independent side.
EnumOutcome enumerate_urrdf_split(const Graph& g, const SplitPartition& p,
                                  const SolutionSink& sink,
                                  const EnumControl& control = {});
std::vector<RomanFunction> enumerate_urrdf_split(const Graph& g,
                                                 const SplitPartition& p);

}  // namespace romdom
