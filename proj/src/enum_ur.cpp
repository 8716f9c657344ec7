#include "romdom/enum_ur.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace romdom {

Fraction measure(const PartialState& s) {
  return Fraction::of(s.measure_fifths(), 5);
}

namespace {

struct StepBudgetExhausted {};

// Minimum measure losses in fifths, per branching child, with the excluded
// set weighted 3/5: BR1 = (3, 1-w), BR2 = (2,2,2), BR3 = (1+w, 1).
constexpr long long kBr1TakeLoss = 15, kBr1BarLoss = 2;
constexpr long long kBr2Loss = 10;
constexpr long long kBr3TakeLoss = 8, kBr3OneLoss = 5;

class UrEnumerator {
 public:
  UrEnumerator(const Graph& g, const SolutionSink& sink,
               const EnumControl& control)
      : g_(g), sink_(sink), control_(control),
        state_(PartialState::initial(g.order())) {}

  EnumOutcome run() {
    EnumOutcome out;
    try {
      visit();
    } catch (const StepBudgetExhausted&) {
      out.complete = false;
    }
    stats_.gaps.push_back(stats_.steps - last_emit_steps_);
    out.stats = std::move(stats_);
    return out;
  }

 private:
  using Move = std::pair<int, Slot>;  // vertex, previous slot

  void count_step() {
    ++stats_.steps;
    if (control_.step_limit >= 0 && stats_.steps > control_.step_limit)
      throw StepBudgetExhausted{};
  }

  void move(int v, Slot to, std::vector<Move>& trail) {
    Slot from = state_.slot[v];
    if (from == to) return;
    trail.emplace_back(v, from);
    if (from == Slot::Undecided) --state_.undecided;
    if (from == Slot::ExcludedFrom2) --state_.excluded;
    if (to == Slot::Undecided) ++state_.undecided;
    if (to == Slot::ExcludedFrom2) ++state_.excluded;
    state_.slot[v] = to;
  }

  void undo(std::vector<Move>& trail) {
    while (!trail.empty()) {
      auto [v, from] = trail.back();
      trail.pop_back();
      Slot cur = state_.slot[v];
      if (cur == Slot::Undecided) --state_.undecided;
      if (cur == Slot::ExcludedFrom2) --state_.excluded;
      if (from == Slot::Undecided) ++state_.undecided;
      if (from == Slot::ExcludedFrom2) ++state_.excluded;
      state_.slot[v] = from;
    }
  }

  // v and all its neighbors take value 2 / 0; neighbors can only sit in
  // Undecided, ExcludedFrom2 or Zero here (One and Two are impossible:
  // assigning 2 clears the whole neighborhood into Zero, and a One vertex
  // never has undecided neighbors left).
  void assign_two(int v, std::vector<Move>& trail) {
    move(v, Slot::Two, trail);
    for (int w : g_.neighbors(v)) {
      assert(state_.slot[w] != Slot::One && state_.slot[w] != Slot::Two);
      move(w, Slot::Zero, trail);
    }
  }

  // RR1: two value-2 vertices with overlapping closed neighborhoods kill
  // the branch (V2 must stay a 2-packing).
  bool rr1_conflict() {
    std::vector<char> covered(g_.order(), 0);
    for (int v = 0; v < g_.order(); ++v) {
      if (state_.slot[v] != Slot::Two) continue;
      if (covered[v]) return true;
      for (int w : g_.neighbors(v))
        if (covered[w]) return true;
      covered[v] = 1;
      for (int w : g_.neighbors(v)) covered[w] = 1;
    }
    return false;
  }

  // RR2/RR3 fixpoint. RR2: an undecided vertex whose neighbors are all
  // decided can no longer take 2 (no private neighbor left). RR3: an
  // excluded vertex with no undecided closed neighbor must take 1.
  void reduce(std::vector<Move>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < g_.order() && !changed; ++v) {
        if (state_.slot[v] != Slot::Undecided) continue;
        bool free_nb = false;
        for (int w : g_.neighbors(v))
          if (state_.slot[w] == Slot::Undecided ||
              state_.slot[w] == Slot::ExcludedFrom2) {
            free_nb = true;
            break;
          }
        if (!free_nb) {
          count_step();
          move(v, Slot::ExcludedFrom2, trail);
          changed = true;
        }
      }
      if (changed) continue;
      for (int v = 0; v < g_.order() && !changed; ++v) {
        if (state_.slot[v] != Slot::ExcludedFrom2) continue;
        bool undecided_nb = false;
        for (int w : g_.neighbors(v))
          if (state_.slot[w] == Slot::Undecided) {
            undecided_nb = true;
            break;
          }
        if (!undecided_nb) {
          count_step();
          move(v, Slot::One, trail);
          changed = true;
        }
      }
    }
  }

  void emit() {
    RomanFunction f(g_.order());
    for (int v = 0; v < g_.order(); ++v) {
      assert(state_.slot[v] == Slot::Zero || state_.slot[v] == Slot::One ||
             state_.slot[v] == Slot::Two);
      f.set(v, state_.slot[v] == Slot::Two   ? 2
                : state_.slot[v] == Slot::One ? 1
                                              : 0);
    }
    ++stats_.solutions;
    stats_.gaps.push_back(stats_.steps - last_emit_steps_);
    last_emit_steps_ = stats_.steps;
    sink_(f);
  }

  void check_decrease(long long parent_fifths, long long required) {
    if (!control_.verify_measure) return;
    long long drop = parent_fifths - state_.measure_fifths();
    if (drop < required)
      throw std::logic_error("branching measure dropped by " +
                             std::to_string(drop) + "/5, expected >= " +
                             std::to_string(required) + "/5");
  }

  void visit() {
    ++stats_.nodes;
    count_step();
    std::vector<Move> trail;
    if (rr1_conflict()) {
      count_step();
      return;  // dead branch, nothing below can be a 2-packing
    }
    reduce(trail);
    if (state_.undecided == 0) {
      // RR3 drained ExcludedFrom2 once no undecided vertices remain.
      assert(state_.excluded == 0);
      emit();
      undo(trail);
      return;
    }
    long long fifths = state_.measure_fifths();

    // BR1: an undecided vertex with two undecided neighbors.
    int br1 = -1, br2 = -1, br2_partner = -1, br3 = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (state_.slot[v] != Slot::Undecided) continue;
      int undecided_deg = 0;
      int partner = -1;
      for (int w : g_.neighbors(v))
        if (state_.slot[w] == Slot::Undecided) {
          ++undecided_deg;
          partner = w;
        }
      if (undecided_deg >= 2) {
        br1 = v;
        break;
      }
      if (undecided_deg == 1 && br2 < 0) {
        // the partner has v as undecided neighbor; with BR1 exhausted the
        // pendant pair is automatically mutual
        br2 = v;
        br2_partner = partner;
      }
      if (undecided_deg == 0 && br3 < 0) br3 = v;
    }

    if (br1 >= 0) {
      {
        std::vector<Move> child;
        assign_two(br1, child);
        check_decrease(fifths, kBr1TakeLoss);
        visit();
        undo(child);
      }
      {
        std::vector<Move> child;
        move(br1, Slot::ExcludedFrom2, child);
        check_decrease(fifths, kBr1BarLoss);
        visit();
        undo(child);
      }
    } else if (br2 >= 0) {
      int v = br2, u = br2_partner;
      {
        std::vector<Move> child;
        assign_two(v, child);
        check_decrease(fifths, kBr2Loss);
        visit();
        undo(child);
      }
      {
        std::vector<Move> child;
        assign_two(u, child);
        check_decrease(fifths, kBr2Loss);
        visit();
        undo(child);
      }
      {
        std::vector<Move> child;
        move(v, Slot::One, child);
        move(u, Slot::One, child);
        check_decrease(fifths, kBr2Loss);
        visit();
        undo(child);
      }
    } else {
      // BR3; reductions guarantee an excluded neighbor exists.
      if (br3 < 0)
        throw std::logic_error("branching found no pivot; state invariant "
                               "broken");
      {
        std::vector<Move> child;
        assign_two(br3, child);
        check_decrease(fifths, kBr3TakeLoss);
        visit();
        undo(child);
      }
      {
        std::vector<Move> child;
        move(br3, Slot::One, child);
        check_decrease(fifths, kBr3OneLoss);
        visit();
        undo(child);
      }
    }
    undo(trail);
  }

  const Graph& g_;
  const SolutionSink& sink_;
  const EnumControl& control_;
  PartialState state_;
  EnumStats stats_;
  long long last_emit_steps_ = 0;
};

}  // namespace

EnumOutcome enumerate_urrdf(const Graph& g, const SolutionSink& sink,
                            const EnumControl& control) {
  if (has_isolated_vertex(g))
    throw std::invalid_argument(
        "enumerate_urrdf: graph has an isolated vertex; unique-response "
        "enumeration is defined for isolate-free graphs only");
  UrEnumerator e(g, sink, control);
  return e.run();
}

std::vector<RomanFunction> enumerate_urrdf(const Graph& g) {
  std::vector<RomanFunction> out;
  enumerate_urrdf(g, [&](const RomanFunction& f) { out.push_back(f); });
  return out;
}

namespace {

// Subset search over the independent side of a split graph. A leaf emits
// the packing through the urRDF correspondence on the original graph.
class SplitUrEnumerator {
 public:
  SplitUrEnumerator(const Graph& g, const SplitPartition& p,
                    const SolutionSink& sink, const EnumControl& control)
      : g_(g), part_(p), sink_(sink), control_(control),
        alive_(g.order(), 0), in_clique_(g.order(), 0) {}

  EnumOutcome run() {
    for (int c : part_.clique) in_clique_[c] = 1;
    for (int v : part_.clique) alive_[v] = 1;
    for (int v : part_.independent) alive_[v] = 1;
    EnumOutcome out;
    try {
      // Every 2-packing meeting the clique is a singleton {c}; those come
      // first.
      for (int c : part_.clique) {
        count_step();
        emit({c});
      }
      branch();
    } catch (const StepBudgetExhausted&) {
      out.complete = false;
    }
    stats_.gaps.push_back(stats_.steps - last_emit_steps_);
    out.stats = std::move(stats_);
    return out;
  }

 private:
  void count_step() {
    ++stats_.steps;
    if (control_.step_limit >= 0 && stats_.steps > control_.step_limit)
      throw StepBudgetExhausted{};
  }

  void emit(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    RomanFunction f = pack_to_urrdf(g_, TwoPacking{std::move(members)});
    ++stats_.solutions;
    stats_.gaps.push_back(stats_.steps - last_emit_steps_);
    last_emit_steps_ = stats_.steps;
    sink_(f);
  }

  int alive_degree(int v) const {
    int d = 0;
    for (int w : g_.neighbors(v))
      if (alive_[w]) ++d;
    return d;
  }

  // Remove clique vertices that lost all independent neighbors.
  void drop_spent_clique(std::vector<int>& removed) {
    for (int c : part_.clique) {
      if (!alive_[c]) continue;
      bool has_ind = false;
      for (int w : g_.neighbors(c))
        if (alive_[w] && !in_clique_[w]) {
          has_ind = true;
          break;
        }
      if (!has_ind) {
        alive_[c] = 0;
        removed.push_back(c);
      }
    }
  }

  void branch() {
    ++stats_.nodes;
    count_step();
    // pivot: alive independent vertex of maximum residual degree
    int pivot = -1, best_deg = -1;
    for (int v : part_.independent) {
      if (!alive_[v]) continue;
      int d = alive_degree(v);
      if (d > best_deg) {
        best_deg = d;
        pivot = v;
      }
    }
    if (pivot < 0) {
      emit(packing_);
      return;
    }

    std::vector<int> removed;
    // take pivot into the packing: everything within distance 2 dies
    alive_[pivot] = 0;
    removed.push_back(pivot);
    for (int u : g_.neighbors(pivot)) {
      if (alive_[u]) {
        alive_[u] = 0;
        removed.push_back(u);
      }
      for (int w : g_.neighbors(u))
        if (alive_[w] && !in_clique_[w]) {
          alive_[w] = 0;
          removed.push_back(w);
        }
    }
    drop_spent_clique(removed);
    packing_.push_back(pivot);
    branch();
    packing_.pop_back();
    for (int v : removed) alive_[v] = 1;

    removed.clear();
    alive_[pivot] = 0;
    removed.push_back(pivot);
    drop_spent_clique(removed);
    branch();
    for (int v : removed) alive_[v] = 1;
  }

  const Graph& g_;
  const SplitPartition& part_;
  const SolutionSink& sink_;
  const EnumControl& control_;
  std::vector<char> alive_;
  std::vector<char> in_clique_;
  std::vector<int> packing_;
  EnumStats stats_;
  long long last_emit_steps_ = 0;
};

}  // namespace

EnumOutcome enumerate_urrdf_split(const Graph& g, const SplitPartition& p,
                                  const SolutionSink& sink,
                                  const EnumControl& control) {
  if (!split_partition_valid(g, p))
    throw std::invalid_argument("enumerate_urrdf_split: invalid partition");
  if (!is_connected(g))
    throw std::invalid_argument(
        "enumerate_urrdf_split: graph must be connected");
  SplitPartition norm = normalize_split_partition(g, p);
  SplitUrEnumerator e(g, norm, sink, control);
  return e.run();
}

std::vector<RomanFunction> enumerate_urrdf_split(const Graph& g,
                                                 const SplitPartition& p) {
  std::vector<RomanFunction> out;
  enumerate_urrdf_split(g, p, [&](const RomanFunction& f) { out.push_back(f); });
  return out;
}

}  // namespace romdom
