#include "romdom/enum_minimal.hpp"

#include <algorithm>

namespace romdom {

RomanFunction rdf_from_v2(const Graph& g, std::span<const int> s) {
  RomanFunction f(g.order(), 1);
  for (int v : s) f.set(v, 2);
  for (int v : s)
    for (int w : g.neighbors(v))
      if (f[w] != 2) f.set(w, 0);
  return f;
}

bool v2_candidate_feasible(const Graph& g, std::span<const int> s) {
  std::vector<char> in_s(g.order(), 0);
  for (int v : s) in_s[v] = 1;
  std::vector<int> s_neighbors(g.order(), 0);
  for (int v : s)
    for (int w : g.neighbors(v)) ++s_neighbors[w];
  // each member needs a private 0-neighbor: adjacent, outside S, and with
  // no second S-neighbor
  for (int v : s) {
    bool has_private = false;
    for (int w : g.neighbors(v))
      if (!in_s[w] && s_neighbors[w] == 1) {
        has_private = true;
        break;
      }
    if (!has_private) return false;
  }
  // S always dominates G[N[S]], and the private neighbors above witness
  // minimality of the domination, so nothing further to test.
  return true;
}

namespace {

struct StepBudgetExhausted {};

class MinimalRdfEnumerator {
 public:
  MinimalRdfEnumerator(const Graph& g, const SolutionSink& sink,
                       const EnumControl& control)
      : g_(g), sink_(sink), control_(control), in_s_(g.order(), 0),
        s_neighbors_(g.order(), 0) {}

  EnumOutcome run() {
    EnumOutcome out;
    try {
      visit(0);
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

  // A chosen vertex is doomed once no neighbor can still serve as its
  // private 0-neighbor in any completion (every neighbor is either chosen
  // or already has a second chosen neighbor).
  bool doomed() const {
    for (int v : chosen_) {
      bool open = false;
      for (int w : g_.neighbors(v))
        if (!in_s_[w] && s_neighbors_[w] == 1) {
          open = true;
          break;
        }
      if (!open) return true;
    }
    return false;
  }

  void visit(int next) {
    ++stats_.nodes;
    count_step();
    if (doomed()) return;
    if (next == g_.order()) {
      RomanFunction f = rdf_from_v2(g_, chosen_);
      ++stats_.solutions;
      stats_.gaps.push_back(stats_.steps - last_emit_steps_);
      last_emit_steps_ = stats_.steps;
      sink_(f);
      return;
    }
    visit(next + 1);  // leave `next` out
    in_s_[next] = 1;
    chosen_.push_back(next);
    for (int w : g_.neighbors(next)) ++s_neighbors_[w];
    visit(next + 1);
    for (int w : g_.neighbors(next)) --s_neighbors_[w];
    chosen_.pop_back();
    in_s_[next] = 0;
  }

  const Graph& g_;
  const SolutionSink& sink_;
  const EnumControl& control_;
  std::vector<char> in_s_;
  std::vector<int> s_neighbors_;
  std::vector<int> chosen_;
  EnumStats stats_;
  long long last_emit_steps_ = 0;
};

}  // namespace

EnumOutcome enumerate_minimal_rdf(const Graph& g, const SolutionSink& sink,
                                  const EnumControl& control) {
  MinimalRdfEnumerator e(g, sink, control);
  return e.run();
}

std::vector<RomanFunction> enumerate_minimal_rdf(const Graph& g) {
  std::vector<RomanFunction> out;
  enumerate_minimal_rdf(g, [&](const RomanFunction& f) { out.push_back(f); });
  return out;
}

EnumOutcome enumerate_minimal_prdf(const Graph& g, const SolutionSink& sink,
                                   const EnumControl& control) {
  return enumerate_minimal_rdf(
      g, [&](const RomanFunction& f) { sink(bijection_b(g, f)); }, control);
}

std::vector<RomanFunction> enumerate_minimal_prdf(const Graph& g) {
  std::vector<RomanFunction> out;
  enumerate_minimal_prdf(g, [&](const RomanFunction& f) { out.push_back(f); });
  return out;
}

}  // namespace romdom
