#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "romdom/graph.hpp"

namespace romdom {

// Total assignment V -> {0,1,2}.
class RomanFunction {
 public:
  RomanFunction() = default;
  explicit RomanFunction(int n, std::uint8_t fill = 0) : values_(n, fill) {}
  explicit RomanFunction(std::vector<std::uint8_t> values)
      : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  std::uint8_t operator[](int v) const { return values_[v]; }
  void set(int v, std::uint8_t value) { values_[v] = value; }
  const std::vector<std::uint8_t>& values() const { return values_; }

  int weight() const;
  std::vector<int> level_set(std::uint8_t value) const;  // V_0, V_1 or V_2

  std::string to_digits() const;

  bool operator==(const RomanFunction& other) const = default;
  // Lexicographic on the digit string; fixes the canonical oracle order.
  bool operator<(const RomanFunction& other) const {
    return values_ < other.values_;
  }

 private:
  std::vector<std::uint8_t> values_;
};

// Accepts a digit string "020..." of length n, or per-line "v value" pairs
// (unlisted vertices default to 0).
RomanFunction parse_function(std::string_view text, int order);

// f <= g pointwise.
bool pointwise_leq(const RomanFunction& f, const RomanFunction& g);

// Vertex set with pairwise distance >= 3 (equivalently, pairwise disjoint
// closed neighborhoods).
struct TwoPacking {
  std::vector<int> members;
};

bool is_two_packing(const Graph& g, std::span<const int> members);

// First violated condition with a witness vertex; nullopt means the
// predicate holds. The is_* wrappers below discard the diagnosis.
struct Violation {
  std::string condition;
  int vertex = -1;
};

std::optional<Violation> check_rdf(const Graph& g, const RomanFunction& f);
std::optional<Violation> check_prdf(const Graph& g, const RomanFunction& f);
std::optional<Violation> check_urrdf(const Graph& g, const RomanFunction& f);
std::optional<Violation> check_minimal_prdf(const Graph& g,
                                            const RomanFunction& f);
std::optional<Violation> check_minimal_rdf(const Graph& g,
                                           const RomanFunction& f);

bool is_rdf(const Graph& g, const RomanFunction& f);
bool is_prdf(const Graph& g, const RomanFunction& f);
bool is_urrdf(const Graph& g, const RomanFunction& f);
bool is_minimal_prdf(const Graph& g, const RomanFunction& f);
bool is_minimal_rdf(const Graph& g, const RomanFunction& f);

// 2 on S, 0 on N(S)\S, 1 on V\N[S]. Validates the 2-packing property of the
// input set; the result is always a unique-response RDF.
RomanFunction pack_to_urrdf(const Graph& g, const TwoPacking& s);

// Inverse direction: V_2(f) of a unique-response RDF is a 2-packing.
TwoPacking urrdf_to_pack(const Graph& g, const RomanFunction& f);

// Weight-monotone bijection between minimal RDFs and minimal perfect RDFs:
// V_2 stays fixed; 0-vertices with two or more 2-neighbors move to value 1
// (forward) and back to 0 (inverse).
RomanFunction bijection_b(const Graph& g, const RomanFunction& f);
RomanFunction bijection_b_inverse(const Graph& g, const RomanFunction& f);

}  // namespace romdom
