#pragma once

#include <algorithm>
#include <span>
#include <vector>

namespace romdom {

// Vertex sets are sorted, duplicate-free vectors of indices.

inline bool set_contains(std::span<const int> s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline std::vector<int> set_union(std::span<const int> a,
                                  std::span<const int> b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline std::vector<int> set_difference(std::span<const int> a,
                                       std::span<const int> b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline std::vector<int> set_intersection(std::span<const int> a,
                                         std::span<const int> b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace romdom
