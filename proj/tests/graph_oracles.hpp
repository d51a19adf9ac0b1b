#pragma once

#include "pcdpe/graph.hpp"

namespace pcdpe::testhelp {

// Independent exhaustive minimum-dominating-set search: plain scan over all
// vertex subsets, coverage recomputed from the arc/edge table directly.
inline int domination_oracle(const PcDigraph& d) {
  const int n = d.order();
  const std::uint32_t all = (1u << n) - 1u;
  int best = n;
  for (std::uint32_t s = 1; s <= all; ++s) {
    const int size = __builtin_popcount(s);
    if (size >= best) continue;
    std::uint32_t covered = s;
    for (int i = 0; i < n; ++i) {
      if (!(s & (1u << i))) continue;
      for (int j = 0; j < n; ++j) {
        if (j != i && d.arc(i, j)) covered |= 1u << j;
      }
    }
    if (covered == all) best = size;
  }
  return best;
}

inline int domination_oracle(const UnderlyingGraph& g) {
  const int n = g.order();
  const std::uint32_t all = (1u << n) - 1u;
  int best = n;
  for (std::uint32_t s = 1; s <= all; ++s) {
    const int size = __builtin_popcount(s);
    if (size >= best) continue;
    std::uint32_t covered = s;
    for (int i = 0; i < n; ++i) {
      if (!(s & (1u << i))) continue;
      for (int j = 0; j < n; ++j) {
        if (j != i && g.edge(i, j)) covered |= 1u << j;
      }
    }
    if (covered == all) best = size;
  }
  return best;
}

}  // namespace pcdpe::testhelp
