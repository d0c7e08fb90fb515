#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "twspan/abstract_graph.hpp"

namespace twspan {

// One pruning step, expressed in the vertex labels current at that step
// (labels shift down after each removal). `onto == nullopt` means the vertex
// was isolated and deleted.
struct ContractionStep {
  std::uint32_t vertex;
  std::optional<std::uint32_t> onto;
};

struct Minor3CoreResult {
  AbstractGraph core;
  std::vector<ContractionStep> trace;
};

inline AbstractGraph replay_contractions(AbstractGraph g,
                                         const std::vector<ContractionStep>& trace) {
  for (const ContractionStep& step : trace) {
    g = step.onto ? contract(g, step.vertex, *step.onto) : remove_vertex(g, step.vertex);
  }
  return g;
}

namespace detail {

template <typename PickVertex, typename PickNeighbor>
Minor3CoreResult minor3core_impl(const AbstractGraph& input, PickVertex pick_vertex,
                                 PickNeighbor pick_neighbor) {
  Minor3CoreResult result;
  result.core = input;
  for (;;) {
    std::vector<std::uint32_t> low;
    for (std::uint32_t v = 0; v < result.core.vertex_count(); ++v) {
      if (result.core.degree(v) <= 2) low.push_back(v);
    }
    if (low.empty()) break;
    const std::uint32_t v = pick_vertex(low);
    if (result.core.degree(v) == 0) {
      result.trace.push_back({v, std::nullopt});
      result.core = remove_vertex(result.core, v);
    } else {
      const std::uint32_t w = pick_neighbor(result.core.neighbors(v));
      result.trace.push_back({v, w});
      result.core = contract(result.core, v, w);
    }
  }
  return result;
}

}  // namespace detail

// Iteratively contract degree-<=2 vertices along an incident edge and delete
// isolated vertices, to exhaustion. The result has minimum degree >= 3 or is
// empty; it is the minor-3-core, unique up to isomorphism regardless of the
// rule order. Deterministic order: lowest qualifying vertex, contracted
// toward its lowest-index neighbor.
inline Minor3CoreResult minor3core(const AbstractGraph& g) {
  return detail::minor3core_impl(
      g, [](const std::vector<std::uint32_t>& low) { return low.front(); },
      [](const std::vector<std::uint32_t>& nbrs) { return nbrs.front(); });
}

/// Same pruning with a seeded random rule order; used to check order
/// invariance of the core.
inline Minor3CoreResult minor3core_randomized(const AbstractGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](const std::vector<std::uint32_t>& candidates) {
    std::uniform_int_distribution<std::size_t> d(0, candidates.size() - 1);
    return candidates[d(rng)];
  };
  return detail::minor3core_impl(g, pick, pick);
}

}  // namespace twspan
