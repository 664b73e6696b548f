#pragma once

#include <cstdint>
#include <functional>

#include "geoconv/graph.hpp"

namespace geoconv {

inline constexpr int kDefaultEdgeBudget = 20;

struct EnumerationOptions {
  int edge_budget = kDefaultEdgeBudget;
  /// Enumerate one of each {D, reverse(D)} pair by fixing edge 0 as low->high.
  /// g, h and con are invariant under reversing every arc.
  bool use_reversal_symmetry = false;
};

/// The orientations of a graph, addressed by position in [0, size()).
///
/// Position k maps to an orientation mask whose bit i reverses edge i. The
/// range can be cut into disjoint chunks for parallel consumers.
class OrientationSpace {
 public:
  /// Throws BudgetExceeded when g.size() exceeds the edge budget.
  OrientationSpace(const Graph& g, EnumerationOptions options = {});

  const Graph& graph() const { return *graph_; }
  std::uint64_t size() const { return size_; }
  bool symmetric() const { return symmetric_; }

  /// Orientation mask for position k.
  std::uint64_t mask_at(std::uint64_t k) const {
    return symmetric_ ? k << 1 : k;
  }
  Digraph at(std::uint64_t k) const {
    return Digraph::orientation(*graph_, mask_at(k));
  }

  /// Calls fn(mask, digraph) for positions [begin, end).
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<void(std::uint64_t, const Digraph&)>& fn) const;
  void for_each(const std::function<void(std::uint64_t, const Digraph&)>& fn) const {
    for_each(0, size_, fn);
  }

 private:
  const Graph* graph_;
  bool symmetric_ = false;
  std::uint64_t size_ = 0;
};

/// Collects every orientation. Convenience for tests and small graphs.
std::vector<Digraph> enumerate_orientations(const Graph& g,
                                            EnumerationOptions options = {});

}  // namespace geoconv
