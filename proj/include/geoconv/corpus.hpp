#pragma once

#include <cstdint>
#include <vector>

#include "geoconv/graph.hpp"

namespace geoconv {

/// Largest order accepted by the corpus generator (the canonical code must fit
/// in 64 bits).
inline constexpr int kMaxCorpusOrder = 11;

/// Isomorphism-invariant code: the lexicographically greatest upper-triangle
/// adjacency word over all labellings reachable by individualisation and
/// colour refinement. Two graphs of the same order are isomorphic iff their
/// codes are equal. Requires n <= kMaxCorpusOrder.
std::uint64_t canonical_code(const Graph& g);

/// g relabelled so that its upper-triangle word equals canonical_code(g).
Graph canonical_form(const Graph& g);

/// One representative of every isomorphism class of connected graphs on n
/// vertices, in canonical form, sorted by canonical code.
std::vector<Graph> connected_graphs(int n);

}  // namespace geoconv
