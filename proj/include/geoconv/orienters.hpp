#pragma once

#include <functional>
#include <vector>

#include "geoconv/graph.hpp"

namespace geoconv {

// ---------------------------------------------------------------------------
// Extreme-free orientations of graphs with minimum degree 2.
// ---------------------------------------------------------------------------

/// Every chordless cycle of g, each listed from its smallest vertex with the
/// smaller of its two neighbours second. Cycles appear in depth-first
/// discovery order (start vertex ascending, neighbours ascending).
std::vector<std::vector<int>> induced_cycles(const Graph& g);

/// A maximal family of pairwise edge-disjoint chordless cycles, chosen
/// greedily from induced_cycles(g) in order.
std::vector<std::vector<int>> find_edge_disjoint_induced_cycles(const Graph& g);

/// Called after each construction step with the partial orientation so far.
using OrientationObserver = std::function<void(const PartialOrientation&)>;

/// Orientation of g with no extreme vertex.
///
/// 1. Orient a maximal packing of edge-disjoint chordless cycles as directed
///    cycles.
/// 2. While some vertex is untouched, take a shortest path u0..u{r+1} between
///    distinct oriented vertices whose interior is untouched, and direct it
///    u0 -> ... -> u{r+1}. When r = 1 and u0u2 is an edge, orient u0u2 first
///    (low -> high if still free) and close a directed triangle through u1.
/// 3. Orient leftover edges low -> high.
///
/// Throws PreconditionError when g has a vertex of degree below 2.
Digraph extreme_free_orientation(const Graph& g,
                                 const OrientationObserver& observe = {});

// ---------------------------------------------------------------------------
// The D1/D2 pair separating lower and upper geodetic and hull numbers.
// ---------------------------------------------------------------------------

/// Induced path v0 - v1 - v2 and the partition of the other vertices.
struct TripleSelection {
  int v0 = 0;
  int v1 = 0;
  int v2 = 0;
  VertexSet rest;  // V - {v0, v1, v2}
  VertexSet u1;    // adjacent to v1 only
  VertexSet u2;    // adjacent to v1 and v2
  VertexSet u3;    // adjacent to v2 only
  VertexSet u4;    // adjacent to u2, not to v1 or v2
  VertexSet u5;    // everything else
};

/// Lexicographically least induced P3 (smallest middle vertex v1, then the
/// smallest pair v0 < v2) with its partition. Throws PreconditionError if g
/// has none, i.e. every component is complete.
TripleSelection select_triple(const Graph& g);

/// Which directions of the edge {x, y} the D2 rule table derives. Intra-part
/// edges derive neither.
struct RuleVerdict {
  bool forward = false;   // x -> y
  bool backward = false;  // y -> x
};
RuleVerdict d2_rule(const TripleSelection& sel, int x, int y);

struct D2Construction {
  Digraph d2;
  TripleSelection selection;
};

/// Builds D2: edges leave v0 and v2, enter v1, U1 -> U - U1, U4 -> U2,
/// U4 -> U5, (U - U3) -> U3, and intra-part edges low -> high. Checks that no
/// edge gets two directions, v0 and v2 are sources and v1 is a sink.
/// Requires g connected, n >= 3 and not complete.
D2Construction d2_construction(const Graph& g);

/// D1: D2 with every arc at v2 reversed.
Digraph d1_from_d2(const Digraph& d2, const TripleSelection& sel);

// ---------------------------------------------------------------------------
// Complete graphs.
// ---------------------------------------------------------------------------

struct CompleteOrientations {
  Digraph max;  // transitive tournament i -> j iff i < j
  Digraph min;  // the same with the Hamiltonian path arcs i -> i+1 reversed
};

CompleteOrientations complete_graph_orientations(int n);

}  // namespace geoconv
