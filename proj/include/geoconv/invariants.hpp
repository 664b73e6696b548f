#pragma once

#include <cstdint>

#include "geoconv/geodesic.hpp"
#include "geoconv/orientation.hpp"

namespace geoconv {

/// An exact invariant value with the lexicographically least set attaining it.
struct SetResult {
  int value = 0;
  VertexSet witness;
};

/// Minimum |S| with I[S] = V. Extreme vertices lie in every geodetic set, so
/// the search only ranges over supersets of them.
SetResult geodetic_number(const Digraph& d);
SetResult geodetic_number(const IntervalTable& table, Mask extreme);

/// Minimum |S| with [S] = V, searched like geodetic_number.
SetResult hull_number(const Digraph& d);
SetResult hull_number(const IntervalTable& table, Mask extreme);

/// Size of a largest convex proper subset of V. Answers n-1 immediately when
/// some vertex is extreme. Throws PreconditionError for n < 2.
SetResult convexity_number(const Digraph& d);
SetResult convexity_number(const IntervalTable& table, Mask extreme);

struct DigraphInvariants {
  SetResult geodetic;
  SetResult hull;
  SetResult convexity;
};

/// g, h and con sharing one interval table.
DigraphInvariants digraph_invariants(const Digraph& d);

/// One extremal orientation: the value and the least orientation mask
/// attaining it (bit i reverses edge i of the graph).
struct Extremum {
  int value = 0;
  std::uint64_t mask = 0;
};

struct OrientableNumbers {
  Extremum g_min, g_max;
  Extremum h_min, h_max;
  Extremum con_min, con_max;
  std::uint64_t orientations = 0;
};

struct OrientableOptions {
  EnumerationOptions enumeration;
  /// Threads used to scan disjoint chunks of the orientation range. Results do
  /// not depend on this.
  int workers = 1;
};

/// Exact g-, g+, h-, h+, con-, con+ over all orientations of g.
/// Requires g connected with n >= 3; throws BudgetExceeded past the budget.
OrientableNumbers orientable_numbers(const Graph& g, OrientableOptions options = {});

}  // namespace geoconv
