#pragma once

#include <vector>

#include "geoconv/graph.hpp"

namespace geoconv {

/// Hop distances of a digraph; at(u, v) is the length of a shortest dipath
/// u -> v, or kUnreachable.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int at(int u, int v) const { return d_[index(u, v)]; }
  void set(int u, int v, int value) { d_[index(u, v)] = value; }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  int n_ = 0;
  std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Digraph& d);

/// Closed interval I[u,v]: u, v and every vertex on a u-v or v-u geodesic.
/// w is on a u-v geodesic iff dist(u,w) + dist(w,v) = dist(u,v) < infinity.
VertexSet interval(const Digraph& d, const DistanceMatrix& dist, int u, int v);

/// I[S], the union of I[u,v] over u, v in S. Throws on an empty S.
VertexSet interval_of_set(const Digraph& d, const DistanceMatrix& dist,
                          const VertexSet& s);
/// I^k[S]; k = 0 returns S.
VertexSet iterated_interval(const Digraph& d, const VertexSet& s, int k);
/// Smallest convex superset of S, the fixpoint of I. Throws on an empty S.
VertexSet convex_hull(const Digraph& d, const VertexSet& s);
/// I[S] is contained in S. The empty set is convex.
bool is_convex(const Digraph& d, const VertexSet& s);

/// Every in-neighbour u of v has an arc to every out-neighbour w != u of v.
bool is_extreme(const Digraph& d, int v);
VertexSet extreme_vertices(const Digraph& d);
VertexSet sources(const Digraph& d);
VertexSet sinks(const Digraph& d);

/// Precomputed I[u,v] for every pair, for repeated interval and hull queries
/// on one digraph. All queries work on raw masks.
class IntervalTable {
 public:
  explicit IntervalTable(const Digraph& d);
  IntervalTable(const Digraph& d, const DistanceMatrix& dist);

  int order() const { return n_; }
  const DistanceMatrix& distances() const { return dist_; }
  Mask pair(int u, int v) const { return table_[static_cast<std::size_t>(u) * n_ + v]; }
  /// I[S]; returns 0 for S = 0.
  Mask of_set(Mask s) const;
  Mask iterate(Mask s, int k) const;
  Mask hull(Mask s) const;
  bool convex(Mask s) const;

 private:
  int n_ = 0;
  DistanceMatrix dist_;
  std::vector<Mask> table_;
};

}  // namespace geoconv
