#include "geoconv/geodesic.hpp"

namespace geoconv {
namespace {

void require_nonempty(const VertexSet& s) {
  if (s.empty()) throw Error("the interval operator is undefined on the empty set");
}

// Vertices on some u->v geodesic, excluding nothing (u and v included when
// v is reachable). Layers: dist(u,w) = i and dist(w,v) = D - i.
Mask geodesic_vertices(const DistanceMatrix& dist, int u, int v) {
  const int total = dist.at(u, v);
  if (total == DistanceMatrix::kUnreachable) return 0;
  Mask on = 0;
  for (int w = 0; w < dist.order(); ++w) {
    const int a = dist.at(u, w);
    const int b = dist.at(w, v);
    if (a != DistanceMatrix::kUnreachable && b != DistanceMatrix::kUnreachable &&
        a + b == total)
      on |= bit(w);
  }
  return on;
}

}  // namespace

DistanceMatrix all_pairs_distances(const Digraph& d) {
  const int n = d.order();
  DistanceMatrix dist(n);
  for (int s = 0; s < n; ++s) {
    Mask seen = bit(s);
    Mask frontier = seen;
    int level = 0;
    while (frontier != 0) {
      for_each_bit(frontier, [&](int v) { dist.set(s, v, level); });
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= d.out_neighbors(v); });
      frontier = next & ~seen;
      seen |= frontier;
      ++level;
    }
  }
  return dist;
}

VertexSet interval(const Digraph& d, const DistanceMatrix& dist, int u, int v) {
  const int n = d.order();
  Mask m = bit(u) | bit(v) | geodesic_vertices(dist, u, v) |
           geodesic_vertices(dist, v, u);
  return VertexSet(n, m);
}

VertexSet interval_of_set(const Digraph& d, const DistanceMatrix& dist,
                          const VertexSet& s) {
  require_nonempty(s);
  VertexSet out(d.order());
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j)
      out = out | interval(d, dist, members[i], members[j]);
  return out;
}

VertexSet iterated_interval(const Digraph& d, const VertexSet& s, int k) {
  require_nonempty(s);
  const IntervalTable table(d);
  return VertexSet(d.order(), table.iterate(s.bits(), k));
}

VertexSet convex_hull(const Digraph& d, const VertexSet& s) {
  require_nonempty(s);
  const IntervalTable table(d);
  return VertexSet(d.order(), table.hull(s.bits()));
}

bool is_convex(const Digraph& d, const VertexSet& s) {
  if (s.empty()) return true;
  return IntervalTable(d).convex(s.bits());
}

bool is_extreme(const Digraph& d, int v) {
  const Mask out = d.out_neighbors(v);
  bool extreme = true;
  for_each_bit(d.in_neighbors(v), [&](int u) {
    // u -> v -> u is never a geodesic, so w = u imposes nothing.
    if ((out & ~d.out_neighbors(u) & ~bit(u)) != 0) extreme = false;
  });
  return extreme;
}

VertexSet extreme_vertices(const Digraph& d) {
  VertexSet out(d.order());
  for (int v = 0; v < d.order(); ++v)
    if (is_extreme(d, v)) out.insert(v);
  return out;
}

VertexSet sources(const Digraph& d) {
  VertexSet out(d.order());
  for (int v = 0; v < d.order(); ++v)
    if (d.in_neighbors(v) == 0) out.insert(v);
  return out;
}

VertexSet sinks(const Digraph& d) {
  VertexSet out(d.order());
  for (int v = 0; v < d.order(); ++v)
    if (d.out_neighbors(v) == 0) out.insert(v);
  return out;
}

IntervalTable::IntervalTable(const Digraph& d)
    : IntervalTable(d, all_pairs_distances(d)) {}

IntervalTable::IntervalTable(const Digraph& d, const DistanceMatrix& dist)
    : n_(d.order()), dist_(dist), table_(static_cast<std::size_t>(n_) * n_, 0) {
  for (int u = 0; u < n_; ++u) {
    for (int v = u; v < n_; ++v) {
      const Mask m = bit(u) | bit(v) | geodesic_vertices(dist_, u, v) |
                     geodesic_vertices(dist_, v, u);
      table_[static_cast<std::size_t>(u) * n_ + v] = m;
      table_[static_cast<std::size_t>(v) * n_ + u] = m;
    }
  }
}

Mask IntervalTable::of_set(Mask s) const {
  Mask out = s;
  Mask rest = s;
  while (rest != 0) {
    const int u = std::countr_zero(rest);
    rest &= rest - 1;
    const Mask* row = &table_[static_cast<std::size_t>(u) * n_];
    for_each_bit(rest, [&](int v) { out |= row[v]; });
  }
  return out;
}

Mask IntervalTable::iterate(Mask s, int k) const {
  for (int i = 0; i < k; ++i) {
    const Mask next = of_set(s);
    if (next == s) break;
    s = next;
  }
  return s;
}

Mask IntervalTable::hull(Mask s) const {
  while (true) {
    const Mask next = of_set(s);
    if (next == s) return s;
    s = next;
  }
}

bool IntervalTable::convex(Mask s) const { return of_set(s) == s; }

}  // namespace geoconv
