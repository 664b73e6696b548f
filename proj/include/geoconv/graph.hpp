#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geoconv/vertex_set.hpp"

namespace geoconv {

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed arc tail -> head.
struct Arc {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; edges
/// are kept sorted, and the position of an edge in edges() is its index in
/// orientation masks.
class Graph {
 public:
  Graph() = default;
  /// Throws Error on self-loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  Mask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] & bit(v)) != 0; }
  Mask vertices() const { return full_mask(n_); }

  /// Index of edge {u,v} in edges(), if present.
  std::optional<int> edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Mask> adj_;
};

/// Directed graph without loops; antiparallel arcs are allowed for general
/// digraphs but never produced by orientations.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<Arc>& arcs);

  /// Orientation of g: bit i of `reversed` flips edge i to high -> low.
  static Digraph orientation(const Graph& g, std::uint64_t reversed);

  int order() const { return n_; }
  Mask out_neighbors(int v) const { return out_[v]; }
  Mask in_neighbors(int v) const { return in_[v]; }
  int out_degree(int v) const { return popcount(out_[v]); }
  int in_degree(int v) const { return popcount(in_[v]); }
  bool has_arc(int u, int v) const { return (out_[u] & bit(v)) != 0; }
  int arc_count() const;

  void add_arc(int u, int v);
  void remove_arc(int u, int v);

  /// Arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;
  /// Underlying undirected graph. Throws if both (u,v) and (v,u) are arcs.
  Graph underlying() const;
  bool is_orientation_of(const Graph& g) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  int n_ = 0;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
};

/// Every arc (u,v) becomes (v,u).
Digraph reverse(const Digraph& d);

bool is_connected(const Graph& g);
VertexSet end_vertices(const Graph& g);
int min_degree(const Graph& g);
bool is_complete(const Graph& g);

/// Some edges of a graph oriented, the rest undecided.
class PartialOrientation {
 public:
  explicit PartialOrientation(Graph base);

  const Graph& base() const { return base_; }
  /// Orients edge {u,v} as u -> v. Throws if the edge is missing or already
  /// oriented.
  void orient(int u, int v);
  bool is_oriented(int u, int v) const;
  /// Direction of {u,v} if oriented: true iff it is u -> v.
  std::optional<bool> points_from(int u, int v) const;
  /// Incident to at least one oriented edge.
  bool is_or_vertex(int v) const { return (touched_ & bit(v)) != 0; }
  Mask or_vertices() const { return touched_; }
  /// Arcs u->v, v->w exist with uw absent from the base or oriented w->u, so
  /// v stays non-extreme however the rest is oriented.
  bool is_permanently_non_extreme(int v) const;
  bool complete() const { return oriented_count_ == base_.size(); }
  /// The oriented arcs so far.
  const Digraph& arcs() const { return partial_; }
  /// Throws unless every edge is oriented.
  Digraph to_digraph() const;

 private:
  Graph base_;
  Digraph partial_;
  Mask touched_ = 0;
  int oriented_count_ = 0;
};

std::string to_string(const Graph& g);
std::string to_string(const Digraph& d);

}  // namespace geoconv
