#include "geoconv/graph.hpp"

#include <algorithm>
#include <sstream>

namespace geoconv {

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s.members()) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(n, 0) {
  if (n < 0 || n > kMaxVertices)
    throw Error("vertex count " + std::to_string(n) + " outside [0, " +
                std::to_string(kMaxVertices) + "]");
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                  " has an endpoint outside [0, " + std::to_string(n) + ")");
    if (e.u == e.v)
      throw Error("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (adj_[e.u] & bit(e.v))
      throw Error("duplicate edge " + std::to_string(e.u) + "-" +
                  std::to_string(e.v));
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Digraph::Digraph(int n) : n_(n), out_(n, 0), in_(n, 0) {
  if (n < 0 || n > kMaxVertices)
    throw Error("vertex count " + std::to_string(n) + " outside [0, " +
                std::to_string(kMaxVertices) + "]");
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
      throw Error("arc " + std::to_string(a.tail) + "->" +
                  std::to_string(a.head) + " has an endpoint outside [0, " +
                  std::to_string(n) + ")");
    if (has_arc(a.tail, a.head))
      throw Error("duplicate arc " + std::to_string(a.tail) + "->" +
                  std::to_string(a.head));
    add_arc(a.tail, a.head);
  }
}

Digraph Digraph::orientation(const Graph& g, std::uint64_t reversed) {
  Digraph d(g.order());
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((reversed >> i) & 1U)
      d.add_arc(edges[i].v, edges[i].u);
    else
      d.add_arc(edges[i].u, edges[i].v);
  }
  return d;
}

int Digraph::arc_count() const {
  int total = 0;
  for (Mask m : out_) total += popcount(m);
  return total;
}

void Digraph::add_arc(int u, int v) {
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  out_[u] |= bit(v);
  in_[v] |= bit(u);
}

void Digraph::remove_arc(int u, int v) {
  out_[u] &= ~bit(v);
  in_[v] &= ~bit(u);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n_; ++u)
    for_each_bit(out_[u], [&](int v) { out.push_back({u, v}); });
  return out;
}

Graph Digraph::underlying() const {
  std::vector<Edge> edges;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(out_[u], [&](int v) {
      if (has_arc(v, u))
        throw Error("arcs " + std::to_string(u) + "->" + std::to_string(v) +
                    " and back make this digraph not an orientation");
      edges.push_back({std::min(u, v), std::max(u, v)});
    });
  }
  return Graph(n_, std::move(edges));
}

bool Digraph::is_orientation_of(const Graph& g) const {
  if (g.order() != n_) return false;
  for (int v = 0; v < n_; ++v) {
    if ((out_[v] & in_[v]) != 0) return false;
    if ((out_[v] | in_[v]) != g.neighbors(v)) return false;
  }
  return true;
}

Digraph reverse(const Digraph& d) {
  Digraph r(d.order());
  for (const Arc& a : d.arcs()) r.add_arc(a.head, a.tail);
  return r;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  Mask seen = bit(0);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

VertexSet end_vertices(const Graph& g) {
  VertexSet ends(g.order());
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) ends.insert(v);
  return ends;
}

int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.size() == n * (n - 1) / 2;
}

PartialOrientation::PartialOrientation(Graph base)
    : base_(std::move(base)), partial_(base_.order()) {}

void PartialOrientation::orient(int u, int v) {
  if (!base_.adjacent(u, v))
    throw Error("cannot orient non-edge " + std::to_string(u) + "-" +
                std::to_string(v));
  if (is_oriented(u, v))
    throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                " is already oriented");
  partial_.add_arc(u, v);
  touched_ |= bit(u) | bit(v);
  ++oriented_count_;
}

bool PartialOrientation::is_oriented(int u, int v) const {
  return partial_.has_arc(u, v) || partial_.has_arc(v, u);
}

std::optional<bool> PartialOrientation::points_from(int u, int v) const {
  if (partial_.has_arc(u, v)) return true;
  if (partial_.has_arc(v, u)) return false;
  return std::nullopt;
}

bool PartialOrientation::is_permanently_non_extreme(int v) const {
  bool found = false;
  for_each_bit(partial_.in_neighbors(v), [&](int u) {
    // w with u-w absent, or already oriented w -> u.
    const Mask blocked = ~base_.neighbors(u) | partial_.in_neighbors(u);
    if ((partial_.out_neighbors(v) & blocked & ~bit(u)) != 0) found = true;
  });
  return found;
}

Digraph PartialOrientation::to_digraph() const {
  if (!complete())
    throw Error("partial orientation still has unoriented edges");
  return partial_;
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " [";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out << (first ? "" : " ") << e.u << '-' << e.v;
    first = false;
  }
  out << ']';
  return out.str();
}

std::string to_string(const Digraph& d) {
  std::ostringstream out;
  out << "n=" << d.order() << " [";
  bool first = true;
  for (const Arc& a : d.arcs()) {
    out << (first ? "" : " ") << a.tail << "->" << a.head;
    first = false;
  }
  out << ']';
  return out.str();
}

}  // namespace geoconv
