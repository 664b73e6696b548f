#include "geoconv/orienters.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "geoconv/geodesic.hpp"

namespace geoconv {
namespace {

void extend_cycles(const Graph& g, std::vector<int>& path, Mask on_path,
                   std::vector<std::vector<int>>& out) {
  const int start = path.front();
  const int last = path.back();
  // Vertices adjacent to an interior path vertex would create a chord.
  Mask interior_nbrs = 0;
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    interior_nbrs |= g.neighbors(path[i]);

  const Mask candidates = g.neighbors(last) & ~on_path & ~full_mask(start + 1);
  for_each_bit(candidates, [&](int w) {
    if (interior_nbrs & bit(w)) return;
    if (path.size() >= 2 && g.adjacent(w, start)) {
      if (path[1] < w) {
        auto cycle = path;
        cycle.push_back(w);
        out.push_back(std::move(cycle));
      }
      return;
    }
    path.push_back(w);
    extend_cycles(g, path, on_path | bit(w), out);
    path.pop_back();
  });
}

void orient_checked(PartialOrientation& po, int u, int v) {
  if (!po.is_oriented(u, v)) po.orient(u, v);
}

struct PathChoice {
  std::vector<int> vertices;  // u0, ..., u{r+1}
};

// Unoriented-interior path of minimum interior length between two distinct
// or-vertices; ties go to the smallest u0, then the lexicographically least
// interior, then the smallest u{r+1}.
std::optional<PathChoice> shortest_connecting_path(const PartialOrientation& po) {
  const Graph& g = po.base();
  const int n = g.order();
  const Mask oriented = po.or_vertices();
  const Mask free = g.vertices() & ~oriented;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;

  int best_r = kInf;
  int best_a = -1;
  std::vector<int> best_to_target;

  for_each_bit(oriented, [&](int a) {
    // from_a[x]: hops from a to x with the interior inside `free`.
    std::vector<int> from_a(n, kInf), to_target(n, kInf);
    Mask frontier = g.neighbors(a) & free;
    Mask seen = frontier;
    for (int level = 1; frontier != 0; ++level) {
      Mask next = 0;
      for_each_bit(frontier, [&](int x) {
        from_a[x] = level;
        next |= g.neighbors(x);
      });
      frontier = next & free & ~seen;
      seen |= frontier;
    }
    const Mask targets = oriented & ~bit(a);
    frontier = 0;
    for_each_bit(free, [&](int x) {
      if (g.neighbors(x) & targets) frontier |= bit(x);
    });
    seen = frontier;
    for (int level = 1; frontier != 0; ++level) {
      Mask next = 0;
      for_each_bit(frontier, [&](int x) {
        to_target[x] = level;
        next |= g.neighbors(x);
      });
      frontier = next & free & ~seen;
      seen |= frontier;
    }
    for_each_bit(free, [&](int x) {
      if (from_a[x] >= kInf || to_target[x] >= kInf) return;
      const int r = from_a[x] + to_target[x] - 1;
      if (r < best_r) {
        best_r = r;
        best_a = a;
        best_to_target = to_target;
      }
    });
  });
  if (best_a < 0) return std::nullopt;

  PathChoice choice;
  choice.vertices.push_back(best_a);
  int remaining = best_r;
  Mask options = g.neighbors(best_a) & free;
  while (remaining > 0) {
    int pick = -1;
    for_each_bit(options, [&](int x) {
      if (pick < 0 && best_to_target[x] == remaining) pick = x;
    });
    choice.vertices.push_back(pick);
    options = g.neighbors(pick) & free;
    --remaining;
  }
  const Mask targets = oriented & ~bit(best_a);
  const int last = choice.vertices.back();
  choice.vertices.push_back(std::countr_zero(g.neighbors(last) & targets));
  return choice;
}

}  // namespace

std::vector<std::vector<int>> induced_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> path{s};
    extend_cycles(g, path, bit(s), out);
  }
  return out;
}

std::vector<std::vector<int>> find_edge_disjoint_induced_cycles(const Graph& g) {
  const auto all = induced_cycles(g);
  std::set<std::pair<int, int>> used;
  auto edges_of = [](const std::vector<int>& c) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i];
      const int b = c[(i + 1) % c.size()];
      e.emplace_back(std::min(a, b), std::max(a, b));
    }
    return e;
  };
  auto disjoint = [&](const std::vector<int>& c) {
    for (const auto& e : edges_of(c))
      if (used.count(e)) return false;
    return true;
  };

  std::vector<std::vector<int>> chosen;
  for (const auto& c : all) {
    if (!disjoint(c)) continue;
    for (const auto& e : edges_of(c)) used.insert(e);
    chosen.push_back(c);
  }
  for (const auto& c : all)
    if (disjoint(c))
      throw Error("cycle packing is not maximal; this is a bug");
  return chosen;
}

Digraph extreme_free_orientation(const Graph& g, const OrientationObserver& observe) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2)
      throw PreconditionError(
          "vertex " + std::to_string(v) + " has degree " +
          std::to_string(g.degree(v)) +
          "; an end-vertex is a source or sink in every orientation, so no "
          "extreme-free orientation exists (minimum degree 2 required)");
  }

  PartialOrientation po(g);
  auto notify = [&] {
    if (observe) observe(po);
  };

  for (const auto& cycle : find_edge_disjoint_induced_cycles(g)) {
    for (std::size_t i = 0; i < cycle.size(); ++i)
      po.orient(cycle[i], cycle[(i + 1) % cycle.size()]);
    notify();
  }

  while ((g.vertices() & ~po.or_vertices()) != 0) {
    const auto path = shortest_connecting_path(po);
    if (!path)
      throw Error("no path joins two oriented vertices through unoriented ones");
    const auto& p = path->vertices;
    if (p.size() == 3 && g.adjacent(p[0], p[2])) {
      if (!po.is_oriented(p[0], p[2]))
        po.orient(std::min(p[0], p[2]), std::max(p[0], p[2]));
      const bool forward = *po.points_from(p[0], p[2]);
      const int from = forward ? p[0] : p[2];
      const int to = forward ? p[2] : p[0];
      // from -> to -> u1 -> from
      po.orient(to, p[1]);
      po.orient(p[1], from);
    } else {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) po.orient(p[i], p[i + 1]);
    }
    notify();
  }

  for (const Edge& e : g.edges()) orient_checked(po, e.u, e.v);
  notify();
  return po.to_digraph();
}

TripleSelection select_triple(const Graph& g) {
  const int n = g.order();
  for (int v1 = 0; v1 < n; ++v1) {
    const Mask nbrs = g.neighbors(v1);
    int v0 = -1, v2 = -1;
    for_each_bit(nbrs, [&](int a) {
      if (v0 >= 0) return;
      const Mask partners = nbrs & ~g.neighbors(a) & ~full_mask(a + 1);
      if (partners != 0) {
        v0 = a;
        v2 = std::countr_zero(partners);
      }
    });
    if (v0 < 0) continue;

    TripleSelection sel;
    sel.v0 = v0;
    sel.v1 = v1;
    sel.v2 = v2;
    const Mask rest = g.vertices() & ~(bit(v0) | bit(v1) | bit(v2));
    const Mask n1 = g.neighbors(v1);
    const Mask n2 = g.neighbors(v2);
    const Mask u1 = rest & n1 & ~n2;
    const Mask u2 = rest & n1 & n2;
    const Mask u3 = rest & n2 & ~n1;
    Mask near_u2 = 0;
    for_each_bit(u2, [&](int x) { near_u2 |= g.neighbors(x); });
    const Mask u4 = rest & near_u2 & ~(u1 | u2 | u3);
    const Mask u5 = rest & ~(u1 | u2 | u3 | u4);
    sel.rest = VertexSet(n, rest);
    sel.u1 = VertexSet(n, u1);
    sel.u2 = VertexSet(n, u2);
    sel.u3 = VertexSet(n, u3);
    sel.u4 = VertexSet(n, u4);
    sel.u5 = VertexSet(n, u5);
    return sel;
  }
  throw PreconditionError("graph has no induced path on three vertices");
}

namespace {

bool derives(const TripleSelection& s, int x, int y) {
  const auto in = [](const VertexSet& set, int v) { return set.contains(v); };
  if (x == s.v0 || x == s.v2) return true;
  if (y == s.v1) return true;
  if (in(s.u1, x) && in(s.rest, y) && !in(s.u1, y)) return true;
  if (in(s.u4, x) && in(s.u2, y)) return true;
  if (in(s.u4, x) && in(s.u5, y)) return true;
  if (in(s.rest, x) && !in(s.u3, x) && in(s.u3, y)) return true;
  return false;
}

}  // namespace

RuleVerdict d2_rule(const TripleSelection& sel, int x, int y) {
  return {derives(sel, x, y), derives(sel, y, x)};
}

D2Construction d2_construction(const Graph& g) {
  if (g.order() < 3)
    throw PreconditionError("D2 construction needs at least 3 vertices");
  if (!is_connected(g))
    throw PreconditionError("D2 construction needs a connected graph");
  if (is_complete(g))
    throw PreconditionError(
        "graph is complete; use the complete-graph orientations instead");

  D2Construction out{Digraph(g.order()), select_triple(g)};
  const TripleSelection& sel = out.selection;
  for (const Edge& e : g.edges()) {
    const RuleVerdict verdict = d2_rule(sel, e.u, e.v);
    if (verdict.forward && verdict.backward)
      throw Error("D2 rules give edge " + std::to_string(e.u) + "-" +
                  std::to_string(e.v) + " both directions");
    if (verdict.backward)
      out.d2.add_arc(e.v, e.u);
    else
      out.d2.add_arc(e.u, e.v);
  }
  const Digraph& d2 = out.d2;
  if (d2.in_degree(sel.v0) != 0 || d2.in_degree(sel.v2) != 0 ||
      d2.out_degree(sel.v1) != 0)
    throw Error("D2 construction broke the source/sink structure; this is a bug");
  return out;
}

Digraph d1_from_d2(const Digraph& d2, const TripleSelection& sel) {
  Digraph d1 = d2;
  const int v2 = sel.v2;
  const Mask out = d2.out_neighbors(v2);
  const Mask in = d2.in_neighbors(v2);
  for_each_bit(out, [&](int w) {
    d1.remove_arc(v2, w);
    d1.add_arc(w, v2);
  });
  for_each_bit(in, [&](int u) {
    d1.remove_arc(u, v2);
    d1.add_arc(v2, u);
  });
  return d1;
}

CompleteOrientations complete_graph_orientations(int n) {
  if (n < 3)
    throw PreconditionError("complete-graph orientations need n >= 3");
  CompleteOrientations out{Digraph(n), Digraph(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out.max.add_arc(i, j);
      if (j == i + 1)
        out.min.add_arc(j, i);
      else
        out.min.add_arc(i, j);
    }
  }
  return out;
}

}  // namespace geoconv
