#include "geoconv/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace geoconv {
namespace {

// Ordered partition stored as a colour per vertex; colours 0..k-1 are cells
// in canonical order.
using Colouring = std::vector<int>;

// 1-dimensional Weisfeiler-Leman refinement to a stable colouring. New colours
// are ordered by (old colour, sorted neighbour colour multiset), so the result
// commutes with relabelling.
Colouring refine(const Graph& g, Colouring colour) {
  const int n = g.order();
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].first = colour[v];
      for_each_bit(g.neighbors(v),
                   [&](int u) { signature[v].second.push_back(colour[u]); });
      std::sort(signature[v].second.begin(), signature[v].second.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return signature[a] < signature[b]; });
    Colouring next(n);
    int cells = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++cells;
      next[order[i]] = cells;
    }
    std::vector<int> distinct(colour);
    std::sort(distinct.begin(), distinct.end());
    const auto before = std::unique(distinct.begin(), distinct.end()) - distinct.begin();
    if (cells + 1 == before) return next;
    colour = std::move(next);
  }
}

std::uint64_t code_of(const Graph& g, const std::vector<int>& position) {
  // position[v] = new label of v.
  const int n = g.order();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[position[v]] = v;
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      code = (code << 1) | (g.adjacent(at[i], at[j]) ? 1U : 0U);
  return code;
}

void search(const Graph& g, const Colouring& colour, std::uint64_t& best,
            std::vector<int>& best_position, bool& have) {
  const int n = g.order();
  std::vector<int> cell_size(n, 0);
  for (int c : colour) ++cell_size[c];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (cell_size[c] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    const std::uint64_t code = code_of(g, colour);
    if (!have || code > best) {
      best = code;
      best_position = colour;
      have = true;
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    // Individualise v: it takes a fresh colour just before the rest of its
    // cell.
    Colouring split(n);
    for (int u = 0; u < n; ++u)
      split[u] = 2 * colour[u] + ((colour[u] == target && u != v) ? 1 : 0);
    search(g, refine(g, split), best, best_position, have);
  }
}

std::vector<int> canonical_labelling(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCorpusOrder)
    throw Error("canonical form supports at most " +
                std::to_string(kMaxCorpusOrder) + " vertices");
  if (n == 0) return {};
  std::uint64_t best = 0;
  std::vector<int> position;
  bool have = false;
  search(g, refine(g, Colouring(n, 0)), best, position, have);
  return position;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() == 0) return 0;
  return code_of(g, canonical_labelling(g));
}

Graph canonical_form(const Graph& g) {
  const auto position = canonical_labelling(g);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = position[e.u];
    const int b = position[e.v];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.order(), std::move(edges));
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > kMaxCorpusOrder)
    throw Error("connected_graphs supports 1 <= n <= " +
                std::to_string(kMaxCorpusOrder));
  if (n == 1) return {Graph(1, {})};

  // Every connected graph has a non-cut vertex, so all of them arise by adding
  // a vertex with a nonempty neighbourhood to a connected graph on n-1.
  std::map<std::uint64_t, Graph> found;
  for (const Graph& base : connected_graphs(n - 1)) {
    for (Mask nbrs = 1; nbrs < bit(n - 1); ++nbrs) {
      std::vector<Edge> edges = base.edges();
      for_each_bit(nbrs, [&](int u) { edges.push_back({u, n - 1}); });
      Graph candidate(n, std::move(edges));
      const auto position = canonical_labelling(candidate);
      const std::uint64_t code = code_of(candidate, position);
      if (found.count(code)) continue;
      found.emplace(code, canonical_form(candidate));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [code, graph] : found) out.push_back(std::move(graph));
  return out;
}

}  // namespace geoconv
