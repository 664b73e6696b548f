#include <set>

#include "doctest.h"

#include "geoconv/corpus.hpp"
#include "geoconv/invariants.hpp"
#include "geoconv/orienters.hpp"
#include "geoconv/verifier.hpp"
#include "test_support.hpp"

using namespace geoconv;
using testing::graph;

namespace {

using Cycles = std::vector<std::vector<int>>;

bool chordless(const Graph& g, const std::vector<int>& c) {
  const int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % k])) return false;
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.adjacent(c[i], c[j])) return false;
    }
  }
  return true;
}

std::set<std::pair<int, int>> cycle_edges(const std::vector<int>& c) {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int a = c[i], b = c[(i + 1) % c.size()];
    out.emplace(std::min(a, b), std::max(a, b));
  }
  return out;
}

std::vector<Graph> min_degree_two(int max_n) {
  std::vector<Graph> out;
  for (const Graph& g : testing::corpus_up_to(max_n))
    if (min_degree(g) >= 2) out.push_back(g);
  return out;
}

std::vector<Graph> incomplete(int max_n) {
  std::vector<Graph> out;
  for (const Graph& g : testing::corpus_up_to(max_n))
    if (!is_complete(g)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("induced cycles") {
  CHECK(find_edge_disjoint_induced_cycles(testing::cycle(5)) == Cycles{{0, 1, 2, 3, 4}});

  const Graph k4 = testing::complete(4);
  CHECK(induced_cycles(k4).size() == 4);
  CHECK(find_edge_disjoint_induced_cycles(k4) == Cycles{{0, 1, 2}});

  // Two triangles sharing vertex 2.
  const Graph bowtie = graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(find_edge_disjoint_induced_cycles(bowtie) == Cycles{{0, 1, 2}, {2, 3, 4}});

  // C4 with a chord has only its two triangles as induced cycles.
  const Graph diamond = graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(induced_cycles(diamond) == Cycles{{0, 1, 2}, {0, 2, 3}});
}

TEST_CASE("cycle packing is chordless, edge-disjoint and maximal") {
  for (const Graph& g : min_degree_two(6)) {
    const auto all = induced_cycles(g);
    std::set<std::vector<int>> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& c : all) CHECK(chordless(g, c));

    const auto packing = find_edge_disjoint_induced_cycles(g);
    REQUIRE_FALSE(packing.empty());
    std::set<std::pair<int, int>> used;
    for (const auto& c : packing) {
      for (const auto& e : cycle_edges(c)) CHECK(used.insert(e).second);
    }
    for (const auto& c : all) {
      bool touches = false;
      for (const auto& e : cycle_edges(c)) touches = touches || used.count(e);
      CHECK(touches);
    }
  }
}

TEST_CASE("extreme-free orientation examples") {
  const Digraph c3 = extreme_free_orientation(testing::complete(3));
  CHECK(c3 == Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));

  // Triangle 0->1->2->0; vertex 3 joins via 0-3-1 with 0-1 already 0->1,
  // giving 1->3->0; the leftover edge 2-3 goes low -> high.
  const Digraph k4 = extreme_free_orientation(testing::complete(4));
  CHECK(k4 == Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}, {2, 3}}));
  CHECK(extreme_vertices(k4).empty());

  const Digraph c4 = extreme_free_orientation(testing::cycle(4));
  CHECK(c4 == testing::directed_cycle(4));

  // Two disjoint triangles are handled independently.
  const Graph two = graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(extreme_vertices(extreme_free_orientation(two)).empty());
}

TEST_CASE("extreme-free orientation refuses end-vertices") {
  CHECK_THROWS_AS(extreme_free_orientation(testing::path(3)), PreconditionError);
  try {
    extreme_free_orientation(testing::path(3));
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("end-vertex") != std::string::npos);
  }
}

TEST_CASE("or-vertices stay non-extreme after every step") {
  for (const Graph& g : min_degree_two(7)) {
    int steps = 0;
    const Digraph d = extreme_free_orientation(g, [&](const PartialOrientation& po) {
      ++steps;
      for_each_bit(po.or_vertices(),
                   [&](int v) { CHECK(po.is_permanently_non_extreme(v)); });
    });
    CHECK(steps >= 2);
    CHECK(d.is_orientation_of(g));
    CHECK(extreme_vertices(d).empty());
  }
}

TEST_CASE("triple selection") {
  const TripleSelection p4 = select_triple(testing::path(4));
  CHECK(p4.v0 == 0);
  CHECK(p4.v1 == 1);
  CHECK(p4.v2 == 2);
  CHECK(p4.u3.members() == std::vector<int>{3});
  CHECK_THROWS_AS(select_triple(testing::complete(4)), PreconditionError);

  for (const Graph& g : incomplete(6)) {
    const TripleSelection s = select_triple(g);
    CHECK(g.adjacent(s.v0, s.v1));
    CHECK(g.adjacent(s.v1, s.v2));
    CHECK_FALSE(g.adjacent(s.v0, s.v2));
    CHECK(s.v0 < s.v2);
    const VertexSet parts[] = {s.u1, s.u2, s.u3, s.u4, s.u5};
    VertexSet joined(g.order());
    int total = 0;
    for (const auto& p : parts) {
      joined = joined | p;
      total += p.size();
    }
    CHECK(joined == s.rest);
    CHECK(total == s.rest.size());
    CHECK(s.rest.size() == g.order() - 3);
  }
}

TEST_CASE("D2 and D1 on short paths") {
  SUBCASE("P3") {
    const auto built = d2_construction(testing::path(3));
    CHECK(built.d2 == Digraph(3, {{0, 1}, {2, 1}}));
    CHECK(d1_from_d2(built.d2, built.selection) == Digraph(3, {{0, 1}, {1, 2}}));
    CHECK(geodetic_number(built.d2).value == 3);
    CHECK(hull_number(built.d2).value == 3);
    CHECK(geodetic_number(d1_from_d2(built.d2, built.selection)).value == 2);
  }
  SUBCASE("P4") {
    const auto built = d2_construction(testing::path(4));
    CHECK(built.d2 == Digraph(4, {{0, 1}, {2, 1}, {2, 3}}));
    CHECK(d1_from_d2(built.d2, built.selection) == Digraph(4, {{0, 1}, {1, 2}, {3, 2}}));
  }
  CHECK_THROWS_AS(d2_construction(testing::complete(4)), PreconditionError);
  CHECK_THROWS_AS(d2_construction(graph(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST_CASE("D2 rule table is conflict-free") {
  for (const Graph& g : incomplete(6)) {
    const TripleSelection s = select_triple(g);
    const auto part_of = [&](int v) {
      const VertexSet parts[] = {s.u1, s.u2, s.u3, s.u4, s.u5};
      for (int i = 0; i < 5; ++i)
        if (parts[i].contains(v)) return i;
      return -1;
    };
    for (const Edge& e : g.edges()) {
      const RuleVerdict r = d2_rule(s, e.u, e.v);
      CHECK_FALSE((r.forward && r.backward));
      if (!r.forward && !r.backward) {
        // Only edges inside one part are left to the canonical choice.
        CHECK(part_of(e.u) >= 0);
        CHECK(part_of(e.u) == part_of(e.v));
      }
    }
    const auto built = d2_construction(g);
    CHECK(built.d2.is_orientation_of(g));
    CHECK(sources(built.d2).contains(s.v0));
    CHECK(sources(built.d2).contains(s.v2));
    CHECK(sinks(built.d2).contains(s.v1));
    for (int v : {s.v0, s.v1, s.v2}) CHECK(is_extreme(built.d2, v));

    const Digraph d1 = d1_from_d2(built.d2, s);
    CHECK(d1.underlying() == g);
    for (const Arc& a : built.d2.arcs()) {
      if (a.tail == s.v2 || a.head == s.v2)
        CHECK(d1.has_arc(a.head, a.tail));
      else
        CHECK(d1.has_arc(a.tail, a.head));
    }
    const auto dist = all_pairs_distances(d1);
    CHECK(dist.at(s.v0, s.v2) == 2);
  }
}

TEST_CASE("U4-U5 edges point into U5") {
  // v0=0, v1=1, v2=2; 3 in U2, 4 in U4 (next to 3), 5 in U5 (next to 4 only).
  const Graph g = graph(6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  const auto built = d2_construction(g);
  const auto& s = built.selection;
  CHECK(s.u2.members() == std::vector<int>{3});
  CHECK(s.u4.members() == std::vector<int>{4});
  CHECK(s.u5.members() == std::vector<int>{5});
  CHECK(built.d2.has_arc(4, 5));
  CHECK(built.d2.has_arc(4, 3));
  const Digraph d1 = d1_from_d2(built.d2, s);
  const auto claims = check_containment_claims(d1, built.d2, s, ClaimScope::kAllHullSets);
  CHECK(claims.failures.empty());
  CHECK(claims.hull_sets_checked > 0);
}

TEST_CASE("complete graph orientations") {
  for (int n = 3; n <= 6; ++n) {
    const auto pair = complete_graph_orientations(n);
    CHECK(pair.max.is_orientation_of(testing::complete(n)));
    CHECK(pair.min.is_orientation_of(testing::complete(n)));
    CHECK(extreme_vertices(pair.max) == VertexSet::all(n));
    CHECK(geodetic_number(pair.max).value == n);
    CHECK(hull_number(pair.max).value == n);
    CHECK(geodetic_number(pair.min).value == 2);
    CHECK(hull_number(pair.min).value == 2);

    const IntervalTable t(pair.min);
    CHECK(t.of_set(bit(0) | bit(n - 1)) == full_mask(n));
    // {v1, v2} is geodetic only for n = 3: I[v1, v2] = {v1, v2, v3}.
    CHECK((t.of_set(bit(0) | bit(1)) == full_mask(n)) == (n == 3));
  }
  CHECK_THROWS_AS(complete_graph_orientations(2), PreconditionError);
}
