// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <atomic>
#include <chrono>
#include <thread>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "geoconv/corpus.hpp"
#include "geoconv/verifier.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace geoconv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

int g_workers = 1;
int g_failed = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && elapsed >= limit_seconds) {
    std::ostringstream why;
    why << "took " << elapsed << " s, limit " << limit_seconds << " s";
    out.fail(why.str());
  }
  if (!out.pass) ++g_failed;
  std::printf("[%s] %2d. %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", id,
              title.c_str(), elapsed, out.detail.empty() ? "" : " -- ",
              out.detail.c_str());
  std::fflush(stdout);
}

std::string name(const Graph& g) { return encode_graph6(g); }

OrientableOptions enumeration_options() {
  OrientableOptions o;
  o.workers = g_workers;
  return o;
}

struct CorpusEntry {
  Graph graph;
  OrientableNumbers numbers;
};

// Orientable numbers of every connected graph on 3..6 vertices, computed once
// for criteria 5, 6 and 11. Graphs are spread across workers.
std::vector<CorpusEntry> enumerate_corpus() {
  std::vector<CorpusEntry> entries;
  for (Graph& g : testing::corpus_up_to(6)) entries.push_back({std::move(g), {}});
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++)
      entries[i].numbers = orientable_numbers(entries[i].graph);
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < g_workers; ++w) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  return entries;
}

// Every orientation of every labelled graph on n vertices.
std::vector<Digraph> all_oriented_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  std::vector<Digraph> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Digraph d(n);
    std::uint64_t c = code;
    for (const auto& [u, v] : pairs) {
      const int state = static_cast<int>(c % 3);
      c /= 3;
      if (state == 1) d.add_arc(u, v);
      if (state == 2) d.add_arc(v, u);
    }
    out.push_back(std::move(d));
  }
  return out;
}

void check_family(Outcome& out, const Graph& g, int lower, int upper) {
  const auto r = orientable_numbers(g, enumeration_options());
  std::ostringstream got;
  got << name(g) << ": h-=" << r.h_min.value << " g-=" << r.g_min.value
      << " h+=" << r.h_max.value << " g+=" << r.g_max.value << ", expected " << lower
      << "/" << upper;
  out.expect(r.g_min.value == lower && r.h_min.value == lower &&
                 r.g_max.value == upper && r.h_max.value == upper,
             got.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geoconv acceptance suite"};
  app.add_option("--workers", g_workers, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  std::printf("acceptance suite, %d worker(s)\n", g_workers);

  criterion(1, "complete graphs K3..K5: g-=h-=2, g+=h+=n", 5.0, [](Outcome& out) {
    for (int n = 3; n <= 5; ++n) check_family(out, testing::complete(n), 2, n);
  });

  criterion(2, "trees n<=7: h-=g-=k (end-vertices), h+=g+=n", 30.0, [](Outcome& out) {
    int trees = 0;
    for (int n = 3; n <= 7; ++n)
      for (const Graph& g : testing::corpus(n)) {
        if (g.size() != n - 1) continue;
        ++trees;
        check_family(out, g, end_vertices(g).size(), n);
      }
    out.expect(trees == 1 + 2 + 3 + 6 + 11, "expected 23 trees on 3..7 vertices");
  });

  criterion(3, "odd cycles C5, C7: h-=g-=2, h+=g+=2k for C(2k+1)", 5.0, [](Outcome& out) {
    check_family(out, testing::cycle(5), 2, 4);
    check_family(out, testing::cycle(7), 2, 6);
  });

  criterion(4, "complete bipartite K2,2 and K2,3: h-=g-=2, h+=g+=n", 10.0, [](Outcome& out) {
    check_family(out, testing::complete_bipartite(2, 2), 2, 4);
    check_family(out, testing::complete_bipartite(2, 3), 2, 5);
  });

  // Criteria 5, 6 and 11 share one enumeration pass; its cost is charged to 5.
  std::vector<CorpusEntry> corpus;
  const double corpus_limit = g_workers >= 8 ? 120.0 : 600.0;
  criterion(5, "g- < g+ and h- < h+ on all connected graphs, 3<=n<=6", corpus_limit,
            [&](Outcome& out) {
              corpus = enumerate_corpus();
              out.expect(corpus.size() == 2 + 6 + 21 + 112, "corpus size");
              std::map<int, int> per_n;
              for (const auto& e : corpus) {
                ++per_n[e.graph.order()];
                const auto& r = e.numbers;
                out.expect(r.g_min.value < r.g_max.value, name(e.graph) + ": g- >= g+");
                out.expect(r.h_min.value < r.h_max.value, name(e.graph) + ": h- >= h+");
                const auto report = verify_separation(e.graph, r);
                out.expect(report.ok(), name(e.graph) + ": " +
                                            (report.ok() ? "" : report.failures[0].detail));
              }
              out.expect(per_n[6] == 112, "expected 112 graphs at n=6");
            });

  criterion(6, "con+ = n-1; con- = n-1 iff an end-vertex exists (3<=n<=6)", corpus_limit,
            [&](Outcome& out) {
              out.expect(!corpus.empty(), "enumeration pass missing");
              for (const auto& e : corpus) {
                const int n = e.graph.order();
                const auto& r = e.numbers;
                out.expect(r.con_max.value == n - 1, name(e.graph) + ": con+ != n-1");
                const bool ends = !end_vertices(e.graph).empty();
                out.expect((r.con_min.value == n - 1) == ends,
                           name(e.graph) + ": con- = n-1 does not match end-vertices");
                const auto report = verify_convexity(e.graph, r);
                out.expect(report.ok(), name(e.graph) + ": " +
                                            (report.ok() ? "" : report.failures[0].detail));
              }
            });

  criterion(7, "extreme-free orientation of every connected min-degree-2 graph, n<=8",
            60.0, [](Outcome& out) {
              std::size_t graphs = 0;
              for (int n = 3; n <= 8; ++n) {
                const auto all = connected_graphs(n);
                if (n == 8) out.expect(all.size() == 11117, "expected 11117 graphs at n=8");
                for (const Graph& g : all) {
                  if (min_degree(g) < 2) continue;
                  ++graphs;
                  const Digraph d = extreme_free_orientation(g);
                  out.expect(d.is_orientation_of(g), name(g) + ": not an orientation");
                  out.expect(extreme_vertices(d).empty(), name(g) + ": extreme vertex left");
                }
              }
              std::printf("      %zu min-degree-2 graphs checked\n", graphs);
            });

  criterion(8, "D1/D2 claims: all hull-sets n<=5, minimum hull-sets n=6; h, g drop",
            300.0, [](Outcome& out) {
              std::uint64_t sets = 0;
              for (const Graph& g : testing::corpus_up_to(6)) {
                if (is_complete(g)) continue;
                const auto built = d2_construction(g);
                const Digraph d1 = d1_from_d2(built.d2, built.selection);
                const auto scope = g.order() <= 5 ? ClaimScope::kAllHullSets
                                                  : ClaimScope::kMinimumHullSets;
                const auto claims =
                    check_containment_claims(d1, built.d2, built.selection, scope);
                sets += claims.hull_sets_checked;
                out.expect(claims.failures.empty(),
                           name(g) + ": " + (claims.failures.empty()
                                                 ? ""
                                                 : claims.failures[0].detail));
                const auto i1 = digraph_invariants(d1);
                const auto i2 = digraph_invariants(built.d2);
                out.expect(i1.hull.value < i2.hull.value, name(g) + ": h(D1) >= h(D2)");
                out.expect(i1.geodetic.value < i2.geodetic.value,
                           name(g) + ": g(D1) >= g(D2)");
              }
              std::printf("      %llu hull-sets checked\n",
                          static_cast<unsigned long long>(sets));
            });

  criterion(9, "seeded g/h/con equal the full-subset oracle", 0.0, [](Outcome& out) {
    auto compare = [&](const Digraph& d, const std::string& label) {
      const oracle::Digraph ref(d);
      const auto inv = digraph_invariants(d);
      const auto og = oracle::geodetic(ref);
      const auto oh = oracle::hull(ref);
      out.expect(inv.geodetic.value == og.value &&
                     inv.geodetic.witness.members() == og.witness,
                 label + ": geodetic mismatch");
      out.expect(inv.hull.value == oh.value && inv.hull.witness.members() == oh.witness,
                 label + ": hull mismatch");
      if (d.order() >= 2) {
        const auto oc = oracle::convexity(ref);
        out.expect(inv.convexity.value == oc.value &&
                       inv.convexity.witness.members() == oc.witness,
                   label + ": convexity mismatch");
      }
    };
    std::size_t orientations = 0;
    for (const Graph& g : testing::corpus_up_to(5))
      for (const Digraph& d : enumerate_orientations(g)) {
        ++orientations;
        compare(d, name(g) + " " + to_string(d));
      }
    std::mt19937 rng(20240229);
    std::uniform_int_distribution<int> order(2, 7);
    std::uniform_real_distribution<double> density(0.15, 0.6);
    for (int i = 0; i < 200; ++i) {
      const Digraph d = oracle::random_digraph(order(rng), density(rng), rng, i % 2 == 0);
      compare(d, "random " + to_string(d));
    }
    std::printf("      %zu orientations + 200 random digraphs\n", orientations);
  });

  criterion(10, "interval symmetry, reversal invariance, hull idempotence, extreme 3-way (n<=5)",
            0.0, [](Outcome& out) {
              std::size_t digraphs = 0;
              for (int n = 1; n <= 5; ++n) {
                for (const Digraph& d : all_oriented_graphs(n)) {
                  ++digraphs;
                  const std::string label = to_string(d);
                  const IntervalTable t(d);
                  const Digraph r = reverse(d);
                  const IntervalTable tr(r);
                  for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                      out.expect(t.pair(u, v) == t.pair(v, u), label + ": I[u,v] != I[v,u]");
                      out.expect(t.pair(u, v) == tr.pair(u, v), label + ": reversal changes I");
                    }
                  const auto a = digraph_invariants(d);
                  const auto b = digraph_invariants(r);
                  out.expect(a.geodetic.value == b.geodetic.value, label + ": g not reversal-invariant");
                  out.expect(a.hull.value == b.hull.value, label + ": h not reversal-invariant");
                  if (n >= 2)
                    out.expect(a.convexity.value == b.convexity.value,
                               label + ": con not reversal-invariant");
                  for (Mask s = 1; s <= full_mask(n); ++s) {
                    const Mask h = t.hull(s);
                    out.expect(t.hull(h) == h && t.convex(h) && (s & ~h) == 0,
                               label + ": hull not idempotent");
                  }
                  // Never interior, from Floyd-Warshall distances.
                  const auto dist = oracle::floyd_warshall(oracle::adjacency(d));
                  for (int v = 0; v < n; ++v) {
                    bool interior = false;
                    for (int u = 0; u < n; ++u)
                      for (int w = 0; w < n; ++w)
                        if (u != v && w != v && dist[u][w] < oracle::kInf &&
                            dist[u][v] + dist[v][w] == dist[u][w])
                          interior = true;
                    const bool extreme = is_extreme(d, v);
                    const bool complement_convex = t.convex(full_mask(n) & ~bit(v));
                    out.expect(extreme == complement_convex && extreme == !interior,
                               label + ": extremeness equivalence fails at " +
                                   std::to_string(v));
                  }
                }
              }
              std::printf("      %zu oriented digraphs\n", digraphs);
            });

  criterion(11, "classifier: each connected graph n<=6 gets one of HG1,HG3..HG6", 0.0,
            [&](Outcome& out) {
              out.expect(!corpus.empty(), "enumeration pass missing");
              std::map<std::string, int> histogram;
              for (const char* tag : {"HG1", "HG3", "HG4", "HG5", "HG6"}) histogram[tag] = 0;
              for (const auto& e : corpus) {
                const HgCase tag = classify(e.numbers);
                ++histogram[to_string(tag)];
                if (tag != HgCase::kHG1)
                  std::printf("      witness %s: %s\n", to_string(tag).c_str(),
                              name(e.graph).c_str());
                out.expect(tag != HgCase::kUnlisted && tag != HgCase::kInconsistent,
                           name(e.graph) + " has no named case (" + to_string(tag) + ")");
              }
              std::string line = "      histogram:";
              for (const auto& [tag, count] : histogram)
                line += " " + tag + "=" + std::to_string(count);
              std::printf("%s\n", line.c_str());
            });

  std::printf("%d criterion(s) failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
