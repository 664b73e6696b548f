#include "geoconv/verifier.hpp"

#include <atomic>
#include <istream>
#include <sstream>
#include <thread>

#include "geoconv/graph_io.hpp"

namespace geoconv {
namespace {

CheckFailure failure(std::string check, std::string detail,
                     const Digraph* d = nullptr,
                     std::optional<VertexSet> set = std::nullopt) {
  CheckFailure f{std::move(check), std::move(detail), {}, std::move(set)};
  if (d) f.orientation = d->arcs();
  return f;
}

std::string relation(const char* lhs, int a, const char* op, const char* rhs, int b) {
  std::ostringstream out;
  out << lhs << '=' << a << ' ' << op << ' ' << rhs << '=' << b;
  return out.str();
}

// Calls fn(mask) for every subset of [0, n) with exactly k elements.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  Mask s = full_mask(k);
  const Mask limit = bit(n);
  while (s < limit) {
    fn(s);
    // Gosper's hack: next mask with the same popcount.
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace

ClaimCheck check_containment_claims(const Digraph& d1, const Digraph& d2,
                                    const TripleSelection& sel, ClaimScope scope) {
  const int n = d2.order();
  if (scope == ClaimScope::kAuto)
    scope = n <= 5 ? ClaimScope::kAllHullSets : ClaimScope::kMinimumHullSets;

  const IntervalTable t1(d1);
  const IntervalTable t2(d2);
  const Mask all = full_mask(n);
  ClaimCheck out;

  auto check = [&](Mask s) {
    if (t2.hull(s) != all) return;
    ++out.hull_sets_checked;
    const VertexSet witness(n, s);
    if (!(s & bit(sel.v1))) {
      out.failures.push_back(failure("v1-in-hull-set",
                                     "hull-set of D2 misses the sink v1", &d2, witness));
      return;
    }
    Mask lhs = s;
    Mask rhs = s & ~bit(sel.v1);
    for (int level = 1; level <= n + 1; ++level) {
      const Mask next_lhs = t2.of_set(lhs);
      const Mask next_rhs = t1.of_set(rhs);
      if ((next_lhs & ~next_rhs) != 0) {
        out.failures.push_back(failure(
            level == 1 ? "claim-1" : "claim-2",
            "I^" + std::to_string(level) + "_D2(S) = " +
                to_string(VertexSet(n, next_lhs)) + " not within I^" +
                std::to_string(level) + "_D1(S-v1) = " +
                to_string(VertexSet(n, next_rhs)),
            &d2, witness));
        return;
      }
      const bool stable = next_lhs == lhs && next_rhs == rhs;
      lhs = next_lhs;
      rhs = next_rhs;
      if (stable) break;
      out.max_iterations = std::max(out.max_iterations, level);
    }
  };

  if (scope == ClaimScope::kAllHullSets) {
    for (Mask s = 1; s <= all; ++s) check(s);
  } else {
    const int h = hull_number(t2, extreme_vertices(d2).bits()).value;
    for_each_k_subset(n, h, check);
  }
  return out;
}

SeparationReport verify_separation(const Graph& g, const OrientableNumbers& numbers,
                                   ClaimScope scope) {
  SeparationReport report;
  const int n = g.order();
  auto& fails = report.failures;

  if (!(numbers.g_min.value < numbers.g_max.value))
    fails.push_back(failure("g-separation",
                            relation("g-", numbers.g_min.value, "not <", "g+",
                                     numbers.g_max.value)));
  if (!(numbers.h_min.value < numbers.h_max.value))
    fails.push_back(failure("h-separation",
                            relation("h-", numbers.h_min.value, "not <", "h+",
                                     numbers.h_max.value)));
  if (numbers.h_min.value > numbers.g_min.value ||
      numbers.h_max.value > numbers.g_max.value)
    fails.push_back(failure("hull-below-geodetic",
                            "h- <= g- and h+ <= g+ must both hold"));

  if (is_complete(g)) {
    report.complete_branch = true;
    auto pair = complete_graph_orientations(n);
    report.lower = std::move(pair.min);
    report.upper = std::move(pair.max);
  } else {
    auto built = d2_construction(g);
    report.lower = d1_from_d2(built.d2, built.selection);
    report.upper = std::move(built.d2);
    report.selection = built.selection;
  }
  const auto lower = digraph_invariants(report.lower);
  const auto upper = digraph_invariants(report.upper);
  report.g_lower = lower.geodetic.value;
  report.h_lower = lower.hull.value;
  report.g_upper = upper.geodetic.value;
  report.h_upper = upper.hull.value;

  if (report.complete_branch) {
    if (report.g_upper != n || report.h_upper != n)
      fails.push_back(failure("complete-upper",
                              "transitive tournament must have g = h = n",
                              &report.upper));
    if (report.g_lower != 2 || report.h_lower != 2)
      fails.push_back(failure("complete-lower",
                              "path-reversed tournament must have g = h = 2",
                              &report.lower));
    // The reversed Hamiltonian path is the only geodesic from the last
    // vertex back to the first, so the two path ends form a geodetic set.
    const IntervalTable t(report.lower);
    const Mask ends = bit(0) | bit(n - 1);
    if (t.of_set(ends) != full_mask(n))
      fails.push_back(failure("complete-lower-witness",
                              "{first, last} must be a geodetic set", &report.lower,
                              VertexSet(n, ends)));
  } else {
    const auto& sel = *report.selection;
    if (report.upper.out_degree(sel.v1) != 0)
      fails.push_back(failure("d2-sink", "v1 must be a sink of D2", &report.upper));
    for (int v : {sel.v0, sel.v1, sel.v2})
      if (!is_extreme(report.upper, v))
        fails.push_back(failure("d2-extreme",
                                "vertex " + std::to_string(v) + " must be extreme in D2",
                                &report.upper));
    const DistanceMatrix dist1 = all_pairs_distances(report.lower);
    if (dist1.at(sel.v0, sel.v2) != 2 || dist1.at(sel.v0, sel.v1) != 1 ||
        dist1.at(sel.v1, sel.v2) != 1)
      fails.push_back(failure("d1-geodesic",
                              "v0 -> v1 -> v2 must be a geodesic of D1", &report.lower));
    report.claims = check_containment_claims(report.lower, report.upper, sel, scope);
    for (const auto& f : report.claims.failures) fails.push_back(f);
  }

  if (!(report.h_lower < report.h_upper))
    fails.push_back(failure("constructed-h",
                            relation("h(lower)", report.h_lower, "not <",
                                     "h(upper)", report.h_upper),
                            &report.lower));
  if (!(report.g_lower < report.g_upper))
    fails.push_back(failure("constructed-g",
                            relation("g(lower)", report.g_lower, "not <",
                                     "g(upper)", report.g_upper),
                            &report.lower));
  if (numbers.h_min.value > report.h_lower || report.h_upper > numbers.h_max.value ||
      numbers.g_min.value > report.g_lower || report.g_upper > numbers.g_max.value)
    fails.push_back(failure("constructed-within-range",
                            "constructed values must lie within [min, max] of the "
                            "enumeration"));
  return report;
}

SeparationReport verify_separation(const Graph& g, const OrientableOptions& options) {
  return verify_separation(g, orientable_numbers(g, options));
}

ConvexityReport verify_convexity(const Graph& g, const OrientableNumbers& numbers) {
  ConvexityReport report;
  const int n = g.order();
  auto& fails = report.failures;

  if (numbers.con_max.value != n - 1)
    fails.push_back(failure("con-plus",
                            relation("con+", numbers.con_max.value, "!=", "n-1", n - 1)));

  // Orient every edge at vertex 0 outward, the rest low -> high: 0 is a
  // source, so con = n-1.
  const Digraph star = Digraph::orientation(g, 0);
  report.star_con = convexity_number(star).value;
  if (report.star_con != n - 1)
    fails.push_back(failure("con-plus-constructed",
                            "vertex 0 as a source must give con = n-1", &star));

  report.has_end_vertex = !end_vertices(g).empty();
  const bool strict = numbers.con_min.value < n - 1;
  if (strict == report.has_end_vertex)
    fails.push_back(failure(
        "con-end-vertex",
        relation("con-", numbers.con_min.value, "vs", "n-1", n - 1) +
            (report.has_end_vertex ? " with an end-vertex" : " without end-vertices")));

  if (min_degree(g) >= 2) {
    report.extreme_free = extreme_free_orientation(g);
    const Digraph& d = *report.extreme_free;
    if (!d.is_orientation_of(g))
      fails.push_back(failure("extreme-free-orientation",
                              "output is not an orientation of the input", &d));
    const VertexSet extreme = extreme_vertices(d);
    if (!extreme.empty())
      fails.push_back(failure("extreme-free",
                              "orientation has extreme vertices", &d, extreme));
    const int con = convexity_number(d).value;
    if (con >= n - 1 || con < numbers.con_min.value)
      fails.push_back(failure("extreme-free-con",
                              "con of the extreme-free orientation is " +
                                  std::to_string(con),
                              &d));
  }
  return report;
}

ConvexityReport verify_convexity(const Graph& g, const OrientableOptions& options) {
  return verify_convexity(g, orientable_numbers(g, options));
}

std::string to_string(HgCase c) {
  switch (c) {
    case HgCase::kHG1: return "HG1";
    case HgCase::kHG3: return "HG3";
    case HgCase::kHG4: return "HG4";
    case HgCase::kHG5: return "HG5";
    case HgCase::kHG6: return "HG6";
    case HgCase::kUnlisted: return "UNLISTED";
    case HgCase::kInconsistent: return "INCONSISTENT";
  }
  return "?";
}

HgCase classify(const OrientableNumbers& r) {
  const int hm = r.h_min.value, gm = r.g_min.value;
  const int hp = r.h_max.value, gp = r.g_max.value;
  if (hm > gm || hp > gp || !(gm < gp) || !(hm < hp)) return HgCase::kInconsistent;
  if (hm == gm) return hp == gp ? HgCase::kHG1 : HgCase::kHG3;
  if (gm < hp) return hp == gp ? HgCase::kHG4 : HgCase::kUnlisted;
  if (gm == hp) return HgCase::kHG5;
  return HgCase::kHG6;
}

HgClassification classify_hg(const Graph& g, const OrientableOptions& options) {
  HgClassification out;
  out.numbers = orientable_numbers(g, options);
  out.tag = classify(out.numbers);
  return out;
}

Suites Suites::parse(const std::string& text) {
  Suites s;
  std::stringstream in(text);
  std::string item;
  bool any = false;
  while (std::getline(in, item, ',')) {
    any = true;
    if (item == "all") s = all();
    else if (item == "separation") s.separation = true;
    else if (item == "convexity") s.convexity = true;
    else if (item == "classify") s.classify = true;
    else throw Error("unknown suite '" + item +
                     "' (expected all, separation, convexity or classify)");
  }
  if (!any) throw Error("empty suite selector");
  return s;
}

GraphRecord verify_graph(const Graph& g, const CorpusOptions& options) {
  GraphRecord rec;
  rec.graph = g;
  rec.graph6 = encode_graph6(g);
  if (g.order() < 3) {
    rec.skipped = "fewer than 3 vertices";
    return rec;
  }
  if (!is_connected(g)) {
    rec.skipped = "disconnected";
    return rec;
  }
  try {
    rec.numbers = orientable_numbers(g, options.orientable);
  } catch (const BudgetExceeded& e) {
    rec.input_error = e.what();
    return rec;
  }
  const auto& numbers = *rec.numbers;
  if (options.suites.separation) {
    auto report = verify_separation(g, numbers);
    for (auto& f : report.failures) rec.failures.push_back(std::move(f));
  }
  if (options.suites.convexity) {
    auto report = verify_convexity(g, numbers);
    for (auto& f : report.failures) rec.failures.push_back(std::move(f));
  }
  if (options.suites.classify) {
    rec.tag = classify(numbers);
    if (*rec.tag == HgCase::kInconsistent)
      rec.failures.push_back(failure("classify", "numbers violate h <= g or separation"));
  }
  return rec;
}

CorpusResult corpus_run(std::istream& in, const CorpusOptions& options) {
  CorpusResult result;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    GraphRecord rec;
    rec.line = number;
    rec.graph6 = line;
    try {
      rec.graph = parse_graph6(line);
    } catch (const ParseError& e) {
      rec.input_error = e.what();
    }
    result.records.push_back(std::move(rec));
  }

  auto work = [&](GraphRecord& rec) {
    if (!rec.graph) return;
    GraphRecord done = verify_graph(*rec.graph, options);
    done.line = rec.line;
    done.graph6 = rec.graph6;
    rec = std::move(done);
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    for (auto& rec : result.records) work(rec);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next++; i < result.records.size(); i = next++)
          work(result.records[i]);
      });
    }
    for (auto& t : threads) t.join();
  }

  auto& s = result.summary;
  for (const auto& rec : result.records) {
    ++s.graphs;
    if (!rec.input_error.empty()) ++s.input_errors;
    if (!rec.skipped.empty()) ++s.skipped;
    if (!rec.failures.empty()) ++s.failed_graphs;
    if (rec.tag) ++s.case_counts[static_cast<int>(*rec.tag)];
  }
  return result;
}

}  // namespace geoconv
