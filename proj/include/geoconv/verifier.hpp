#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geoconv/invariants.hpp"
#include "geoconv/orienters.hpp"

namespace geoconv {

/// A failed check with enough data to reproduce it.
struct CheckFailure {
  std::string check;
  std::string detail;
  std::vector<Arc> orientation;   // empty when not tied to one orientation
  std::optional<VertexSet> set;
};

/// Which hull-sets of D2 the containment claims are checked on.
enum class ClaimScope {
  kAuto,             // every hull-set for n <= 5, minimum hull-sets above
  kAllHullSets,
  kMinimumHullSets,
};

struct ClaimCheck {
  std::uint64_t hull_sets_checked = 0;
  int max_iterations = 0;  // largest l reached before both sides stabilised
  std::vector<CheckFailure> failures;
};

/// For each hull-set S of d2 in scope: I_D2(S) within I_D1(S - v1), and
/// I^l_D2(S) within I^l_D1(S - v1) for every l until both sequences are
/// constant. Also checks that v1 lies in every such S.
ClaimCheck check_containment_claims(const Digraph& d1, const Digraph& d2,
                                    const TripleSelection& sel,
                                    ClaimScope scope = ClaimScope::kAuto);

struct SeparationReport {
  bool complete_branch = false;
  Digraph lower;  // D1, or the path-reversed tournament for complete graphs
  Digraph upper;  // D2, or the transitive tournament
  std::optional<TripleSelection> selection;
  int g_lower = 0, g_upper = 0, h_lower = 0, h_upper = 0;
  ClaimCheck claims;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Strict separation g- < g+ and h- < h+ from the enumerated numbers, plus the
/// constructive route: the complete-graph pair, or D1/D2 with the containment
/// claims and h(D1) < h(D2), g(D1) < g(D2) sandwiched between the extremes.
SeparationReport verify_separation(const Graph& g, const OrientableNumbers& numbers,
                                   ClaimScope scope = ClaimScope::kAuto);
SeparationReport verify_separation(const Graph& g, const OrientableOptions& options = {});

struct ConvexityReport {
  bool has_end_vertex = false;
  int star_con = 0;  // con of the orientation making vertex 0 a source
  std::optional<Digraph> extreme_free;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// con+ = n-1 (by enumeration and by a constructed orientation), and
/// con- < n-1 iff g has no end-vertex; for minimum degree 2 the extreme-free
/// orientation must have no extreme vertex.
ConvexityReport verify_convexity(const Graph& g, const OrientableNumbers& numbers);
ConvexityReport verify_convexity(const Graph& g, const OrientableOptions& options = {});

/// Orderings of (h-, g-, h+, g+) allowed once h <= g and the strict
/// separations hold. kUnlisted is h- < g- < h+ < g+, which the five named
/// relations omit; kInconsistent means a theorem-level relation failed.
enum class HgCase { kHG1, kHG3, kHG4, kHG5, kHG6, kUnlisted, kInconsistent };

std::string to_string(HgCase c);
HgCase classify(const OrientableNumbers& numbers);

struct HgClassification {
  OrientableNumbers numbers;
  HgCase tag = HgCase::kInconsistent;
};
HgClassification classify_hg(const Graph& g, const OrientableOptions& options = {});

// ---------------------------------------------------------------------------
// Corpus runs.
// ---------------------------------------------------------------------------

struct Suites {
  bool separation = false;
  bool convexity = false;
  bool classify = false;

  static Suites all() { return {true, true, true}; }
  /// "all", "separation", "convexity", "classify" or a comma-separated list.
  static Suites parse(const std::string& text);
};

struct CorpusOptions {
  Suites suites = Suites::all();
  OrientableOptions orientable;
  /// Graphs verified concurrently; each graph then enumerates single-threaded.
  int workers = 1;
};

/// Outcome for one input line.
struct GraphRecord {
  std::size_t line = 0;
  std::string graph6;
  std::optional<Graph> graph;
  std::string input_error;  // parse or budget error
  std::string skipped;      // e.g. disconnected or n < 3
  std::optional<OrientableNumbers> numbers;
  std::optional<HgCase> tag;
  std::vector<CheckFailure> failures;
};

struct CorpusSummary {
  std::size_t graphs = 0;
  std::size_t input_errors = 0;
  std::size_t skipped = 0;
  std::size_t failed_graphs = 0;
  std::size_t case_counts[7] = {};
  /// 0 all pass, 1 theorem violation, 2 input error.
  int exit_code() const {
    if (failed_graphs > 0) return 1;
    if (input_errors > 0) return 2;
    return 0;
  }
};

struct CorpusResult {
  std::vector<GraphRecord> records;  // input order
  CorpusSummary summary;
};

/// Runs the selected suites on each non-blank graph6 line of `in`.
CorpusResult corpus_run(std::istream& in, const CorpusOptions& options = {});
GraphRecord verify_graph(const Graph& g, const CorpusOptions& options);

}  // namespace geoconv
