#pragma once

#include <string>

#include "json.hpp"

#include "geoconv/verifier.hpp"

namespace geoconv {

nlohmann::json arcs_to_json(const std::vector<Arc>& arcs);
nlohmann::json set_to_json(const VertexSet& s);

/// The six orientable numbers with one witness arc list per extremum.
nlohmann::json numbers_to_json(const Graph& g, const OrientableNumbers& numbers);

nlohmann::json digraph_invariants_to_json(const Digraph& d,
                                          const DigraphInvariants& inv);
nlohmann::json selection_to_json(const TripleSelection& sel);
nlohmann::json failure_to_json(const CheckFailure& f);

/// One JSONL record per corpus line.
nlohmann::json record_to_json(const GraphRecord& rec);
nlohmann::json summary_to_json(const CorpusSummary& s);

std::string csv_header();
std::string csv_row(const GraphRecord& rec);

}  // namespace geoconv
