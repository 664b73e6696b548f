#include "geoconv/report.hpp"

#include <sstream>

namespace geoconv {

using nlohmann::json;

json arcs_to_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

json set_to_json(const VertexSet& s) { return s.members(); }

json numbers_to_json(const Graph& g, const OrientableNumbers& r) {
  const std::pair<const char*, const Extremum*> items[] = {
      {"g_minus", &r.g_min},     {"g_plus", &r.g_max},
      {"h_minus", &r.h_min},     {"h_plus", &r.h_max},
      {"con_minus", &r.con_min}, {"con_plus", &r.con_max},
  };
  json values = json::object();
  json witnesses = json::object();
  for (const auto& [key, e] : items) {
    values[key] = e->value;
    witnesses[key] = arcs_to_json(Digraph::orientation(g, e->mask).arcs());
  }
  return {{"numbers", values},
          {"witness_orientations", witnesses},
          {"orientations_examined", r.orientations}};
}

json digraph_invariants_to_json(const Digraph& d, const DigraphInvariants& inv) {
  json out = {{"n", d.order()},
              {"arcs", arcs_to_json(d.arcs())},
              {"g", inv.geodetic.value},
              {"geodetic_set", set_to_json(inv.geodetic.witness)},
              {"h", inv.hull.value},
              {"hull_set", set_to_json(inv.hull.witness)}};
  if (d.order() >= 2) {
    out["con"] = inv.convexity.value;
    out["convex_set"] = set_to_json(inv.convexity.witness);
  }
  return out;
}

json selection_to_json(const TripleSelection& sel) {
  return {{"v0", sel.v0},
          {"v1", sel.v1},
          {"v2", sel.v2},
          {"U", set_to_json(sel.rest)},
          {"U1", set_to_json(sel.u1)},
          {"U2", set_to_json(sel.u2)},
          {"U3", set_to_json(sel.u3)},
          {"U4", set_to_json(sel.u4)},
          {"U5", set_to_json(sel.u5)}};
}

json failure_to_json(const CheckFailure& f) {
  json out = {{"check", f.check}, {"detail", f.detail}};
  if (!f.orientation.empty()) out["orientation"] = arcs_to_json(f.orientation);
  if (f.set) out["set"] = set_to_json(*f.set);
  return out;
}

json record_to_json(const GraphRecord& rec) {
  json out = {{"line", rec.line}, {"graph6", rec.graph6}};
  if (!rec.input_error.empty()) {
    out["error"] = rec.input_error;
    return out;
  }
  if (rec.graph) {
    out["n"] = rec.graph->order();
    out["m"] = rec.graph->size();
  }
  if (!rec.skipped.empty()) {
    out["skipped"] = rec.skipped;
    return out;
  }
  if (rec.numbers && rec.graph) out.update(numbers_to_json(*rec.graph, *rec.numbers));
  if (rec.tag) out["case"] = to_string(*rec.tag);
  json failures = json::array();
  for (const auto& f : rec.failures) failures.push_back(failure_to_json(f));
  out["status"] = rec.failures.empty() ? "pass" : "fail";
  out["failures"] = failures;
  return out;
}

json summary_to_json(const CorpusSummary& s) {
  json cases = json::object();
  for (int c = 0; c < 7; ++c)
    if (s.case_counts[c] > 0)
      cases[to_string(static_cast<HgCase>(c))] = s.case_counts[c];
  return {{"summary",
           {{"graphs", s.graphs},
            {"input_errors", s.input_errors},
            {"skipped", s.skipped},
            {"failed_graphs", s.failed_graphs},
            {"cases", cases},
            {"exit_code", s.exit_code()}}}};
}

std::string csv_header() {
  return "line,graph6,n,m,g_minus,g_plus,h_minus,h_plus,con_minus,con_plus,case,status";
}

std::string csv_row(const GraphRecord& rec) {
  std::ostringstream out;
  out << rec.line << ',' << rec.graph6 << ',';
  if (rec.graph)
    out << rec.graph->order() << ',' << rec.graph->size() << ',';
  else
    out << ",,";
  if (rec.numbers) {
    const auto& r = *rec.numbers;
    out << r.g_min.value << ',' << r.g_max.value << ',' << r.h_min.value << ','
        << r.h_max.value << ',' << r.con_min.value << ',' << r.con_max.value << ',';
  } else {
    out << ",,,,,,";
  }
  out << (rec.tag ? to_string(*rec.tag) : "") << ',';
  if (!rec.input_error.empty())
    out << "error";
  else if (!rec.skipped.empty())
    out << "skipped";
  else
    out << (rec.failures.empty() ? "pass" : "fail");
  return out.str();
}

}  // namespace geoconv
