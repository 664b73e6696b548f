#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "geoconv/graph_io.hpp"

namespace testing {

inline std::string data_path(const std::string& name) {
  return std::string(GEOCONV_TEST_DATA) + "/" + name;
}

inline std::vector<std::string> read_lines(const std::string& name) {
  std::ifstream in(data_path(name));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

/// Connected graphs on n vertices (3 <= n <= 7) from the reference corpus.
inline std::vector<geoconv::Graph> corpus(int n) {
  std::vector<geoconv::Graph> out;
  for (const auto& line : read_lines("connected" + std::to_string(n) + ".g6"))
    out.push_back(geoconv::parse_graph6(line));
  return out;
}

inline std::vector<geoconv::Graph> corpus_up_to(int max_n) {
  std::vector<geoconv::Graph> out;
  for (int n = 3; n <= max_n; ++n)
    for (auto& g : corpus(n)) out.push_back(std::move(g));
  return out;
}

inline geoconv::Graph graph(int n, std::vector<geoconv::Edge> edges) {
  return geoconv::Graph(n, std::move(edges));
}

inline geoconv::Graph path(int n) {
  std::vector<geoconv::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return geoconv::Graph(n, e);
}

inline geoconv::Graph cycle(int n) {
  std::vector<geoconv::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return geoconv::Graph(n, e);
}

inline geoconv::Graph complete(int n) {
  std::vector<geoconv::Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return geoconv::Graph(n, e);
}

inline geoconv::Graph complete_bipartite(int s, int t) {
  std::vector<geoconv::Edge> e;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) e.push_back({i, s + j});
  return geoconv::Graph(s + t, e);
}

inline geoconv::Digraph directed_path(int n) {
  geoconv::Digraph d(n);
  for (int i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
  return d;
}

inline geoconv::Digraph directed_cycle(int n) {
  geoconv::Digraph d = directed_path(n);
  d.add_arc(n - 1, 0);
  return d;
}

inline geoconv::Digraph transitive_tournament(int n) {
  geoconv::Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.add_arc(i, j);
  return d;
}

}  // namespace testing
