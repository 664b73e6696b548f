#pragma once

#include <string>
#include <string_view>

#include "geoconv/graph.hpp"

namespace geoconv {

/// Decodes one graph6 line (short form, n <= 62). A trailing newline and the
/// optional ">>graph6<<" file header are accepted. Throws ParseError naming
/// the byte offset of the first bad byte.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6 short form, without a trailing newline.
std::string encode_graph6(const Graph& g);

/// Parses "n" on the first line followed by one "u v" pair per line. Blank
/// lines and lines starting with '#' are skipped. Duplicate pairs (in either
/// order), self-loops and out-of-range indices are errors.
Graph parse_edge_list(std::string_view text);

/// Same text format read as directed arcs "tail head".
Digraph parse_arc_list(std::string_view text);

}  // namespace geoconv
