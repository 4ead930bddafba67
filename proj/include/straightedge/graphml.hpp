#pragma once

#include <string>

#include "straightedge/graph.hpp"

namespace straightedge {

struct ImportResult {
  SpatialGraph graph;
  int duplicate_edges_dropped = 0;
  int zero_length_edges_dropped = 0;  // includes self-loops
};

/// Reads the GraphML subset this tool emits: nodes with numeric "x" and "y"
/// attributes (declared through <key attr.name="...">), undirected edges by
/// node id. Duplicate edges are collapsed and zero-length edges dropped, both
/// counted in the result. Throws ParseError on malformed input and
/// MissingCoordinateAttribute when a node lacks a coordinate.
ImportResult import_graphml(const std::string& path);

/// Writes g as GraphML with full-precision coordinates; import_graphml reads
/// it back losslessly.
void write_graphml(const SpatialGraph& g, const std::string& path);

/// Fallback plain-text importer: vertex file with one "x,y" pair per line,
/// edge file with one "u,v" index pair per line. A single leading header
/// line is skipped when non-numeric.
ImportResult import_csv_graph(const std::string& vertex_path, const std::string& edge_path);

}  // namespace straightedge
