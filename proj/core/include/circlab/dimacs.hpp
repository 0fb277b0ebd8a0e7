#pragma once

#include <iosfwd>
#include <string>

#include "circlab/graph.hpp"

namespace circlab {

/// Parses DIMACS ".col" text: "c" comments, one "p edge n m" line, then
/// "e u v" lines with 1-indexed endpoints. A comment of the form
/// "c circlab {json}" restores labels and provenance.
Graph read_dimacs(std::istream& in);

/// Writes the header, edges in ascending order and, when `embed_metadata` is
/// set and the graph has labels or provenance, a "c circlab {json}" comment.
void write_dimacs(std::ostream& out, const Graph& graph, bool embed_metadata = true);

/// "<stem>.labels.json" for "<stem>.col" (or "<path>.labels.json").
std::string labels_sidecar_path(const std::string& path);

/// Reads a graph file; "-" means standard input. A labels sidecar next to
/// the file, when present, overrides embedded metadata.
Graph load_graph(const std::string& path);

/// Writes "<path>" and, when the graph has labels or provenance, the sidecar.
/// "-" writes to standard output with embedded metadata instead.
void save_graph(const Graph& graph, const std::string& path);

}  // namespace circlab
