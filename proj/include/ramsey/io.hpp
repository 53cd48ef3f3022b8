#pragma once

#include <filesystem>
#include <iosfwd>

#include "ramsey/graph.hpp"

namespace ramsey {

// DIMACS edge format: optional `c` comment lines, one `p edge <n> <m>`
// header, then exactly m `e <u> <v>` lines with 1-based endpoints. Errors
// (missing or repeated header, malformed line, endpoint out of range,
// duplicate or self-loop edge, edge count mismatch) raise IoError with the
// offending line number.
//
// An edge list carries no reflexive information, so loaded graphs start with
// no eligible vertices; callers treating the file as a plain simple graph
// opt in to full eligibility ("loops-free" reading).
Graph load_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);
void save_graph(std::ostream& out, const Graph& g);
void save_graph(const std::filesystem::path& path, const Graph& g);

// Model format: optional `#` comment lines, one `n <size>` header, then
// `S <a> <b>` pair lines with 0-based elements. Duplicate pairs and
// out-of-range elements raise IoError with the line number.
Model load_model(std::istream& in);
Model load_model(const std::filesystem::path& path);
void save_model(std::ostream& out, const Model& m);
void save_model(const std::filesystem::path& path, const Model& m);

}  // namespace ramsey
