#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "twcount/decomposition.hpp"
#include "twcount/graph.hpp"
#include "twcount/matrix.hpp"

namespace twc::io {

// Text formats, all 1-indexed on disk (the library is 0-indexed):
//   undirected graph: header "p tw <n> <m>", then m lines "u v"; a repeated
//     line is a parallel edge. Lines whose first token is "c" are comments.
//   directed graph:   header "p dgr <n> <m>", then m lines "u v" (arc u->v).
//   decomposition:    header "s td <bags> <max_bag_size> <n>", then one
//     "b <i> <vertices...>" line per bag, then one "<i> <j>" line per
//     tree edge between bags.
//   matrix:           "<n>" followed by n rows of n decimal integers
//     (whitespace-separated; entries may exceed 64 bits).
// Malformed input reports ParseError with a line number.

UndirectedMultigraph read_undirected_graph(std::istream& in);
DirectedMultigraph read_directed_graph(std::istream& in);

// Parsed decomposition plus the vertex count its header declares.
struct DecompositionFile {
  TreeDecomposition decomposition;
  std::uint32_t vertex_count = 0;
};
DecompositionFile read_decomposition(std::istream& in);

SquareIntMatrix read_matrix(std::istream& in);

void write_undirected_graph(std::ostream& out, const UndirectedMultigraph& g);
void write_directed_graph(std::ostream& out, const DirectedMultigraph& d);
void write_decomposition(std::ostream& out, const TreeDecomposition& t,
                         std::uint32_t vertex_count);
void write_matrix(std::ostream& out, const SquareIntMatrix& m);

// Whole file as bytes; ParseError when the file cannot be opened.
std::string read_file(const std::string& path);

}  // namespace twc::io
