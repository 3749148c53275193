#pragma once

#include <cstdint>
#include <vector>

#include "twcount/bigint.hpp"
#include "twcount/cycle_cover.hpp"
#include "twcount/decomposition.hpp"
#include "twcount/graph.hpp"

namespace twc {

// Eulerian-orientation enumeration refuses graphs with more edges than this
// by default (the orientation count can reach 2^edges).
inline constexpr int kDefaultEdgeLimit = 30;

// One direction bit per edge, by edge index: false keeps the stored {a,b}
// order as a->b, true reverses it.
using Orientation = std::vector<bool>;

// The digraph obtained by directing every edge of g according to bits.
DirectedMultigraph orient(const UndirectedMultigraph& g,
                          const Orientation& bits);

// Spanning in-trees of d oriented toward root: every non-root vertex has
// out-degree one and its chosen arcs reach root. Computed as the determinant
// of the Laplacian with root's row and column deleted; the decomposition is
// over d's vertices and is narrowed to the minor internally. Self-loops
// never affect the count.
Int count_arborescences(const DirectedMultigraph& d, std::uint32_t root,
                        const TreeDecomposition& td,
                        int width_limit = kDefaultWidthLimit);
Int count_arborescences(const DirectedMultigraph& d, std::uint32_t root,
                        int width_limit = kDefaultWidthLimit);

// Kirchhoff count of spanning trees: each edge becomes two antiparallel
// arcs and the arborescences toward one root are counted; the value is the
// same for every root. 0 when g is disconnected, 1 when g has no vertices.
Int count_spanning_trees(const UndirectedMultigraph& g,
                         const TreeDecomposition& td,
                         int width_limit = kDefaultWidthLimit);
Int count_spanning_trees(const UndirectedMultigraph& g,
                         int width_limit = kDefaultWidthLimit);

// Euler circuits of d counted up to cyclic rotation (a directed n-cycle has
// exactly one): arborescence count at one vertex times the product of
// (out-degree - 1)! over vertices with arcs. 0 when some vertex is
// unbalanced or the arcs are disconnected; 1 for an arcless graph. Isolated
// vertices are ignored; a supplied decomposition covers d's vertex ids and
// is narrowed internally.
Int count_directed_euler_tours(const DirectedMultigraph& d,
                               const TreeDecomposition& td,
                               int width_limit = kDefaultWidthLimit);
Int count_directed_euler_tours(const DirectedMultigraph& d,
                               int width_limit = kDefaultWidthLimit);

// Every orientation of g in which each vertex has in-degree = out-degree,
// in lexicographic order of the direction bits; empty when some degree is
// odd. Self-loops are rejected (a loop has no meaningful direction) and so
// are graphs with more than edge_limit edges.
std::vector<Orientation> enumerate_eulerian_orientations(
    const UndirectedMultigraph& g, int edge_limit = kDefaultEdgeLimit);

// Euler tours of g counted up to rotation and reversal (a cycle C_n has
// exactly one): half the sum of directed tour counts over all Eulerian
// orientations. The per-orientation factorial product is the same for every
// orientation, so the sum collapses to
//   prod_v (deg(v)/2 - 1)! * (sum over orientations of arborescence counts) / 2.
// 0 when some degree is odd or the edges are disconnected; 1 for an edgeless
// graph; SelfLoopUnsupported when g has a loop.
Int count_undirected_euler_tours(const UndirectedMultigraph& g,
                                 const TreeDecomposition& td,
                                 int width_limit = kDefaultWidthLimit,
                                 int edge_limit = kDefaultEdgeLimit);
Int count_undirected_euler_tours(const UndirectedMultigraph& g,
                                 int width_limit = kDefaultWidthLimit,
                                 int edge_limit = kDefaultEdgeLimit);

}  // namespace twc
