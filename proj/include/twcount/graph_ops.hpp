#pragma once

#include "twcount/graph.hpp"
#include "twcount/matrix.hpp"

namespace twc {

// Digraph with one arc per nonzero entry: m[i][j] != 0 gives arc i->j,
// nonzero diagonal entries give self-loops. Arcs are emitted row-major.
DirectedMultigraph support_digraph(const SquareIntMatrix& m);

// Out-degree Laplacian: diagonal holds out-degrees, entry (i,j) holds minus
// the multiplicity of i->j. Self-loops are excluded entirely.
SquareIntMatrix laplacian(const DirectedMultigraph& d);

// Two antiparallel arcs per edge, in edge order.
DirectedMultigraph bidirect(const UndirectedMultigraph& g);

// Replaces edge j = {u,v} by {u, n+j} and {n+j, v}; new vertices are
// numbered after the old ones in edge-input order.
UndirectedMultigraph subdivide(const UndirectedMultigraph& g);

// Adds n - outdeg(v) pendant partners to each vertex v, each wired v->p and
// p->v, so every original vertex reaches out-degree n = |V(d)|. Arborescence
// counts at original roots are unchanged. OutDegreeExceedsN if some vertex
// already exceeds n.
DirectedMultigraph degree_pad(const DirectedMultigraph& d);

// Order-detection gadget on a directed path 0 -> 1 -> ... -> n-1: adds the
// chord s->t and a self-loop at every vertex except s and t. The only
// possible non-loop cycle runs t -> ... -> s -> t, so the adjacency
// determinant is 0 exactly when s precedes t and +-1 otherwise. s and t must
// be distinct interior vertices (InvalidEndpoints otherwise). The underlying
// undirected graph is a path plus one chord, so its treewidth is at most 2.
DirectedMultigraph ord_gadget(std::uint32_t n, std::uint32_t s,
                              std::uint32_t t);

// Adjacency matrix with multiplicities; entry (i,j) counts arcs i->j.
SquareIntMatrix adjacency_matrix(const DirectedMultigraph& d);
SquareIntMatrix adjacency_matrix(const UndirectedMultigraph& g);

}  // namespace twc
