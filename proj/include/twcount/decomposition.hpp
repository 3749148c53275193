#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "twcount/graph.hpp"

namespace twc {

// Bags of vertices arranged in a tree. Valid when every vertex appears in a
// bag, both endpoints of every edge share a bag, and each vertex's bags form
// a connected subtree.
struct TreeDecomposition {
  std::vector<std::vector<std::uint32_t>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  // Largest bag size minus one; -1 when there are no bags.
  int width() const;
};

// Checks the conditions above plus tree shape and returns the width.
// Failures name a witness: VertexUncovered, EdgeUncovered,
// ConnectivityViolated, NotATree.
int validate_tree_decomposition(
    std::uint32_t vertex_count,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
    const TreeDecomposition& t);
int validate_tree_decomposition(const DirectedMultigraph& g,
                                const TreeDecomposition& t);
int validate_tree_decomposition(const UndirectedMultigraph& g,
                                const TreeDecomposition& t);

// Min-fill elimination: repeatedly removes the vertex whose neighborhood
// needs the fewest fill edges, ties broken by smallest vertex id. Fully
// deterministic; the output always validates.
TreeDecomposition heuristic_tree_decomposition(
    std::uint32_t vertex_count,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);
TreeDecomposition heuristic_tree_decomposition(const DirectedMultigraph& g);
TreeDecomposition heuristic_tree_decomposition(const UndirectedMultigraph& g);

enum class NiceNodeKind : std::uint8_t {
  kLeaf,            // empty bag, no children
  kIntroduceVertex, // child bag plus `vertex`
  kIntroduceEdge,   // same bag as child; processes arc/edge `edge_index`
  kForget,          // child bag minus `vertex`
  kJoin,            // two children with identical bags
};

inline constexpr std::size_t kNoChild = static_cast<std::size_t>(-1);

struct NiceNode {
  NiceNodeKind kind = NiceNodeKind::kLeaf;
  std::uint32_t vertex = 0;             // introduce-vertex / forget
  std::uint32_t tail = 0, head = 0;     // introduce-edge endpoints
  std::size_t edge_index = 0;           // index into the source edge list
  std::size_t child = kNoChild;
  std::size_t child2 = kNoChild;
  std::vector<std::uint32_t> bag;       // sorted ascending
};

// Nodes are stored with children before parents; the root has an empty bag
// and every source edge is introduced at exactly one node.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  std::size_t root = 0;

  int width() const;
  std::size_t count(NiceNodeKind kind) const;
};

// Normalizes a valid decomposition into nice form. Each edge is attached to
// the lowest-indexed bag containing both endpoints. InvalidDecomposition if
// the input does not validate.
NiceTreeDecomposition make_nice(
    std::uint32_t vertex_count,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
    const TreeDecomposition& t);
NiceTreeDecomposition make_nice(const DirectedMultigraph& g,
                                const TreeDecomposition& t);
NiceTreeDecomposition make_nice(const UndirectedMultigraph& g,
                                const TreeDecomposition& t);

}  // namespace twc
