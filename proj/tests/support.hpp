#pragma once

// Deterministic builders shared by the test binaries: classic graphs,
// seeded random instances, and reference sequences, all independent of the
// code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "twcount/bigint.hpp"
#include "twcount/decomposition.hpp"
#include "twcount/graph.hpp"
#include "twcount/matrix.hpp"

namespace twtest {

using twc::DirectedMultigraph;
using twc::Int;
using twc::SquareIntMatrix;
using twc::TreeDecomposition;
using twc::UndirectedMultigraph;

inline DirectedMultigraph directed_cycle(std::uint32_t n) {
  DirectedMultigraph d(n);
  for (std::uint32_t v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
  return d;
}

inline UndirectedMultigraph undirected_cycle(std::uint32_t n) {
  UndirectedMultigraph g(n);
  for (std::uint32_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline UndirectedMultigraph complete_graph(std::uint32_t n) {
  UndirectedMultigraph g(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

inline DirectedMultigraph complete_bidirected(std::uint32_t n) {
  DirectedMultigraph d(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (a != b) d.add_arc(a, b);
  return d;
}

// Two triangles sharing vertex 0: vertices {0,1,2} and {0,3,4}.
inline UndirectedMultigraph bowtie() {
  UndirectedMultigraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 0);
  return g;
}

inline SquareIntMatrix identity_matrix(std::size_t n) {
  SquareIntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

inline SquareIntMatrix ones_matrix(std::size_t n) {
  SquareIntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = 1;
  return m;
}

// Adjacency matrix of the triangle K_3.
inline SquareIntMatrix triangle_adjacency() {
  SquareIntMatrix m = ones_matrix(3);
  for (std::size_t i = 0; i < 3; ++i) m.at(i, i) = 0;
  return m;
}

inline SquareIntMatrix random_matrix(std::mt19937& rng, std::size_t n,
                                     int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  SquareIntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

// Entries only where |i - j| <= band, so the support stays narrow.
inline SquareIntMatrix random_banded_matrix(std::mt19937& rng, std::size_t n,
                                            std::size_t band, int lo,
                                            int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  SquareIntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i <= j + band && j <= i + band) m.at(i, j) = entry(rng);
  return m;
}

inline DirectedMultigraph random_digraph(std::mt19937& rng, std::uint32_t n,
                                         std::size_t arcs) {
  std::uniform_int_distribution<std::uint32_t> vertex(0, n - 1);
  DirectedMultigraph d(n);
  for (std::size_t i = 0; i < arcs; ++i) d.add_arc(vertex(rng), vertex(rng));
  return d;
}

inline UndirectedMultigraph random_multigraph(std::mt19937& rng,
                                              std::uint32_t n,
                                              std::size_t edges) {
  std::uniform_int_distribution<std::uint32_t> vertex(0, n - 1);
  UndirectedMultigraph g(n);
  for (std::size_t i = 0; i < edges; ++i) g.add_edge(vertex(rng), vertex(rng));
  return g;
}

// Balanced and weakly connected by construction: a union of directed closed
// walks that all pass through vertex 0.
inline DirectedMultigraph random_eulerian_digraph(std::mt19937& rng,
                                                  std::uint32_t n,
                                                  std::size_t max_arcs) {
  std::uniform_int_distribution<std::uint32_t> vertex(0, n - 1);
  std::uniform_int_distribution<int> len(1, 3);
  DirectedMultigraph d(n);
  // Signed: a walk that happens to return to 0 early closes with one extra
  // arc pair and may overdraw the budget by one.
  std::ptrdiff_t arcs_left = static_cast<std::ptrdiff_t>(max_arcs);
  while (arcs_left >= 2) {
    // One closed walk 0 -> v_1 -> ... -> v_k -> 0 of length k+1 <= arcs_left.
    const std::size_t k = std::min<std::size_t>(
        static_cast<std::size_t>(len(rng)),
        static_cast<std::size_t>(arcs_left - 1));
    std::uint32_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t next = vertex(rng);
      if (next == prev) next = (next + 1) % n;  // no self-loops in the corpus
      d.add_arc(prev, next);
      prev = next;
    }
    if (prev == 0) {
      d.add_arc(0, (vertex(rng) % (n - 1)) + 1);
      // The walk already returned to 0; balance the extra arc with a return.
      const std::uint32_t v = d.arcs().back().head;
      d.add_arc(v, 0);
      arcs_left -= static_cast<std::ptrdiff_t>(k) + 2;
    } else {
      d.add_arc(prev, 0);
      arcs_left -= static_cast<std::ptrdiff_t>(k) + 1;
    }
  }
  return d;
}

// Even degrees and connected edges by construction: a union of undirected
// closed walks through vertex 0, never traversing a self-loop.
inline UndirectedMultigraph random_eulerian_multigraph(std::mt19937& rng,
                                                       std::uint32_t n,
                                                       std::size_t max_edges) {
  std::uniform_int_distribution<std::uint32_t> vertex(0, n - 1);
  std::uniform_int_distribution<int> len(1, 4);
  UndirectedMultigraph g(n);
  std::ptrdiff_t edges_left = static_cast<std::ptrdiff_t>(max_edges);
  while (edges_left >= 2) {
    const std::size_t k = std::min<std::size_t>(
        static_cast<std::size_t>(len(rng)),
        static_cast<std::size_t>(edges_left - 1));
    std::uint32_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t next = vertex(rng);
      if (next == prev) next = (next + 1) % n;
      g.add_edge(prev, next);
      prev = next;
    }
    if (prev == 0) {
      const std::uint32_t v = (vertex(rng) % (n - 1)) + 1;
      g.add_edge(0, v);
      g.add_edge(v, 0);
      edges_left -= static_cast<std::ptrdiff_t>(k) + 2;
    } else {
      g.add_edge(prev, 0);
      edges_left -= static_cast<std::ptrdiff_t>(k) + 1;
    }
  }
  return g;
}

// A second, structurally different decomposition of the same graph: one
// fresh leaf bag {u, v} per edge hung off a bag already containing both
// endpoints. Bags gain siblings, so the nice form acquires join nodes.
inline TreeDecomposition edge_leaf_decomposition(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
    TreeDecomposition base) {
  const std::size_t original = base.bags.size();
  for (const auto& [u, v] : edges) {
    for (std::size_t b = 0; b < original; ++b) {
      const auto& bag = base.bags[b];
      if (std::find(bag.begin(), bag.end(), u) != bag.end() &&
          std::find(bag.begin(), bag.end(), v) != bag.end()) {
        base.bags.push_back(u == v ? std::vector<std::uint32_t>{u}
                                   : std::vector<std::uint32_t>{u, v});
        base.tree_edges.emplace_back(b, base.bags.size() - 1);
        break;
      }
    }
  }
  return base;
}

// Unsigned Stirling numbers of the first kind c(n, k) for k = 0..n, by the
// recurrence c(n+1, k) = n*c(n, k) + c(n, k-1).
inline std::vector<Int> stirling_first_row(unsigned n) {
  std::vector<Int> row{Int(1)};  // c(0, 0) = 1
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Int> next(row.size() + 1, Int(0));
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] += row[k] * static_cast<long>(i);
      next[k + 1] += row[k];
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace twtest
