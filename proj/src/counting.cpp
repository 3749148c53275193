#include "twcount/counting.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "twcount/errors.hpp"
#include "twcount/graph_ops.hpp"
#include "twcount/matrix.hpp"

namespace twc {

namespace {

// Connected components over vertex ids, treating arcs/edges as undirected.
struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::uint32_t n) : parent(n) {
    for (std::uint32_t v = 0; v < n; ++v) parent[v] = v;
  }
  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

// True when all vertices with flag set share one component.
template <class Pairs>
bool one_component(std::uint32_t n, const Pairs& pairs,
                   const std::vector<bool>& active) {
  UnionFind uf(n);
  for (const auto& [a, b] : pairs) uf.unite(a, b);
  std::uint32_t root = n;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!active[v]) continue;
    if (root == n)
      root = uf.find(v);
    else if (uf.find(v) != root)
      return false;
  }
  return true;
}

// Drops `removed` from every bag and renumbers the remaining vertices down
// by one past it. Tree shape and subtree connectivity are preserved.
TreeDecomposition without_vertex(const TreeDecomposition& td,
                                 std::uint32_t removed) {
  TreeDecomposition out;
  out.tree_edges = td.tree_edges;
  out.bags.reserve(td.bags.size());
  for (const auto& bag : td.bags) {
    std::vector<std::uint32_t> nb;
    nb.reserve(bag.size());
    for (std::uint32_t v : bag) {
      if (v == removed) continue;
      nb.push_back(v < removed ? v : v - 1);
    }
    out.bags.push_back(std::move(nb));
  }
  return out;
}

// Laplacian of d with row and column `root` deleted.
SquareIntMatrix laplacian_minor(const DirectedMultigraph& d,
                                std::uint32_t root) {
  const SquareIntMatrix full = laplacian(d);
  const std::size_t n = full.size();
  SquareIntMatrix minor(n - 1);
  for (std::size_t i = 0, ri = 0; i < n; ++i) {
    if (i == root) continue;
    for (std::size_t j = 0, rj = 0; j < n; ++j) {
      if (j == root) continue;
      minor.at(ri, rj) = full.at(i, j);
      ++rj;
    }
    ++ri;
  }
  return minor;
}

// Keeps only flagged vertices in every bag, renumbering them by newid.
TreeDecomposition restricted(const TreeDecomposition& td,
                             const std::vector<bool>& keep,
                             const std::vector<std::uint32_t>& newid) {
  TreeDecomposition out;
  out.tree_edges = td.tree_edges;
  out.bags.reserve(td.bags.size());
  for (const auto& bag : td.bags) {
    std::vector<std::uint32_t> nb;
    for (std::uint32_t v : bag)
      if (keep[v]) nb.push_back(newid[v]);
    out.bags.push_back(std::move(nb));
  }
  return out;
}

}  // namespace

DirectedMultigraph orient(const UndirectedMultigraph& g,
                          const Orientation& bits) {
  if (bits.size() != g.edges().size())
    fail(errc::invalid_argument,
         "orientation has " + std::to_string(bits.size()) + " bits for " +
             std::to_string(g.edges().size()) + " edges");
  DirectedMultigraph d(g.vertex_count());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    const Edge& e = g.edges()[j];
    if (bits[j])
      d.add_arc(e.b, e.a);
    else
      d.add_arc(e.a, e.b);
  }
  return d;
}

Int count_arborescences(const DirectedMultigraph& d, std::uint32_t root,
                        const TreeDecomposition& td, int width_limit) {
  if (root >= d.vertex_count())
    fail(errc::invalid_argument,
         "root " + std::to_string(root) + " out of range for " +
             std::to_string(d.vertex_count()) + " vertices");
  const SquareIntMatrix minor = laplacian_minor(d, root);
  const TreeDecomposition narrowed = without_vertex(td, root);
  const DirectedMultigraph support = support_digraph(minor);
  return determinant(minor, make_nice(support, narrowed), width_limit);
}

Int count_arborescences(const DirectedMultigraph& d, std::uint32_t root,
                        int width_limit) {
  return count_arborescences(d, root, heuristic_tree_decomposition(d),
                             width_limit);
}

Int count_spanning_trees(const UndirectedMultigraph& g,
                         const TreeDecomposition& td, int width_limit) {
  if (g.vertex_count() == 0) return 1;
  if (!one_component(g.vertex_count(), endpoint_pairs(g),
                     std::vector<bool>(g.vertex_count(), true)))
    return 0;
  return count_arborescences(bidirect(g), 0, td, width_limit);
}

Int count_spanning_trees(const UndirectedMultigraph& g, int width_limit) {
  return count_spanning_trees(g, heuristic_tree_decomposition(g),
                              width_limit);
}

Int count_directed_euler_tours(const DirectedMultigraph& d,
                               const TreeDecomposition& td, int width_limit) {
  if (d.arcs().empty()) return 1;
  const std::vector<std::uint32_t> out = d.out_degrees();
  const std::vector<std::uint32_t> in = d.in_degrees();
  std::vector<bool> active(d.vertex_count());
  for (std::uint32_t v = 0; v < d.vertex_count(); ++v) {
    if (out[v] != in[v]) return 0;
    active[v] = out[v] + in[v] > 0;
  }
  if (!one_component(d.vertex_count(), endpoint_pairs(d), active)) return 0;

  // Compress away isolated vertices so the arborescence count sees only the
  // touring part of the graph.
  std::vector<std::uint32_t> newid(d.vertex_count());
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < d.vertex_count(); ++v)
    if (active[v]) newid[v] = next++;
  DirectedMultigraph sub(next);
  for (const Arc& a : d.arcs()) sub.add_arc(newid[a.tail], newid[a.head]);

  Int tours =
      count_arborescences(sub, 0, restricted(td, active, newid), width_limit);
  for (std::uint32_t v = 0; v < d.vertex_count(); ++v)
    if (active[v]) tours *= factorial(out[v] - 1);
  return tours;
}

Int count_directed_euler_tours(const DirectedMultigraph& d, int width_limit) {
  return count_directed_euler_tours(d, heuristic_tree_decomposition(d),
                                    width_limit);
}

std::vector<Orientation> enumerate_eulerian_orientations(
    const UndirectedMultigraph& g, int edge_limit) {
  if (g.has_self_loop())
    fail(errc::self_loop_unsupported,
         "a self-loop admits no orientation");
  const std::size_t m = g.edges().size();
  if (edge_limit < 0 ||
      m > static_cast<std::size_t>(edge_limit))
    fail(errc::edge_limit_exceeded,
         std::to_string(m) + " edges exceeds orientation limit " +
             std::to_string(edge_limit));
  std::vector<std::uint32_t> out_left = g.degrees();
  for (std::uint32_t& dv : out_left) {
    if (dv % 2 != 0) return {};
    dv /= 2;
  }
  std::vector<std::uint32_t> in_left = out_left;

  std::vector<Orientation> found;
  Orientation bits(m, false);
  // Direction bits in lexicographic order: edge 0 is the most significant
  // position and false sorts before true.
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == m) {
      found.push_back(bits);
      return;
    }
    const Edge& e = g.edges()[j];
    if (out_left[e.a] > 0 && in_left[e.b] > 0) {
      --out_left[e.a];
      --in_left[e.b];
      bits[j] = false;
      self(self, j + 1);
      ++out_left[e.a];
      ++in_left[e.b];
    }
    if (out_left[e.b] > 0 && in_left[e.a] > 0) {
      --out_left[e.b];
      --in_left[e.a];
      bits[j] = true;
      self(self, j + 1);
      bits[j] = false;
      ++out_left[e.b];
      ++in_left[e.a];
    }
  };
  rec(rec, 0);
  return found;
}

Int count_undirected_euler_tours(const UndirectedMultigraph& g,
                                 const TreeDecomposition& td, int width_limit,
                                 int edge_limit) {
  if (g.has_self_loop())
    fail(errc::self_loop_unsupported,
         "Euler tour counting does not support self-loops");
  if (g.edges().empty()) return 1;
  const std::vector<std::uint32_t> deg = g.degrees();
  for (std::uint32_t dv : deg)
    if (dv % 2 != 0) return 0;
  std::vector<bool> active(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) active[v] = deg[v] > 0;
  if (!one_component(g.vertex_count(), endpoint_pairs(g), active)) return 0;

  // Restrict to the touring part of the graph.
  std::vector<std::uint32_t> newid(g.vertex_count());
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (active[v]) newid[v] = next++;
  UndirectedMultigraph sub(next);
  for (const Edge& e : g.edges()) sub.add_edge(newid[e.a], newid[e.b]);
  const TreeDecomposition narrowed = restricted(td, active, newid);

  // Directed tours of any Eulerian orientation O factor as t(O) times
  // prod_v (deg(v)/2 - 1)!, and the product does not depend on O.
  Int tree_sum = 0;
  for (const Orientation& o : enumerate_eulerian_orientations(sub, edge_limit))
    tree_sum +=
        count_arborescences(orient(sub, o), 0, narrowed, width_limit);
  if (tree_sum % 2 != 0)
    fail(errc::invalid_argument,
         "orientation tree counts summed to an odd value; reversal pairing "
         "guarantees evenness");
  Int tours = tree_sum / 2;
  for (std::uint32_t dv : sub.degrees()) tours *= factorial(dv / 2 - 1);
  return tours;
}

Int count_undirected_euler_tours(const UndirectedMultigraph& g,
                                 int width_limit, int edge_limit) {
  return count_undirected_euler_tours(g, heuristic_tree_decomposition(g),
                                      width_limit, edge_limit);
}

}  // namespace twc
