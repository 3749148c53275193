#include "twcount/decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "twcount/errors.hpp"

namespace twc {

namespace {

std::string vtx(std::uint32_t v) { return std::to_string(v); }

}  // namespace

int TreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

int validate_tree_decomposition(
    std::uint32_t vertex_count,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
    const TreeDecomposition& t) {
  const std::size_t b = t.bags.size();
  for (const auto& bag : t.bags)
    for (std::uint32_t v : bag)
      if (v >= vertex_count)
        fail(errc::invalid_argument, "bag vertex " + vtx(v) + " out of range");

  // Tree shape: connected and exactly b-1 edges.
  std::vector<std::vector<std::size_t>> adj(b);
  for (const auto& [x, y] : t.tree_edges) {
    if (x >= b || y >= b)
      fail(errc::invalid_argument, "tree edge endpoint out of range");
    if (x == y) fail(errc::not_a_tree, "self-edge at bag " + std::to_string(x));
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  if (b > 0) {
    if (t.tree_edges.size() != b - 1)
      fail(errc::not_a_tree, std::to_string(b) + " bags need " +
                                 std::to_string(b - 1) + " tree edges, got " +
                                 std::to_string(t.tree_edges.size()));
    std::vector<bool> seen(b, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (std::size_t y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          q.push(y);
        }
    }
    if (reached != b)
      fail(errc::not_a_tree, "bag graph is disconnected (reached " +
                                 std::to_string(reached) + " of " +
                                 std::to_string(b) + " bags)");
  }

  // Vertex coverage and per-vertex subtree connectivity.
  std::vector<std::vector<std::size_t>> bags_of(vertex_count);
  for (std::size_t i = 0; i < b; ++i)
    for (std::uint32_t v : t.bags[i]) bags_of[v].push_back(i);
  for (std::uint32_t v = 0; v < vertex_count; ++v) {
    if (bags_of[v].empty())
      fail(errc::vertex_uncovered, "vertex " + vtx(v) + " is in no bag");
    std::set<std::size_t> mine(bags_of[v].begin(), bags_of[v].end());
    std::set<std::size_t> seen;
    std::queue<std::size_t> q;
    q.push(bags_of[v][0]);
    seen.insert(bags_of[v][0]);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (std::size_t y : adj[x])
        if (mine.count(y) && !seen.count(y)) {
          seen.insert(y);
          q.push(y);
        }
    }
    if (seen.size() != mine.size())
      fail(errc::connectivity_violated,
           "bags containing vertex " + vtx(v) + " do not form a subtree");
  }

  // Edge coverage.
  for (const auto& [u, w] : edges) {
    if (u >= vertex_count || w >= vertex_count)
      fail(errc::invalid_argument, "edge endpoint out of range");
    bool covered = false;
    for (std::size_t i : bags_of[u]) {
      const auto& bag = t.bags[i];
      if (std::find(bag.begin(), bag.end(), w) != bag.end()) {
        covered = true;
        break;
      }
    }
    if (!covered)
      fail(errc::edge_uncovered,
           "edge {" + vtx(u) + "," + vtx(w) + "} shares no bag");
  }

  if (b == 0 && vertex_count > 0)
    fail(errc::vertex_uncovered, "no bags but graph has vertices");
  return t.width();
}

int validate_tree_decomposition(const DirectedMultigraph& g,
                                const TreeDecomposition& t) {
  return validate_tree_decomposition(g.vertex_count(), endpoint_pairs(g), t);
}

int validate_tree_decomposition(const UndirectedMultigraph& g,
                                const TreeDecomposition& t) {
  return validate_tree_decomposition(g.vertex_count(), endpoint_pairs(g), t);
}

TreeDecomposition heuristic_tree_decomposition(
    std::uint32_t vertex_count,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  const std::uint32_t n = vertex_count;
  TreeDecomposition t;
  if (n == 0) return t;

  std::vector<std::set<std::uint32_t>> nb(n);
  for (const auto& [u, w] : edges) {
    if (u >= n || w >= n)
      fail(errc::invalid_argument, "edge endpoint out of range");
    if (u == w) continue;  // self-loops need no co-location beyond coverage
    nb[u].insert(w);
    nb[w].insert(u);
  }

  std::vector<bool> eliminated(n, false);
  std::vector<std::uint32_t> elim_index(n, 0);
  t.bags.resize(n);
  std::vector<std::vector<std::uint32_t>> bag_nb(n);

  for (std::uint32_t step = 0; step < n; ++step) {
    std::uint32_t best = n;
    std::size_t best_fill = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      std::size_t fill = 0;
      for (auto it = nb[v].begin(); it != nb[v].end(); ++it)
        for (auto jt = std::next(it); jt != nb[v].end(); ++jt)
          if (!nb[*it].count(*jt)) ++fill;
      if (best == n || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }

    elim_index[best] = step;
    t.bags[step].push_back(best);
    for (std::uint32_t u : nb[best]) t.bags[step].push_back(u);
    std::sort(t.bags[step].begin(), t.bags[step].end());
    bag_nb[step].assign(nb[best].begin(), nb[best].end());

    for (std::uint32_t u : nb[best])
      for (std::uint32_t w : nb[best])
        if (u != w) nb[u].insert(w);
    for (std::uint32_t u : nb[best]) nb[u].erase(best);
    nb[best].clear();
    eliminated[best] = true;
  }

  // Each bag hangs off the bag of its first-eliminated neighbor, which keeps
  // every vertex's bags contiguous; isolated bags chain to the next step.
  for (std::uint32_t step = 0; step + 1 < n; ++step) {
    std::uint32_t parent = n;
    for (std::uint32_t u : bag_nb[step])
      parent = std::min(parent, elim_index[u]);
    if (parent == n) parent = step + 1;
    t.tree_edges.emplace_back(step, parent);
  }
  return t;
}

TreeDecomposition heuristic_tree_decomposition(const DirectedMultigraph& g) {
  return heuristic_tree_decomposition(g.vertex_count(), endpoint_pairs(g));
}

TreeDecomposition heuristic_tree_decomposition(const UndirectedMultigraph& g) {
  return heuristic_tree_decomposition(g.vertex_count(), endpoint_pairs(g));
}

int NiceTreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& node : nodes) largest = std::max(largest, node.bag.size());
  return static_cast<int>(largest) - 1;
}

std::size_t NiceTreeDecomposition::count(NiceNodeKind kind) const {
  std::size_t c = 0;
  for (const auto& node : nodes)
    if (node.kind == kind) ++c;
  return c;
}

namespace {

class NiceBuilder {
 public:
  NiceBuilder(std::uint32_t vertex_count,
              const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
              const TreeDecomposition& t)
      : edges_(edges), t_(t) {
    validate_tree_decomposition(vertex_count, edges, t);
  }

  NiceTreeDecomposition build() {
    NiceTreeDecomposition out;
    const std::size_t b = t_.bags.size();
    if (b == 0) {
      out.nodes.push_back(NiceNode{});
      out.root = 0;
      return out;
    }
    nodes_ = &out.nodes;

    // Attach each edge to the lowest-indexed bag holding both endpoints.
    std::vector<std::vector<std::size_t>> attached(b);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      for (std::size_t i = 0; i < b; ++i) {
        if (contains(i, edges_[e].first) && contains(i, edges_[e].second)) {
          attached[i].push_back(e);
          break;
        }
      }
    }

    std::vector<std::vector<std::size_t>> adj(b);
    for (const auto& [x, y] : t_.tree_edges) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    // Root at bag 0; process children before parents.
    std::vector<std::size_t> order;
    std::vector<std::size_t> parent(b, kNoChild);
    std::vector<bool> seen(b, false);
    order.push_back(0);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t y : adj[order[i]])
        if (!seen[y]) {
          seen[y] = true;
          parent[y] = order[i];
          order.push_back(y);
        }

    std::vector<std::size_t> top(b, kNoChild);
    for (std::size_t i = order.size(); i-- > 0;) {
      const std::size_t bag = order[i];
      std::vector<std::uint32_t> target = sorted_bag(bag);
      std::vector<std::size_t> kids;
      for (std::size_t y : adj[bag])
        if (y != parent[bag]) kids.push_back(y);

      std::size_t cur;
      if (kids.empty()) {
        cur = emit_leaf_chain(target);
      } else {
        cur = adapt(top[kids[0]], target);
        for (std::size_t k = 1; k < kids.size(); ++k) {
          std::size_t rhs = adapt(top[kids[k]], target);
          NiceNode join;
          join.kind = NiceNodeKind::kJoin;
          join.child = cur;
          join.child2 = rhs;
          join.bag = target;
          cur = push(std::move(join));
        }
      }
      for (std::size_t e : attached[bag]) {
        NiceNode ie;
        ie.kind = NiceNodeKind::kIntroduceEdge;
        ie.tail = edges_[e].first;
        ie.head = edges_[e].second;
        ie.edge_index = e;
        ie.child = cur;
        ie.bag = target;
        cur = push(std::move(ie));
      }
      top[bag] = cur;
    }

    // Forget everything in the root bag so the root bag is empty.
    std::size_t cur = top[0];
    std::vector<std::uint32_t> remaining = sorted_bag(0);
    while (!remaining.empty()) {
      std::uint32_t v = remaining.front();
      remaining.erase(remaining.begin());
      NiceNode f;
      f.kind = NiceNodeKind::kForget;
      f.vertex = v;
      f.child = cur;
      f.bag = remaining;
      cur = push(std::move(f));
    }
    out.root = cur;
    return out;
  }

 private:
  bool contains(std::size_t bag, std::uint32_t v) const {
    const auto& s = t_.bags[bag];
    return std::find(s.begin(), s.end(), v) != s.end();
  }

  std::vector<std::uint32_t> sorted_bag(std::size_t bag) const {
    std::vector<std::uint32_t> s = t_.bags[bag];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  std::size_t push(NiceNode node) {
    nodes_->push_back(std::move(node));
    return nodes_->size() - 1;
  }

  // Leaf followed by one introduce per bag vertex, ascending.
  std::size_t emit_leaf_chain(const std::vector<std::uint32_t>& target) {
    std::size_t cur = push(NiceNode{});
    std::vector<std::uint32_t> have;
    for (std::uint32_t v : target) {
      have.push_back(v);
      NiceNode iv;
      iv.kind = NiceNodeKind::kIntroduceVertex;
      iv.vertex = v;
      iv.child = cur;
      iv.bag = have;
      cur = push(std::move(iv));
    }
    return cur;
  }

  // Forget what the child subtree's top bag has beyond `target`, then
  // introduce what is missing, one vertex per node.
  std::size_t adapt(std::size_t child, const std::vector<std::uint32_t>& target) {
    std::size_t cur = child;
    std::vector<std::uint32_t> have = (*nodes_)[child].bag;
    for (std::uint32_t v : std::vector<std::uint32_t>(have)) {
      if (std::binary_search(target.begin(), target.end(), v)) continue;
      have.erase(std::find(have.begin(), have.end(), v));
      NiceNode f;
      f.kind = NiceNodeKind::kForget;
      f.vertex = v;
      f.child = cur;
      f.bag = have;
      cur = push(std::move(f));
    }
    for (std::uint32_t v : target) {
      if (std::binary_search(have.begin(), have.end(), v)) continue;
      have.insert(std::upper_bound(have.begin(), have.end(), v), v);
      NiceNode iv;
      iv.kind = NiceNodeKind::kIntroduceVertex;
      iv.vertex = v;
      iv.child = cur;
      iv.bag = have;
      cur = push(std::move(iv));
    }
    return cur;
  }

  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges_;
  const TreeDecomposition& t_;
  std::vector<NiceNode>* nodes_ = nullptr;
};

}  // namespace

NiceTreeDecomposition make_nice(
    std::uint32_t vertex_count,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
    const TreeDecomposition& t) {
  try {
    return NiceBuilder(vertex_count, edges, t).build();
  } catch (const Error& e) {
    if (e.code() == errc::invalid_argument) throw;
    fail(errc::invalid_decomposition, e.what());
  }
}

NiceTreeDecomposition make_nice(const DirectedMultigraph& g,
                                const TreeDecomposition& t) {
  return make_nice(g.vertex_count(), endpoint_pairs(g), t);
}

NiceTreeDecomposition make_nice(const UndirectedMultigraph& g,
                                const TreeDecomposition& t) {
  return make_nice(g.vertex_count(), endpoint_pairs(g), t);
}

}  // namespace twc
