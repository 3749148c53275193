// Counts cycle covers by dynamic programming over a nice tree decomposition.
// A state records, for every bag vertex, how much of its final degree
// (one arc in, one arc out) the arcs chosen so far already provide, plus how
// the half-saturated vertices pair up into open paths. Completed cycles are
// not part of the state; values are vectors indexed by cycles closed so far.
#include "twcount/cycle_cover.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <string>
#include <unordered_map>
#include <vector>

#include "twcount/errors.hpp"
#include "twcount/graph_ops.hpp"

namespace twc {

namespace {

constexpr std::size_t kMaxSlots = kMaxWidthLimit + 1;

// Per-slot role. Start/end slots carry the slot index of the other endpoint
// of their open path in the upper bits.
enum : std::uint8_t {
  kUntouched = 0,  // no incident arc chosen
  kSaturated = 1,  // in and out both used (interior or on a closed cycle)
  kPathStart = 2,  // out used, in free; partner = slot of the path's end
  kPathEnd = 3,    // in used, out free; partner = slot of the path's start
};

struct State {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxSlots> s{};

  static std::uint8_t pack(std::uint8_t role, std::uint8_t partner) {
    return static_cast<std::uint8_t>(role | (partner << 2));
  }
  std::uint8_t role(std::size_t i) const { return s[i] & 3; }
  std::uint8_t partner(std::size_t i) const { return s[i] >> 2; }
  void set(std::size_t i, std::uint8_t role, std::uint8_t partner = 0) {
    s[i] = pack(role, partner);
  }

  bool in_used(std::size_t i) const {
    return role(i) == kSaturated || role(i) == kPathEnd;
  }
  bool out_used(std::size_t i) const {
    return role(i) == kSaturated || role(i) == kPathStart;
  }

  // Inserts a fresh untouched slot at position p.
  State inserted(std::size_t p) const {
    State r;
    r.n = n + 1;
    for (std::size_t i = 0; i < p; ++i) r.s[i] = s[i];
    r.s[p] = pack(kUntouched, 0);
    for (std::size_t i = p; i < n; ++i) r.s[i + 1] = s[i];
    for (std::size_t i = 0; i < r.n; ++i) {
      std::uint8_t role = r.role(i);
      if ((role == kPathStart || role == kPathEnd) && r.partner(i) >= p)
        r.set(i, role, r.partner(i) + 1);
    }
    return r;
  }

  // Removes slot p; the slot must not be a path endpoint.
  State erased(std::size_t p) const {
    State r;
    r.n = n - 1;
    for (std::size_t i = 0; i < p; ++i) r.s[i] = s[i];
    for (std::size_t i = p + 1; i < n; ++i) r.s[i - 1] = s[i];
    for (std::size_t i = 0; i < r.n; ++i) {
      std::uint8_t role = r.role(i);
      if ((role == kPathStart || role == kPathEnd) && r.partner(i) > p)
        r.set(i, role, r.partner(i) - 1);
    }
    return r;
  }

  bool operator==(const State& o) const {
    return n == o.n && std::memcmp(s.data(), o.s.data(), n) == 0;
  }
};

struct StateHash {
  std::size_t operator()(const State& st) const {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < st.n; ++i) {
      h ^= st.s[i];
      h *= 1099511628211ull;
    }
    return h ^ st.n;
  }
};

// Value per state: entry k is the weight of partial covers with k closed
// cycles so far.
template <class W>
using Hist = std::vector<W>;

template <class W>
using StateMap = std::unordered_map<State, Hist<W>, StateHash>;

template <class W>
void add_into(Hist<W>& a, const Hist<W>& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

template <class W>
Hist<W> scaled_shifted(const Hist<W>& a, const W& w, std::size_t shift) {
  Hist<W> r(a.size() + shift);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + shift] = a[i] * w;
  return r;
}

template <class W>
Hist<W> convolved(const Hist<W>& a, const Hist<W>& b, std::size_t shift) {
  if (a.empty() || b.empty()) return {};
  Hist<W> r(a.size() + b.size() - 1 + shift);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j + shift] += a[i] * b[j];
  return r;
}

std::size_t slot_of(const std::vector<std::uint32_t>& bag, std::uint32_t v) {
  return static_cast<std::size_t>(
      std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// One chosen arc a->b. The arc may start a path, extend one, merge two, or
// close one into a cycle; anything else leaves the state unusable.
template <class W>
void apply_arc(StateMap<W>& out, const State& st, const Hist<W>& h,
               std::size_t a, std::size_t b, const W& w) {
  if (st.out_used(a) || st.in_used(b)) return;
  State r = st;
  if (a == b) {
    // Self-loop on an untouched vertex: a one-vertex cycle.
    r.set(a, kSaturated);
    add_into(out[r], scaled_shifted(h, w, 1));
    return;
  }
  const std::uint8_t ra = st.role(a);
  const std::uint8_t rb = st.role(b);
  if (ra == kUntouched && rb == kUntouched) {
    r.set(a, kPathStart, static_cast<std::uint8_t>(b));
    r.set(b, kPathEnd, static_cast<std::uint8_t>(a));
  } else if (ra == kUntouched) {  // rb == kPathStart: prepend to b's path
    const std::uint8_t z = st.partner(b);
    r.set(b, kSaturated);
    r.set(a, kPathStart, z);
    r.set(z, kPathEnd, static_cast<std::uint8_t>(a));
  } else if (rb == kUntouched) {  // ra == kPathEnd: append to a's path
    const std::uint8_t x = st.partner(a);
    r.set(a, kSaturated);
    r.set(b, kPathEnd, x);
    r.set(x, kPathStart, static_cast<std::uint8_t>(b));
  } else {  // ra == kPathEnd, rb == kPathStart
    const std::uint8_t x = st.partner(a);  // start of a's path
    const std::uint8_t z = st.partner(b);  // end of b's path
    r.set(a, kSaturated);
    r.set(b, kSaturated);
    if (x == b) {
      // Both endpoints of one path: the arc closes it into a cycle.
      add_into(out[r], scaled_shifted(h, w, 1));
      return;
    }
    r.set(x, kPathStart, z);
    r.set(z, kPathEnd, x);
  }
  add_into(out[r], scaled_shifted(h, w, 0));
}

// Merges two partial covers over the same bag. Degrees add per vertex; open
// paths concatenate where one side's end is the other side's start, and a
// chain biting its own tail closes a cycle.
template <class W>
void join_pair(StateMap<W>& out, const State& s1, const Hist<W>& h1,
               const State& s2, const Hist<W>& h2) {
  const std::size_t n = s1.n;
  for (std::size_t i = 0; i < n; ++i) {
    if (s1.in_used(i) && s2.in_used(i)) return;
    if (s1.out_used(i) && s2.out_used(i)) return;
  }

  State r;
  r.n = static_cast<std::uint8_t>(n);
  std::size_t loops = 0;
  std::array<bool, kMaxSlots> consumed{};  // path starts already walked

  auto walk = [&](std::size_t head, const State* side) -> std::size_t {
    // Follows alternating segments from `head`; returns the final end slot.
    std::size_t cur = head;
    for (;;) {
      consumed[cur] = true;
      std::size_t end = side->partner(cur);
      const State* other = side == &s1 ? &s2 : &s1;
      if (other->role(end) == kPathStart) {
        cur = end;
        side = other;
        continue;
      }
      return end;
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    const bool start1 = s1.role(i) == kPathStart;
    const bool start2 = s2.role(i) == kPathStart;
    if (!start1 && !start2) continue;
    const State* side = start1 ? &s1 : &s2;
    const State* other = start1 ? &s2 : &s1;
    // A chain head is a start that no segment of the other side feeds into.
    if (other->role(i) == kPathEnd) continue;
    std::size_t end = walk(i, side);
    r.set(i, kPathStart, static_cast<std::uint8_t>(end));
    r.set(end, kPathEnd, static_cast<std::uint8_t>(i));
  }
  // Remaining unwalked starts lie on closed chains; each chain is a cycle.
  for (std::size_t i = 0; i < n; ++i) {
    if (consumed[i]) continue;
    if (s1.role(i) != kPathStart) continue;
    ++loops;
    std::size_t cur = i;
    const State* side = &s1;
    while (!consumed[cur]) {
      consumed[cur] = true;
      cur = side->partner(cur);
      side = side == &s1 ? &s2 : &s1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (r.role(i) != kUntouched) continue;  // not set by chain walking
    const bool in = s1.in_used(i) || s2.in_used(i);
    const bool ou = s1.out_used(i) || s2.out_used(i);
    if (in && ou)
      r.set(i, kSaturated);
    else if (!in && !ou)
      r.set(i, kUntouched);
    else
      return;  // half-used but not on any chain: cannot happen
  }
  add_into(out[r], convolved(h1, h2, loops));
}

template <class W>
Hist<W> run_dp(const NiceTreeDecomposition& nt,
               const std::vector<W>& arc_weights) {
  std::vector<StateMap<W>> memo(nt.nodes.size());
  for (std::size_t idx = 0; idx < nt.nodes.size(); ++idx) {
    const NiceNode& node = nt.nodes[idx];
    StateMap<W>& out = memo[idx];
    switch (node.kind) {
      case NiceNodeKind::kLeaf: {
        out[State{}] = Hist<W>{W(1)};
        break;
      }
      case NiceNodeKind::kIntroduceVertex: {
        const std::size_t p = slot_of(node.bag, node.vertex);
        for (auto& [st, h] : memo[node.child])
          out[st.inserted(p)] = std::move(h);
        break;
      }
      case NiceNodeKind::kForget: {
        const std::size_t p =
            slot_of(nt.nodes[node.child].bag, node.vertex);
        for (auto& [st, h] : memo[node.child]) {
          if (st.role(p) != kSaturated) continue;  // must be fully covered
          add_into(out[st.erased(p)], h);
        }
        break;
      }
      case NiceNodeKind::kIntroduceEdge: {
        const std::size_t a = slot_of(node.bag, node.tail);
        const std::size_t b = slot_of(node.bag, node.head);
        const W& w = arc_weights[node.edge_index];
        for (auto& [st, h] : memo[node.child]) {
          apply_arc(out, st, h, a, b, w);  // take the arc
          add_into(out[st], h);            // or skip it
        }
        break;
      }
      case NiceNodeKind::kJoin: {
        for (const auto& [s1, h1] : memo[node.child])
          for (const auto& [s2, h2] : memo[node.child2])
            join_pair(out, s1, h1, s2, h2);
        memo[node.child2].clear();
        break;
      }
    }
    if (node.child != kNoChild) memo[node.child].clear();
  }

  const StateMap<W>& root = memo[nt.root];
  auto it = root.find(State{});
  return it == root.end() ? Hist<W>{} : it->second;
}

// The decomposition must introduce exactly the arcs of the target digraph,
// each once, with matching endpoints inside its bag.
void check_nice_against(const NiceTreeDecomposition& nt,
                        const std::vector<Arc>& arcs, int width_limit) {
  if (width_limit < 0 || width_limit > kMaxWidthLimit)
    fail(errc::invalid_argument, "width limit must be in 0.." +
                                     std::to_string(kMaxWidthLimit));
  if (nt.width() > width_limit)
    fail(errc::width_limit_exceeded,
         "decomposition width " + std::to_string(nt.width()) +
             " exceeds limit " + std::to_string(width_limit));
  if (nt.nodes.empty() || !nt.nodes[nt.root].bag.empty())
    fail(errc::invalid_decomposition, "root bag must be empty");
  std::vector<bool> seen(arcs.size(), false);
  for (const NiceNode& node : nt.nodes) {
    if (node.kind != NiceNodeKind::kIntroduceEdge) continue;
    if (node.edge_index >= arcs.size() || seen[node.edge_index])
      fail(errc::invalid_decomposition,
           "decomposition does not introduce the graph's arcs exactly once");
    const Arc& a = arcs[node.edge_index];
    if (a.tail != node.tail || a.head != node.head ||
        !std::binary_search(node.bag.begin(), node.bag.end(), a.tail) ||
        !std::binary_search(node.bag.begin(), node.bag.end(), a.head))
      fail(errc::invalid_decomposition,
           "introduced arc does not match the graph");
    seen[node.edge_index] = true;
  }
  for (std::size_t e = 0; e < arcs.size(); ++e)
    if (!seen[e])
      fail(errc::invalid_decomposition,
           "arc " + std::to_string(arcs[e].tail) + "->" +
               std::to_string(arcs[e].head) + " is never introduced");
}

}  // namespace

CycleCoverHistogram cycle_cover_histogram(const DirectedMultigraph& d,
                                          const NiceTreeDecomposition& nt,
                                          int width_limit) {
  check_nice_against(nt, d.arcs(), width_limit);
  std::vector<Int> weights(d.arcs().size(), Int(1));
  Hist<Int> sums = run_dp<Int>(nt, weights);
  CycleCoverHistogram out;
  out.vertex_count = d.vertex_count();
  for (std::size_t k = 0; k < sums.size(); ++k)
    if (sums[k] != 0) out.counts[static_cast<int>(k)] = sums[k];
  return out;
}

CycleCoverHistogram cycle_cover_histogram(const DirectedMultigraph& d,
                                          int width_limit) {
  return cycle_cover_histogram(
      d, make_nice(d, heuristic_tree_decomposition(d)), width_limit);
}

std::map<int, Int> weighted_cover_sums(const SquareIntMatrix& m,
                                       const NiceTreeDecomposition& nt,
                                       int width_limit) {
  const DirectedMultigraph d = support_digraph(m);
  check_nice_against(nt, d.arcs(), width_limit);
  std::vector<Int> weights;
  weights.reserve(d.arcs().size());
  for (const Arc& a : d.arcs()) weights.push_back(m.at(a.tail, a.head));
  Hist<Int> sums = run_dp<Int>(nt, weights);
  std::map<int, Int> out;
  for (std::size_t k = 0; k < sums.size(); ++k)
    if (sums[k] != 0) out[static_cast<int>(k)] = sums[k];
  return out;
}

Int determinant(const SquareIntMatrix& m, const NiceTreeDecomposition& nt,
                int width_limit) {
  const std::size_t n = m.size();
  Int det = 0;
  for (const auto& [k, weight] : weighted_cover_sums(m, nt, width_limit)) {
    if ((n + k) % 2 == 0)
      det += weight;
    else
      det -= weight;
  }
  return det;
}

Int determinant(const SquareIntMatrix& m, int width_limit) {
  const DirectedMultigraph d = support_digraph(m);
  return determinant(m, make_nice(d, heuristic_tree_decomposition(d)),
                     width_limit);
}

DirectedMultigraph charpoly_support(const SquareIntMatrix& m) {
  const std::size_t n = m.size();
  DirectedMultigraph d(static_cast<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j || m.at(i, j) != 0)
        d.add_arc(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  return d;
}

IntPolynomial characteristic_polynomial(const SquareIntMatrix& m,
                                        const NiceTreeDecomposition& nt,
                                        int width_limit) {
  const std::size_t n = m.size();
  const DirectedMultigraph d = charpoly_support(m);
  check_nice_against(nt, d.arcs(), width_limit);
  std::vector<IntPolynomial> weights;
  weights.reserve(d.arcs().size());
  for (const Arc& a : d.arcs()) {
    if (a.tail == a.head)
      weights.push_back(IntPolynomial(std::vector<Int>{-m.at(a.tail, a.tail), 1}));
    else
      weights.push_back(IntPolynomial(-m.at(a.tail, a.head)));
  }
  Hist<IntPolynomial> sums = run_dp<IntPolynomial>(nt, weights);
  IntPolynomial chi;
  for (std::size_t k = 0; k < sums.size(); ++k) {
    if ((n + k) % 2 == 0)
      chi += sums[k];
    else
      chi -= sums[k];
  }
  return chi;
}

IntPolynomial characteristic_polynomial(const SquareIntMatrix& m,
                                        int width_limit) {
  const DirectedMultigraph d = charpoly_support(m);
  return characteristic_polynomial(
      m, make_nice(d, heuristic_tree_decomposition(d)), width_limit);
}

}  // namespace twc
