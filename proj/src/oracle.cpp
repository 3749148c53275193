#include "twcount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "twcount/errors.hpp"

namespace twc::oracle {

namespace {

int permutation_cycle_count(const std::vector<std::uint32_t>& p) {
  int cycles = 0;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

int permutation_sign(const std::vector<std::uint32_t>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Int det_permutation_expansion(const SquareIntMatrix& m) {
  const std::size_t n = m.size();
  if (n > kMaxPermutationDimension)
    fail(errc::dimension_too_large,
         "permutation expansion handles at most " +
             std::to_string(kMaxPermutationDimension) + " rows, got " +
             std::to_string(n));
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Int det = 0;
  do {
    Int term = permutation_sign(p);
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m.at(i, p[i]);
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

Int det_fraction_free(const SquareIntMatrix& m) {
  const std::size_t n = m.size();
  SquareIntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        // Exact by the Sylvester identity; divexact keeps it cheap.
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  if (n == 0) return 1;
  return sign * a.at(n - 1, n - 1);
}

std::map<int, Int> enumerate_cycle_covers(const DirectedMultigraph& d) {
  const std::uint32_t n = d.vertex_count();
  if (n > kMaxCoverDimension)
    fail(errc::dimension_too_large,
         "cycle cover enumeration handles at most " +
             std::to_string(kMaxCoverDimension) + " vertices, got " +
             std::to_string(n));
  std::vector<std::vector<Int>> mult(n, std::vector<Int>(n, 0));
  for (const Arc& a : d.arcs()) mult[a.tail][a.head] += 1;

  std::map<int, Int> hist;
  if (n == 0) {
    hist[0] = 1;
    return hist;
  }
  std::vector<std::uint32_t> successor(n, 0);
  std::vector<bool> used(n, false);
  // Assign a successor to each vertex in order; a full assignment is a
  // permutation supported by the arcs.
  auto rec = [&](auto&& self, std::uint32_t v, const Int& weight) -> void {
    if (v == n) {
      hist[permutation_cycle_count(successor)] += weight;
      return;
    }
    for (std::uint32_t w = 0; w < n; ++w) {
      if (used[w] || mult[v][w] == 0) continue;
      used[w] = true;
      successor[v] = w;
      self(self, v + 1, Int(weight * mult[v][w]));
      used[w] = false;
    }
  };
  rec(rec, 0, Int(1));
  return hist;
}

Int enumerate_arborescences(const DirectedMultigraph& d, std::uint32_t root) {
  const std::uint32_t n = d.vertex_count();
  if (root >= n) fail(errc::invalid_argument, "root out of range");
  if (n <= 1) return 1;
  std::vector<std::vector<std::uint32_t>> choices(n);
  for (const Arc& a : d.arcs())
    if (a.tail != root && a.tail != a.head) choices[a.tail].push_back(a.head);

  unsigned long long space = 1;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (v == root) continue;
    if (choices[v].empty()) return 0;
    space *= choices[v].size();
    if (space > kMaxArborescenceChoices)
      fail(errc::dimension_too_large,
           "arborescence enumeration search space exceeds " +
               std::to_string(kMaxArborescenceChoices));
  }

  constexpr std::uint32_t kUnset = ~0u;
  std::vector<std::uint32_t> parent(n, kUnset);
  Int count = 0;
  auto rec = [&](auto&& self, std::uint32_t v) -> void {
    if (v == n) {
      count += 1;
      return;
    }
    if (v == root) {
      self(self, v + 1);
      return;
    }
    for (std::uint32_t w : choices[v]) {
      // Following assigned parents from w must not loop back to v.
      std::uint32_t x = w;
      while (x != root && x != v && parent[x] != kUnset) x = parent[x];
      if (x == v) continue;
      parent[v] = w;
      self(self, v + 1);
      parent[v] = kUnset;
    }
  };
  rec(rec, 0);
  return count;
}

Int enumerate_euler_tours(const DirectedMultigraph& d) {
  const auto& arcs = d.arcs();
  if (arcs.size() > kMaxTourEdges)
    fail(errc::dimension_too_large,
         "tour enumeration handles at most " + std::to_string(kMaxTourEdges) +
             " arcs, got " + std::to_string(arcs.size()));
  if (arcs.empty()) return 1;

  std::vector<std::size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (arcs[x].tail != arcs[y].tail) return arcs[x].tail < arcs[y].tail;
    if (arcs[x].head != arcs[y].head) return arcs[x].head < arcs[y].head;
    return x < y;
  });
  const Arc first = arcs[order[0]];

  std::vector<bool> used(arcs.size(), false);
  used[order[0]] = true;
  Int count = 0;
  auto rec = [&](auto&& self, std::uint32_t at, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (at == first.tail) count += 1;
      return;
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (used[i] || arcs[i].tail != at) continue;
      used[i] = true;
      self(self, arcs[i].head, remaining - 1);
      used[i] = false;
    }
  };
  rec(rec, first.head, arcs.size() - 1);
  return count;
}

Int enumerate_euler_tours(const UndirectedMultigraph& g) {
  const auto& edges = g.edges();
  if (edges.size() > kMaxTourEdges)
    fail(errc::dimension_too_large,
         "tour enumeration handles at most " + std::to_string(kMaxTourEdges) +
             " edges, got " + std::to_string(edges.size()));
  if (g.has_self_loop())
    fail(errc::self_loop_unsupported, "tour enumeration rejects self-loops");
  if (edges.empty()) return 1;

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  auto lo = [&](std::size_t i) { return std::min(edges[i].a, edges[i].b); };
  auto hi = [&](std::size_t i) { return std::max(edges[i].a, edges[i].b); };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (lo(x) != lo(y)) return lo(x) < lo(y);
    if (hi(x) != hi(y)) return hi(x) < hi(y);
    return x < y;
  });
  // The least edge is traversed from its smaller endpoint, which fixes one
  // representative per rotation-and-reflection class.
  const std::size_t e0 = order[0];
  const std::uint32_t start = lo(e0);

  std::vector<bool> used(edges.size(), false);
  used[e0] = true;
  Int count = 0;
  auto rec = [&](auto&& self, std::uint32_t at, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (at == start) count += 1;
      return;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (used[i]) continue;
      std::uint32_t other;
      if (edges[i].a == at)
        other = edges[i].b;
      else if (edges[i].b == at)
        other = edges[i].a;
      else
        continue;
      used[i] = true;
      self(self, other, remaining - 1);
      used[i] = false;
    }
  };
  rec(rec, hi(e0), edges.size() - 1);
  return count;
}

IntPolynomial charpoly_interpolation(const SquareIntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial(1);

  std::vector<Int> values(n + 1);
  for (std::size_t x0 = 0; x0 <= n; ++x0) {
    SquareIntMatrix shifted(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        shifted.at(i, j) = -m.at(i, j);
        if (i == j) shifted.at(i, j) += static_cast<long>(x0);
      }
    values[x0] = det_fraction_free(shifted);
  }

  // Lagrange interpolation over the rationals at nodes 0..n.
  std::vector<mpq_class> acc(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis.resize(basis.size() + 1, 0);
      for (std::size_t k = basis.size() - 1; k > 0; --k)
        basis[k] = basis[k - 1] - basis[k] * static_cast<long>(j);
      basis[0] *= -static_cast<long>(j);
      denom *= static_cast<long>(i) - static_cast<long>(j);
    }
    mpq_class scale = mpq_class(values[i]) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
  }

  std::vector<Int> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    mpq_class c = acc[k];
    c.canonicalize();
    if (c.get_den() != 1)
      fail(errc::invalid_argument, "interpolation produced a non-integer");
    coeffs[k] = c.get_num();
  }
  return IntPolynomial(std::move(coeffs));
}

Int matrix_power_trace(const SquareIntMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k == 0) fail(errc::invalid_argument, "power index must be >= 1");
  SquareIntMatrix p = m;
  for (std::size_t step = 1; step < k; ++step) {
    SquareIntMatrix q(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (std::size_t l = 0; l < n; ++l) s += p.at(i, l) * m.at(l, j);
        q.at(i, j) = s;
      }
    p = q;
  }
  Int trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += p.at(i, i);
  return trace;
}

}  // namespace twc::oracle
