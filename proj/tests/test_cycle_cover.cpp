#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "twcount/cycle_cover.hpp"
#include "twcount/decomposition.hpp"
#include "twcount/errors.hpp"
#include "twcount/graph_ops.hpp"
#include "twcount/oracle.hpp"

using namespace twc;
using namespace twtest;

namespace {

void check_error(errc expected, const std::function<void()>& body) {
  try {
    body();
    FAIL_CHECK("expected an error but none was thrown");
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

DirectedMultigraph relabeled(const DirectedMultigraph& d,
                             const std::vector<std::uint32_t>& perm) {
  DirectedMultigraph out(d.vertex_count());
  for (const Arc& a : d.arcs()) out.add_arc(perm[a.tail], perm[a.head]);
  return out;
}

}  // namespace

TEST_CASE("cover histogram of the complete digraph with loops") {
  DirectedMultigraph d(3);
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) d.add_arc(a, b);
  const CycleCoverHistogram h = cycle_cover_histogram(d);
  CHECK(h.vertex_count == 3);
  CHECK(h.counts == std::map<int, Int>{{1, Int(2)}, {2, Int(3)}, {3, Int(1)}});
}

TEST_CASE("cover histogram corner cases") {
  CHECK(cycle_cover_histogram(directed_cycle(4)).counts ==
        std::map<int, Int>{{1, Int(1)}});

  // A vertex with no arcs cannot be covered.
  CHECK(cycle_cover_histogram(DirectedMultigraph(2)).counts.empty());
  DirectedMultigraph lonely(3);
  lonely.add_arc(0, 1);
  lonely.add_arc(1, 0);
  CHECK(cycle_cover_histogram(lonely).counts.empty());

  // The empty digraph has exactly the empty cover.
  const CycleCoverHistogram empty = cycle_cover_histogram(DirectedMultigraph(0));
  CHECK(empty.vertex_count == 0);
  CHECK(empty.counts == std::map<int, Int>{{0, Int(1)}});

  DirectedMultigraph loops(2);
  loops.add_arc(0, 0);
  loops.add_arc(1, 1);
  CHECK(cycle_cover_histogram(loops).counts == std::map<int, Int>{{2, Int(1)}});
}

TEST_CASE("parallel arcs multiply cover counts") {
  DirectedMultigraph d(2);
  d.add_arc(0, 1);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  CHECK(cycle_cover_histogram(d).counts == std::map<int, Int>{{1, Int(2)}});
  d.add_arc(1, 0);
  CHECK(cycle_cover_histogram(d).counts == std::map<int, Int>{{1, Int(4)}});
}

TEST_CASE("cover histograms match brute-force enumeration") {
  std::mt19937 rng(20240930);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t n = 1 + trial % 7;
    DirectedMultigraph d = random_digraph(rng, n, n + trial % 5);
    if (trial % 4 == 0) d.add_arc(trial % n, trial % n);  // loop
    std::map<int, Int> expected = oracle::enumerate_cycle_covers(d);
    CHECK(cycle_cover_histogram(d).counts == expected);
  }
}

TEST_CASE("cover histogram of the full digraph counts permutations by "
          "cycle count") {
  for (std::uint32_t n = 2; n <= 7; ++n) {
    DirectedMultigraph d(n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) d.add_arc(a, b);
    const std::vector<Int> row = stirling_first_row(n);
    const CycleCoverHistogram h = cycle_cover_histogram(d);
    CHECK(h.counts.size() == n);
    for (std::uint32_t k = 1; k <= n; ++k) CHECK(h.counts.at(k) == row[k]);
    CHECK(h.counts.count(0) == 0);
  }
}

TEST_CASE("cover histogram is invariant under relabeling and choice of "
          "decomposition") {
  std::mt19937 rng(20240931);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 2 + trial % 6;
    const DirectedMultigraph d = random_digraph(rng, n, n + 2);
    const std::map<int, Int> base = cycle_cover_histogram(d).counts;

    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(cycle_cover_histogram(relabeled(d, perm)).counts == base);

    // A structurally different decomposition of the same digraph: extra
    // leaf bags force join nodes into the nice form.
    const TreeDecomposition alt = edge_leaf_decomposition(
        endpoint_pairs(d), heuristic_tree_decomposition(d));
    CHECK(cycle_cover_histogram(d, make_nice(d, alt)).counts == base);
  }
}

TEST_CASE("weighted cover sums carry entry products") {
  // Two self-loops with weights 2 and 3: one cover of two cycles, weight 6.
  SquareIntMatrix diag(2);
  diag.at(0, 0) = 2;
  diag.at(1, 1) = 3;
  const DirectedMultigraph support = support_digraph(diag);
  const auto sums =
      weighted_cover_sums(diag, make_nice(support, heuristic_tree_decomposition(
                                                       support)));
  CHECK(sums == std::map<int, Int>{{2, Int(6)}});

  // All-ones weights reduce to plain counting.
  const SquareIntMatrix ones = ones_matrix(3);
  const DirectedMultigraph os = support_digraph(ones);
  const auto counted = weighted_cover_sums(
      ones, make_nice(os, heuristic_tree_decomposition(os)));
  CHECK(counted == std::map<int, Int>{{1, Int(2)}, {2, Int(3)}, {3, Int(1)}});
}

TEST_CASE("determinants of fixed matrices") {
  CHECK(determinant(identity_matrix(4)) == 1);
  CHECK(determinant(SquareIntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(SquareIntMatrix{{2, 1, 0}, {-1, 3, 4}, {5, 0, -2}}) == 6);
  CHECK(determinant(SquareIntMatrix(0)) == 1);
  CHECK(determinant(SquareIntMatrix(3)) == 0);
  CHECK(determinant(ones_matrix(3)) == 0);
}

TEST_CASE("determinant matches both oracles on random matrices") {
  std::mt19937 rng(20240932);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const SquareIntMatrix m = trial % 2 == 0
                                  ? random_matrix(rng, n, -4, 4)
                                  : random_banded_matrix(rng, n, 2, -4, 4);
    const Int d = determinant(m);
    CHECK(d == oracle::det_fraction_free(m));
    CHECK(d == oracle::det_permutation_expansion(m));
  }
}

TEST_CASE("determinant handles wide-entry matrices exactly") {
  SquareIntMatrix m(2);
  m.at(0, 0) = from_decimal("100000000000000000000");
  m.at(0, 1) = 1;
  m.at(1, 0) = -1;
  m.at(1, 1) = from_decimal("100000000000000000000");
  CHECK(determinant(m) ==
        from_decimal("10000000000000000000000000000000000000001"));
}

TEST_CASE("characteristic polynomial support includes the whole diagonal") {
  const SquareIntMatrix m{{0, 1}, {0, 0}};
  const DirectedMultigraph s = charpoly_support(m);
  CHECK(s.vertex_count() == 2);
  CHECK(s.arcs().size() == 3);
  std::size_t loops = 0;
  for (const Arc& a : s.arcs())
    if (a.tail == a.head) ++loops;
  CHECK(loops == 2);
}

TEST_CASE("characteristic polynomials of fixed matrices") {
  // Triangle adjacency: x^3 - 3x - 2.
  CHECK(characteristic_polynomial(triangle_adjacency()) ==
        IntPolynomial(std::vector<Int>{-2, -3, 0, 1}));

  // Directed 3-cycle adjacency: x^3 - 1.
  CHECK(characteristic_polynomial(adjacency_matrix(directed_cycle(3))) ==
        IntPolynomial(std::vector<Int>{-1, 0, 0, 1}));

  // Zero matrix: x^n. Identity: (x-1)^n.
  CHECK(characteristic_polynomial(SquareIntMatrix(2)) ==
        IntPolynomial::monomial(1, 2));
  CHECK(characteristic_polynomial(identity_matrix(3)) ==
        IntPolynomial(std::vector<Int>{-1, 3, -3, 1}));

  // Empty matrix: the constant 1.
  CHECK(characteristic_polynomial(SquareIntMatrix(0)) == IntPolynomial(1));
}

TEST_CASE("characteristic polynomial matches interpolation on randoms") {
  std::mt19937 rng(20240933);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const SquareIntMatrix m = random_matrix(rng, n, -3, 3);
    const IntPolynomial chi = characteristic_polynomial(m);
    CHECK(chi == oracle::charpoly_interpolation(m));
    CHECK(chi.degree() == static_cast<int>(n));
    CHECK(chi.coeff(n) == 1);

    // The constant coefficient carries the determinant with parity sign.
    const Int det = determinant(m);
    CHECK(chi.coeff(0) == (n % 2 == 0 ? det : Int(-det)));

    // Evaluating at a scalar equals the shifted determinant.
    SquareIntMatrix shifted(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        shifted.at(i, j) = -m.at(i, j);
        if (i == j) shifted.at(i, j) += 5;
      }
    CHECK(chi.evaluate(Int(5)) == oracle::det_fraction_free(shifted));
  }
}

TEST_CASE("characteristic polynomial accepts alternative decompositions") {
  const SquareIntMatrix m = triangle_adjacency();
  const DirectedMultigraph support = charpoly_support(m);
  const TreeDecomposition alt = edge_leaf_decomposition(
      endpoint_pairs(support), heuristic_tree_decomposition(support));
  CHECK(characteristic_polynomial(m, make_nice(support, alt)) ==
        IntPolynomial(std::vector<Int>{-2, -3, 0, 1}));
}

TEST_CASE("width limit is enforced") {
  // The all-ones 12x12 support is a complete digraph: width 11.
  check_error(errc::width_limit_exceeded,
              [] { determinant(ones_matrix(12)); });
  check_error(errc::width_limit_exceeded, [] {
    cycle_cover_histogram(directed_cycle(5), /*width_limit=*/0);
  });
}

TEST_CASE("width limit argument is validated") {
  check_error(errc::invalid_argument,
              [] { determinant(identity_matrix(2), /*width_limit=*/16); });
  check_error(errc::invalid_argument,
              [] { determinant(identity_matrix(2), /*width_limit=*/-1); });
  // The hard maximum itself is allowed.
  CHECK(determinant(identity_matrix(2), kMaxWidthLimit) == 1);
}

TEST_CASE("mismatched decompositions are rejected") {
  const DirectedMultigraph d = directed_cycle(4);
  DirectedMultigraph other = directed_cycle(4);
  other.add_arc(0, 2);
  const NiceTreeDecomposition nt =
      make_nice(other, heuristic_tree_decomposition(other));
  check_error(errc::invalid_decomposition,
              [&] { cycle_cover_histogram(d, nt); });

  // A plain-support decomposition misses the diagonal loops the
  // characteristic polynomial walk needs.
  const SquareIntMatrix m{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  const DirectedMultigraph plain = support_digraph(m);
  const NiceTreeDecomposition plain_nice =
      make_nice(plain, heuristic_tree_decomposition(plain));
  check_error(errc::invalid_decomposition,
              [&] { characteristic_polynomial(m, plain_nice); });
}

TEST_CASE("histogram signed sums reproduce determinants") {
  std::mt19937 rng(20240934);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 1 + trial % 6;
    const DirectedMultigraph d = random_digraph(rng, n, n + 2);
    const SquareIntMatrix m = adjacency_matrix(d);
    Int signed_sum = 0;
    for (const auto& [k, c] : cycle_cover_histogram(d).counts)
      signed_sum += (n + k) % 2 == 0 ? c : -c;
    CHECK(signed_sum == oracle::det_fraction_free(m));
  }
}
