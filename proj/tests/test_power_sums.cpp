#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "twcount/errors.hpp"
#include "twcount/graph_ops.hpp"
#include "twcount/oracle.hpp"
#include "twcount/power_sums.hpp"

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

IntPolynomial monic_from_roots(const std::vector<long>& roots) {
  IntPolynomial p(1);
  for (long r : roots)
    p *= IntPolynomial(std::vector<Int>{Int(-r), Int(1)});
  return p;
}

}  // namespace

TEST_CASE("power sums of the triangle spectrum") {
  // x^3 - 3x - 2 has roots 2, -1, -1.
  const IntPolynomial chi(std::vector<Int>{-2, -3, 0, 1});
  const std::vector<Int> p = power_sums_from_charpoly(chi, 4);
  CHECK(p == std::vector<Int>{3, 0, 6, 6, 18});
}

TEST_CASE("power sums cycle with roots of unity") {
  // x^3 - 1: sums vanish except at multiples of 3, where they equal 3.
  const IntPolynomial chi(std::vector<Int>{-1, 0, 0, 1});
  const std::vector<Int> p = power_sums_from_charpoly(chi, 9);
  for (std::size_t k = 0; k <= 9; ++k)
    CHECK(p[k] == (k % 3 == 0 ? 3 : 0));
}

TEST_CASE("power sums past the degree stay correct") {
  // x^2 - 1 has roots 1 and -1.
  const IntPolynomial chi(std::vector<Int>{-1, 0, 1});
  const std::vector<Int> p = power_sums_from_charpoly(chi, 8);
  for (std::size_t k = 0; k <= 8; ++k)
    CHECK(p[k] == (k % 2 == 0 ? 2 : 0));

  // (x - 1)^4: every power sum is the root count.
  const std::vector<Int> q =
      power_sums_from_charpoly(monic_from_roots({1, 1, 1, 1}), 7);
  for (const Int& v : q) CHECK(v == 4);
}

TEST_CASE("power sums of the empty spectrum") {
  const std::vector<Int> p = power_sums_from_charpoly(IntPolynomial(1), 5);
  CHECK(p == std::vector<Int>(6, Int(0)));
}

TEST_CASE("power sums only report the requested range") {
  const std::vector<Int> p =
      power_sums_from_charpoly(monic_from_roots({3}), 0);
  CHECK(p == std::vector<Int>{1});
}

TEST_CASE("power sums match explicit root powers") {
  std::mt19937 rng(20241001);
  std::uniform_int_distribution<long> root(-4, 4);
  std::uniform_int_distribution<std::size_t> count(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> roots(count(rng));
    for (long& r : roots) r = root(rng);
    const std::vector<Int> p =
        power_sums_from_charpoly(monic_from_roots(roots), 10);
    for (std::size_t k = 0; k <= 10; ++k) {
      Int direct = 0;
      for (long r : roots) {
        Int term = 1;
        for (std::size_t i = 0; i < k; ++i) term *= r;
        direct += term;
      }
      CHECK(p[k] == direct);
    }
  }
}

TEST_CASE("non-monic inputs are rejected") {
  check_error(errc::not_monic, [] {
    power_sums_from_charpoly(IntPolynomial(std::vector<Int>{1, 0, 2}), 3);
  });
  check_error(errc::not_monic,
              [] { power_sums_from_charpoly(IntPolynomial(), 3); });
  check_error(errc::not_monic,
              [] { power_sums_from_charpoly(IntPolynomial(-1), 3); });
}

TEST_CASE("power traces of fixed matrices") {
  CHECK(trace_power(triangle_adjacency(), 1) == 0);
  CHECK(trace_power(triangle_adjacency(), 2) == 6);
  CHECK(trace_power(triangle_adjacency(), 3) == 6);
  CHECK(trace_power(triangle_adjacency(), 4) == 18);

  const SquareIntMatrix cyc = adjacency_matrix(directed_cycle(5));
  CHECK(trace_power(cyc, 5) == 5);
  CHECK(trace_power(cyc, 3) == 0);
  CHECK(trace_power(cyc, 10) == 5);

  CHECK(trace_power(identity_matrix(4), 9) == 4);
}

TEST_CASE("power traces match repeated multiplication") {
  std::mt19937 rng(20241002);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const SquareIntMatrix m = random_matrix(rng, n, -3, 3);
    const std::size_t k = 1 + trial % 8;
    CHECK(trace_power(m, k) == oracle::matrix_power_trace(m, k));
  }
}

TEST_CASE("power trace of the first power is the trace") {
  std::mt19937 rng(20241003);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const SquareIntMatrix m = random_matrix(rng, n, -9, 9);
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
    CHECK(trace_power(m, 1) == tr);
  }
}

TEST_CASE("power trace rejects the zeroth power") {
  check_error(errc::invalid_argument,
              [] { trace_power(identity_matrix(2), 0); });
}

TEST_CASE("power trace accepts an explicit decomposition") {
  const SquareIntMatrix m = triangle_adjacency();
  const DirectedMultigraph support = charpoly_support(m);
  const NiceTreeDecomposition nt =
      make_nice(support, heuristic_tree_decomposition(support));
  CHECK(trace_power(m, nt, 4) == 18);
}
