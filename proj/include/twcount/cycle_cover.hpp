#pragma once

#include <map>

#include "twcount/bigint.hpp"
#include "twcount/decomposition.hpp"
#include "twcount/graph.hpp"
#include "twcount/matrix.hpp"
#include "twcount/polynomial.hpp"

namespace twc {

// Bags above this width are rejected with WidthLimitExceeded; the dynamic
// program's state space grows roughly like width! * 4^width.
inline constexpr int kDefaultWidthLimit = 10;
inline constexpr int kMaxWidthLimit = 15;

// Cycle cover counts keyed by number of cycles. Keys with count zero are
// omitted; key 0 appears only for the empty graph (value 1).
struct CycleCoverHistogram {
  std::uint32_t vertex_count = 0;
  std::map<int, Int> counts;

  bool operator==(const CycleCoverHistogram&) const = default;
};

// Counts the cycle covers of d grouped by cycle count, walking nt bottom-up.
// Parallel arcs count as distinct choices. nt must introduce exactly the
// arcs of d (InvalidDecomposition otherwise).
CycleCoverHistogram cycle_cover_histogram(const DirectedMultigraph& d,
                                          const NiceTreeDecomposition& nt,
                                          int width_limit = kDefaultWidthLimit);
CycleCoverHistogram cycle_cover_histogram(const DirectedMultigraph& d,
                                          int width_limit = kDefaultWidthLimit);

// Sum of cycle cover weights, keyed by cycle count, where a cover's weight
// is the product of its matrix entries. nt must match support_digraph(m).
std::map<int, Int> weighted_cover_sums(const SquareIntMatrix& m,
                                       const NiceTreeDecomposition& nt,
                                       int width_limit = kDefaultWidthLimit);

// det(m) = sum over k of (-1)^(n+k) * weighted_cover_sums(m)[k].
Int determinant(const SquareIntMatrix& m, const NiceTreeDecomposition& nt,
                int width_limit = kDefaultWidthLimit);
Int determinant(const SquareIntMatrix& m,
                int width_limit = kDefaultWidthLimit);

// Support of xI - m: every diagonal position is present as a self-loop.
DirectedMultigraph charpoly_support(const SquareIntMatrix& m);

// det(xI - m), computed by the same cover walk with polynomial weights:
// self-loop at v weighs (x - m[v][v]), arc u->v weighs -m[u][v]. Monic of
// degree n. nt must match charpoly_support(m).
IntPolynomial characteristic_polynomial(const SquareIntMatrix& m,
                                        const NiceTreeDecomposition& nt,
                                        int width_limit = kDefaultWidthLimit);
IntPolynomial characteristic_polynomial(const SquareIntMatrix& m,
                                        int width_limit = kDefaultWidthLimit);

}  // namespace twc
