#pragma once

#include <cstddef>
#include <map>

#include "twcount/bigint.hpp"
#include "twcount/graph.hpp"
#include "twcount/matrix.hpp"
#include "twcount/polynomial.hpp"

// Brute-force reference implementations. These deliberately share no code
// with the main engine; they exist so every engine result can be checked
// against an independently computed value on small inputs.
namespace twc::oracle {

// Hard input caps; each call below these bounds finishes well under a second.
inline constexpr std::size_t kMaxPermutationDimension = 8;
inline constexpr std::size_t kMaxCoverDimension = 10;
inline constexpr std::size_t kMaxTourEdges = 12;
inline constexpr unsigned long long kMaxArborescenceChoices = 10'000'000;

// Signed permutation expansion, n <= kMaxPermutationDimension.
Int det_permutation_expansion(const SquareIntMatrix& m);

// Fraction-free elimination with exact integer division; no size cap.
Int det_fraction_free(const SquareIntMatrix& m);

// Number of cycle covers keyed by cycle count. Parallel arcs count as
// distinct choices. n <= kMaxCoverDimension.
std::map<int, Int> enumerate_cycle_covers(const DirectedMultigraph& d);

// Number of arborescences oriented toward root: every other vertex picks one
// outgoing arc and all picks lead to root without cycles.
Int enumerate_arborescences(const DirectedMultigraph& d, std::uint32_t root);

// Euler tour counts by backtracking, one tour per rotation class; the
// lexicographically least arc (edge) is fixed as the first step. Parallel
// arcs are distinct. At most kMaxTourEdges arcs/edges.
Int enumerate_euler_tours(const DirectedMultigraph& d);
Int enumerate_euler_tours(const UndirectedMultigraph& g);

// Characteristic polynomial by exact rational interpolation of
// det(x0*I - m) at x0 = 0..n; uses the fraction-free determinant.
IntPolynomial charpoly_interpolation(const SquareIntMatrix& m);

// Trace of m^k by repeated multiplication; k >= 1.
Int matrix_power_trace(const SquareIntMatrix& m, std::size_t k);

}  // namespace twc::oracle
