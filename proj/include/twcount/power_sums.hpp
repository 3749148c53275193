#pragma once

#include <cstddef>
#include <vector>

#include "twcount/bigint.hpp"
#include "twcount/cycle_cover.hpp"
#include "twcount/decomposition.hpp"
#include "twcount/matrix.hpp"
#include "twcount/polynomial.hpp"

namespace twc {

// Power sums p_0..p_max_power of the roots of chi, by Newton's identities
// over exact integers. p_0 is the degree of chi (the root count). chi must
// be monic with integer coefficients (NotMonic otherwise); the roots
// themselves are never computed.
std::vector<Int> power_sums_from_charpoly(const IntPolynomial& chi,
                                          std::size_t max_power);

// trace(m^k) for k >= 1, as the k-th power sum of m's eigenvalues: the
// characteristic polynomial comes from the cover walk, the power sum from
// Newton's identities. No matrix power is ever formed. InvalidArgument if
// k == 0. The decomposition must match charpoly_support(m).
Int trace_power(const SquareIntMatrix& m, const NiceTreeDecomposition& nt,
                std::size_t k, int width_limit = kDefaultWidthLimit);
Int trace_power(const SquareIntMatrix& m, std::size_t k,
                int width_limit = kDefaultWidthLimit);

}  // namespace twc
