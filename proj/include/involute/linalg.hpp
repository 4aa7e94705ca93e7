#ifndef INVOLUTE_LINALG_HPP
#define INVOLUTE_LINALG_HPP

#include <cstddef>

#include "involute/matrix.hpp"

namespace involute {

struct RankKernel {
  std::size_t rank = 0;
  // Columns form a basis of ker(M); exactly cols(M) - rank of them.
  RationalMatrix kernel;
};

// Exact rank and kernel basis.  Decomposes the matrix into connected
// components of its nonzero pattern first; symbol and Spencer matrices over
// diagonal metrics split into many small blocks this way.
RankKernel rank_kernel(const RationalMatrix& m);

std::size_t rank_of(const RationalMatrix& m);

// Independent second route: fraction-free (Bareiss) elimination over the
// integers after clearing denominators, no component decomposition, natural
// or reversed column order.  Used for cross-checks.
std::size_t rank_fraction_free(const RationalMatrix& m,
                               bool reverse_columns = false);

Rational determinant(const RationalMatrix& m);

RationalMatrix inverse(const RationalMatrix& m);

// Solves B * X = M exactly.  Requires B of full column rank; throws
// ConsistencyError when a column of M is outside span(B).
RationalMatrix express_in_basis(const RationalMatrix& basis,
                                const RationalMatrix& m);

// Rows spanning the annihilator of span(basis) in the ambient space.
RationalMatrix annihilator_rows(const RationalMatrix& basis);

}  // namespace involute

#endif
