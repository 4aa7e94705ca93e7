#ifndef INVOLUTE_SYMBOL_MAP_HPP
#define INVOLUTE_SYMBOL_MAP_HPP

#include "involute/combinatorics.hpp"
#include "involute/matrix.hpp"

namespace involute {

// Principal symbol sigma: S^k T* (x) N -> S^t T* (x) V as an exact matrix.
// Base symbols of an operator have target_sym_degree == 0 (plain V);
// prolongations carry the extra symmetric factor in the target.
struct SymbolMap {
  unsigned n = 0;                 // dim T
  unsigned order = 0;             // k
  unsigned source_fiber_dim = 0;  // m = dim N
  unsigned target_fiber_dim = 0;  // dim V
  unsigned target_sym_degree = 0;
  RationalMatrix matrix;          // rows = dim S^t * dim V, cols = dim S^k * m

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }

  void validate_shape() const;
};

SymbolMap make_symbol_map(unsigned n, unsigned order, unsigned source_fiber_dim,
                          unsigned target_fiber_dim, RationalMatrix matrix);

// sigma^{(l)}: S^{k+l} (x) N -> S^l (x) V, the composite of the
// comultiplication S^{k+l} -> S^l (x) S^k with id (x) sigma.
SymbolMap prolong(const SymbolMap& s, unsigned l);

// Block-diagonal symbol of a weakly uncoupled pair; orders and base
// dimensions must agree.
SymbolMap direct_sum(const SymbolMap& a, const SymbolMap& b);

}  // namespace involute

#endif
