#ifndef INVOLUTE_FIELD_EQUATIONS_HPP
#define INVOLUTE_FIELD_EQUATIONS_HPP

#include <vector>

#include "involute/metric.hpp"
#include "involute/symbol_map.hpp"

namespace involute {

// Coordinates over SymBasis(n, 2) <-> symmetric matrices.  The monomial
// x_i x_j (i != j) carries the tensor sym(e_i (x) e_j), so off-diagonal
// entries pick up the factor 1/2 one way and 2 the other.
RationalMatrix sym2_tensor(unsigned n, const std::vector<Rational>& coeffs);
std::vector<Rational> sym2_coeffs(const RationalMatrix& t);

// Coefficient vector of the product of two linear forms.
std::vector<Rational> quadratic_coeffs(const std::vector<Rational>& p,
                                       const std::vector<Rational>& q);

// Linearized Ricci operator: order 2, fiber S^2 -> S^2,
//   zeta(P (x) Q) = sym(P g^{-1} Q) - (Tr_g(P) Q + Tr_g(Q) P)/2.
SymbolMap ricci_symbol(const Metric& metric);

// Divergence of the trace reversal (the Bianchi operator): order 1,
// fiber S^2 -> T*, zeta(p (x) Q) = Q g^{-1} p - Tr_g(Q) p / 2.
SymbolMap bianchi_symbol(const Metric& metric);

// h -> h - Tr_g(h) g / 2 and its inverse, as fiber maps on S^2 coordinates.
struct GravTraceReversal {
  RationalMatrix G;
  RationalMatrix G_inv;
};
GravTraceReversal grav_trace_reversal(const Metric& metric);

// Wave-type operator on the potential: order 2, fiber T* -> T*,
//   zeta(Q (x) p) = Q g^{-1} p - Tr_g(Q) p.
SymbolMap maxwell_symbol(const Metric& metric);

// Gauge functional: order 1, fiber T* -> R, zeta(q (x) p) = <p, q>_g.
SymbolMap codifferential_symbol(const Metric& metric);

// Block-diagonal join of the Ricci and potential operators on S^2 (+) T*.
SymbolMap einstein_maxwell_symbol(const Metric& metric);

// Divergence of the shifted stress tensor at a background: order 1,
// fiber S^2 -> T*, with T_shift = stress - lambda g,
//   zeta(p (x) Q) = (Tr_g(Q) T_shift g^{-1} p - Tr(g^{-1} T_shift g^{-1} Q) p)/2.
SymbolMap energy_momentum_div_symbol(const Metric& metric,
                                     const RationalMatrix& stress,
                                     const Rational& lambda);

// Scalar wave operator: order 2, fiber R -> R, zeta(Q (x) 1) = Tr_g(Q).
SymbolMap wave_symbol(const Metric& metric);

// Lower-triangular coupling [[G, 0], [L_g, L_phi]] of two order-2 operators
// sharing the S^2 source block.
SymbolMap block_triangular_symbol(const SymbolMap& gravity,
                                  const SymbolMap& coupling,
                                  const SymbolMap& matter);

}  // namespace involute

#endif
