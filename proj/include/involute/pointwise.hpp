#ifndef INVOLUTE_POINTWISE_HPP
#define INVOLUTE_POINTWISE_HPP

#include <vector>

#include "involute/metric.hpp"

namespace involute {

// Background field data at a single point, all rational.
struct PointData {
  std::vector<Rational> k;  // null vector (radiation background)
  std::vector<Rational> U;  // unit timelike vector (fluid background)
  Rational epsilon = 0;     // energy density
  Rational lambda = 0;
  Rational pressure = 0;            // P(epsilon)
  Rational pressure_derivative = 0;  // P'(epsilon)
  RationalMatrix stress;
};

// Characteristic matrix of the radiation system at the covector p, on the
// fiber k-perp (+) R.  The full matter fiber T (+) R is cut down to the
// directions compatible with the null constraint, which is what makes
// det = <p,k>^n / epsilon an exact identity.
RationalMatrix radiation_symbol_at(const std::vector<Rational>& p,
                                   const PointData& point,
                                   const Metric& metric);

// Characteristic matrix of the fluid system at p, on U-perp (+) R:
// [[(eps+P) <p,U> I, P' proj(p)], [(eps+P) p, <p,U>]].
RationalMatrix fluid_symbol_at(const std::vector<Rational>& p,
                               const PointData& point, const Metric& metric);

// Gauge-fixing symbol at p on T:
//   phi |-> ( q |-> |p|^2 T(phi, dphi(q#)) + <p,q> T(phi, dphi(p#)) ).
RationalMatrix deturck_symbol_at(const std::vector<Rational>& p,
                                 const Metric& metric,
                                 const RationalMatrix& stress,
                                 const RationalMatrix& dphi);

}  // namespace involute

#endif
