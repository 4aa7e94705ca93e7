#ifndef INVOLUTE_METRIC_HPP
#define INVOLUTE_METRIC_HPP

#include <vector>

#include "involute/matrix.hpp"

namespace involute {

// Pseudo-Riemannian metric at a point: a symmetric invertible bilinear form
// together with its inverse.
struct Metric {
  unsigned n = 0;
  RationalMatrix g;
  RationalMatrix g_inv;

  // Tr_g(p) = g^{ij} p_{ij} for a symmetric two-tensor p.
  Rational trace(const RationalMatrix& p) const;
  // <u, v> = g^{ij} u_i v_j for covectors.
  Rational pairing(const std::vector<Rational>& u,
                   const std::vector<Rational>& v) const;
  // Index raising g^{-1} p for a covector p.
  std::vector<Rational> raise(const std::vector<Rational>& p) const;
};

// Validates symmetry and invertibility; computes the inverse once.
Metric make_metric(const RationalMatrix& g);

Metric euclidean_metric(unsigned n);
// diag(-1, 1, ..., 1)
Metric minkowski_metric(unsigned n);

}  // namespace involute

#endif
