#include "involute/pointwise.hpp"

#include "involute/errors.hpp"
#include "involute/linalg.hpp"

namespace involute {

namespace {

Rational pair_covector_vector(const std::vector<Rational>& p,
                              const std::vector<Rational>& v) {
  Rational acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += p[i] * v[i];
  return acc;
}

Rational g_norm_vector(const Metric& g, const std::vector<Rational>& v) {
  Rational acc = 0;
  for (unsigned i = 0; i < g.n; ++i)
    for (unsigned j = 0; j < g.n; ++j) acc += g.g(i, j) * v[i] * v[j];
  return acc;
}

// Basis of the g-orthogonal complement of the vector v, as matrix columns.
RationalMatrix orthogonal_basis(const Metric& g, const std::vector<Rational>& v) {
  RationalMatrix row(1, g.n);
  for (unsigned i = 0; i < g.n; ++i)
    for (unsigned j = 0; j < g.n; ++j) row(0, j) += g.g(i, j) * v[i];
  return rank_kernel(row).kernel;
}

}  // namespace

RationalMatrix radiation_symbol_at(const std::vector<Rational>& p,
                                   const PointData& point,
                                   const Metric& metric) {
  const unsigned n = metric.n;
  if (p.size() != n || point.k.size() != n)
    throw ShapeError("radiation_symbol_at: length mismatch");
  bool k_nonzero = false;
  for (const auto& c : point.k) k_nonzero = k_nonzero || !is_zero(c);
  if (!k_nonzero || !is_zero(g_norm_vector(metric, point.k)))
    throw ShapeError("radiation_symbol_at: k must be null and nonzero");
  if (sgn(point.epsilon) <= 0)
    throw ShapeError("radiation_symbol_at: epsilon must be positive");

  const RationalMatrix basis = orthogonal_basis(metric, point.k);
  const Rational pk = pair_covector_vector(p, point.k);
  const std::size_t d = basis.cols();  // n - 1
  RationalMatrix m(d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = pk;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> col(n);
    for (unsigned r = 0; r < n; ++r) col[r] = basis(r, j);
    m(d, j) = pair_covector_vector(p, col);
  }
  m(d, d) = pk / point.epsilon;
  return m;
}

RationalMatrix fluid_symbol_at(const std::vector<Rational>& p,
                               const PointData& point, const Metric& metric) {
  const unsigned n = metric.n;
  if (p.size() != n || point.U.size() != n)
    throw ShapeError("fluid_symbol_at: length mismatch");
  if (g_norm_vector(metric, point.U) != Rational(-1))
    throw ShapeError("fluid_symbol_at: U must satisfy |U|^2 = -1");
  const Rational enthalpy = point.epsilon + point.pressure;
  if (is_zero(enthalpy))
    throw ShapeError("fluid_symbol_at: epsilon + P must be nonzero");

  const RationalMatrix basis = orthogonal_basis(metric, point.U);
  const std::size_t d = basis.cols();  // n - 1
  const Rational pU = pair_covector_vector(p, point.U);

  // proj(p)# = g^{-1} p + <p,U> U lies in U-perp; express it in the basis.
  RationalMatrix proj(n, 1);
  {
    const std::vector<Rational> raised = metric.raise(p);
    for (unsigned i = 0; i < n; ++i) proj(i, 0) = raised[i] + pU * point.U[i];
  }
  const RationalMatrix coords = express_in_basis(basis, proj);

  RationalMatrix m(d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = enthalpy * pU;
    m(i, d) = point.pressure_derivative * coords(i, 0);
  }
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> col(n);
    for (unsigned r = 0; r < n; ++r) col[r] = basis(r, j);
    m(d, j) = enthalpy * pair_covector_vector(p, col);
  }
  m(d, d) = pU;
  return m;
}

RationalMatrix deturck_symbol_at(const std::vector<Rational>& p,
                                 const Metric& metric,
                                 const RationalMatrix& stress,
                                 const RationalMatrix& dphi) {
  const unsigned n = metric.n;
  if (p.size() != n || stress.rows() != n || stress.cols() != n ||
      dphi.rows() != n || dphi.cols() != n)
    throw ShapeError("deturck_symbol_at: shape mismatch");
  if (is_zero(determinant(dphi)))
    throw ShapeError("deturck_symbol_at: dphi must be invertible");

  const RationalMatrix a = stress * dphi * metric.g_inv;
  const std::vector<Rational> ap = a.apply(p);
  const std::vector<Rational> raised = metric.raise(p);
  Rational p_norm = 0;
  for (unsigned i = 0; i < n; ++i) p_norm += p[i] * raised[i];

  RationalMatrix m(n, n);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < n; ++i)
      m(j, i) = p_norm * a(i, j) + raised[j] * ap[i];
  return m;
}

}  // namespace involute
