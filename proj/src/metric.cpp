#include "involute/metric.hpp"

#include "involute/errors.hpp"
#include "involute/linalg.hpp"

namespace involute {

Rational Metric::trace(const RationalMatrix& p) const {
  if (p.rows() != n || p.cols() != n)
    throw ShapeError("Metric::trace: tensor shape mismatch");
  Rational acc = 0;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) acc += g_inv(i, j) * p(i, j);
  return acc;
}

Rational Metric::pairing(const std::vector<Rational>& u,
                         const std::vector<Rational>& v) const {
  if (u.size() != n || v.size() != n)
    throw ShapeError("Metric::pairing: covector length mismatch");
  Rational acc = 0;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) acc += g_inv(i, j) * u[i] * v[j];
  return acc;
}

std::vector<Rational> Metric::raise(const std::vector<Rational>& p) const {
  if (p.size() != n) throw ShapeError("Metric::raise: covector length mismatch");
  std::vector<Rational> out(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) out[i] += g_inv(i, j) * p[j];
  return out;
}

Metric make_metric(const RationalMatrix& g) {
  if (g.rows() != g.cols() || g.rows() == 0)
    throw ShapeError("make_metric: square matrix needed");
  if (!(g == g.transposed())) throw ShapeError("make_metric: not symmetric");
  Metric m;
  m.n = static_cast<unsigned>(g.rows());
  m.g = g;
  m.g_inv = inverse(g);  // throws on a singular form
  return m;
}

Metric euclidean_metric(unsigned n) {
  return make_metric(RationalMatrix::identity(n));
}

Metric minkowski_metric(unsigned n) {
  RationalMatrix g = RationalMatrix::identity(n);
  g(0, 0) = Rational(-1);
  return make_metric(g);
}

}  // namespace involute
