#include "involute/symbol_map.hpp"

#include "involute/errors.hpp"

namespace involute {

void SymbolMap::validate_shape() const {
  const SymBasis src(n, order);
  const SymBasis dst(n, target_sym_degree);
  if (matrix.cols() != src.size() * source_fiber_dim ||
      matrix.rows() != dst.size() * target_fiber_dim)
    throw ShapeError("symbol matrix does not match declared (n, k, fibers)");
}

SymbolMap make_symbol_map(unsigned n, unsigned order, unsigned source_fiber_dim,
                          unsigned target_fiber_dim, RationalMatrix matrix) {
  SymbolMap s;
  s.n = n;
  s.order = order;
  s.source_fiber_dim = source_fiber_dim;
  s.target_fiber_dim = target_fiber_dim;
  s.target_sym_degree = 0;
  s.matrix = std::move(matrix);
  s.validate_shape();
  return s;
}

SymbolMap prolong(const SymbolMap& s, unsigned l) {
  if (s.target_sym_degree != 0)
    throw ShapeError("prolong expects a base symbol");
  if (l == 0) return s;
  const unsigned n = s.n, k = s.order, m = s.source_fiber_dim;
  const unsigned V = s.target_fiber_dim;
  const SymBasis src(n, k + l), outer(n, l), inner(n, k);
  SymbolMap out;
  out.n = n;
  out.order = k + l;
  out.source_fiber_dim = m;
  out.target_fiber_dim = V;
  out.target_sym_degree = l;
  out.matrix = RationalMatrix(outer.size() * V, src.size() * m);
  for (std::size_t g = 0; g < src.size(); ++g) {
    for (const CoTerm& t : comultiply(src[g], l)) {
      const std::size_t bi = outer.index_of(t.beta);
      const std::size_t ai = inner.index_of(t.gamma);
      const Rational c(t.coeff);
      for (unsigned w = 0; w < m; ++w) {
        const std::size_t col = g * m + w;
        const std::size_t scol = ai * m + w;
        for (unsigned v = 0; v < V; ++v) {
          const Rational& e = s.matrix(v, scol);
          if (is_zero(e)) continue;
          out.matrix(bi * V + v, col) += c * e;
        }
      }
    }
  }
  return out;
}

SymbolMap direct_sum(const SymbolMap& a, const SymbolMap& b) {
  if (a.n != b.n) throw ShapeError("direct_sum: base dimension mismatch");
  if (a.order != b.order) throw ShapeError("direct_sum: order mismatch");
  if (a.target_sym_degree != 0 || b.target_sym_degree != 0)
    throw ShapeError("direct_sum expects base symbols");
  const SymBasis sym(a.n, a.order);
  const unsigned ma = a.source_fiber_dim, mb = b.source_fiber_dim;
  const unsigned Va = a.target_fiber_dim, Vb = b.target_fiber_dim;
  const unsigned m = ma + mb, V = Va + Vb;
  RationalMatrix mat(V, sym.size() * m);
  for (std::size_t s = 0; s < sym.size(); ++s) {
    for (unsigned w = 0; w < ma; ++w)
      for (unsigned v = 0; v < Va; ++v)
        mat(v, s * m + w) = a.matrix(v, s * ma + w);
    for (unsigned w = 0; w < mb; ++w)
      for (unsigned v = 0; v < Vb; ++v)
        mat(Va + v, s * m + ma + w) = b.matrix(v, s * mb + w);
  }
  return make_symbol_map(a.n, a.order, m, V, std::move(mat));
}

}  // namespace involute
