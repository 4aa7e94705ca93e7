#include "involute/symbolic_system.hpp"

#include "involute/errors.hpp"
#include "involute/linalg.hpp"

namespace involute {

std::size_t SymbolicSystem::dim_g(unsigned t) const {
  if (t > truncation) throw ShapeError("dim_g beyond truncation order");
  return levels[t].dim;
}

const RationalMatrix& SymbolicSystem::basis(unsigned t) const {
  if (t > truncation) throw ShapeError("basis beyond truncation order");
  if (levels[t].implicit)
    throw ShapeError("basis requested for an implicit (full) level");
  return levels[t].basis;
}

SymbolicSystem build_system(const SymbolMap& s, unsigned truncation) {
  s.validate_shape();
  if (truncation < s.order)
    throw ShapeError("truncation below equation order");
  SymbolicSystem sys;
  sys.defining = s;
  sys.truncation = truncation;
  sys.levels.resize(truncation + 1);
  for (unsigned t = 0; t <= truncation; ++t) {
    auto& lvl = sys.levels[t];
    if (t < s.order) {
      lvl.implicit = true;
      lvl.dim = SymBasis(s.n, t).size() * s.source_fiber_dim;
    } else {
      const SymbolMap p = prolong(s, t - s.order);
      auto rk = rank_kernel(p.matrix);
      lvl.implicit = false;
      lvl.dim = rk.kernel.cols();
      lvl.basis = std::move(rk.kernel);
    }
  }
  return sys;
}

IntersectionProlongation prolong_by_intersection(const SymbolicSystem& sys,
                                                 unsigned t) {
  const unsigned k = sys.order(), n = sys.n(), m = sys.fiber_dim();
  if (t <= k) throw ShapeError("prolong_by_intersection needs t > k");
  if (t > sys.truncation) throw ShapeError("t beyond truncation order");
  const RationalMatrix ann = annihilator_rows(sys.basis(k));
  const SymBasis outer(n, t - k), inner(n, k), src(n, t);
  RationalMatrix constraint(outer.size() * ann.rows(), src.size() * m);
  for (std::size_t g = 0; g < src.size(); ++g) {
    for (const CoTerm& term : comultiply(src[g], t - k)) {
      const std::size_t mu = outer.index_of(term.beta);
      const std::size_t ai = inner.index_of(term.gamma);
      const Rational c(term.coeff);
      for (unsigned w = 0; w < m; ++w) {
        const std::size_t col = g * m + w;
        for (std::size_t r = 0; r < ann.rows(); ++r) {
          const Rational& e = ann(r, ai * m + w);
          if (is_zero(e)) continue;
          constraint(mu * ann.rows() + r, col) += c * e;
        }
      }
    }
  }
  auto rk = rank_kernel(constraint);
  IntersectionProlongation out;
  out.dim = rk.kernel.cols();
  out.basis = std::move(rk.kernel);
  return out;
}

RationalMatrix restricted_delta_image(const SymbolicSystem& sys, unsigned a,
                                      unsigned i) {
  const unsigned n = sys.n(), m = sys.fiber_dim();
  const RationalMatrix full = delta_matrix(n, a, i, m);
  if (a < sys.order() || sys.levels[a].implicit) return full;
  const ExtBasis ext(n, i);
  return full * sys.basis(a).kron(RationalMatrix::identity(ext.size()));
}

SpencerComplexSlice spencer_slice(const SymbolicSystem& sys, unsigned t) {
  if (t > sys.truncation) throw ShapeError("slice beyond truncation order");
  const unsigned n = sys.n(), m = sys.fiber_dim(), k = sys.order();
  SpencerComplexSlice slice;
  slice.t = t;
  const unsigned imax = std::min(n, t);
  for (unsigned i = 0; i <= imax; ++i) {
    const unsigned a = t - i;
    slice.slot_dims.push_back(sys.dim_g(a) * ExtBasis(n, i).size());
  }
  for (unsigned i = 0; i < imax; ++i) {
    const unsigned a = t - i;  // source symmetric degree, >= 1 here
    const RationalMatrix image = restricted_delta_image(sys, a, i);
    const unsigned b = a - 1;
    if (b < k) {
      slice.maps.push_back(image);
      continue;
    }
    // Re-express the ambient image in the stored kernel basis of g_{a-1};
    // a failed solve means the basis is broken, not the mathematics.
    const ExtBasis dst_ext(n, i + 1);
    const RationalMatrix& B = sys.basis(b);
    const std::size_t amb = B.rows();
    RationalMatrix coords(sys.dim_g(b) * dst_ext.size(), image.cols());
    for (std::size_t e = 0; e < dst_ext.size(); ++e) {
      RationalMatrix block(amb, image.cols());
      for (std::size_t r = 0; r < amb; ++r)
        for (std::size_t c = 0; c < image.cols(); ++c)
          block(r, c) = image(r * dst_ext.size() + e, c);
      const RationalMatrix x = express_in_basis(B, block);
      for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c)
          coords(r * dst_ext.size() + e, c) = x(r, c);
    }
    slice.maps.push_back(std::move(coords));
  }
  return slice;
}

}  // namespace involute
