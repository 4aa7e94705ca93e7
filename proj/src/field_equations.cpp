#include "involute/field_equations.hpp"

#include "involute/errors.hpp"

namespace involute {

namespace {

RationalMatrix sym_of(const RationalMatrix& m) {
  return (m + m.transposed()).scaled(Rational(1, 2));
}

RationalMatrix outer(const std::vector<Rational>& u,
                     const std::vector<Rational>& v) {
  RationalMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

std::vector<Rational> mat_vec(const RationalMatrix& m,
                              const std::vector<Rational>& v) {
  return m.apply(v);
}

// Source coordinate vector for sym-part coefficients (x) fiber coefficients,
// in the (sym * fiber + w) convention.
std::vector<Rational> source_vector(const std::vector<Rational>& sym_coeffs,
                                    const std::vector<Rational>& fiber) {
  std::vector<Rational> out(sym_coeffs.size() * fiber.size());
  for (std::size_t s = 0; s < sym_coeffs.size(); ++s) {
    if (is_zero(sym_coeffs[s])) continue;
    for (std::size_t w = 0; w < fiber.size(); ++w)
      out[s * fiber.size() + w] = sym_coeffs[s] * fiber[w];
  }
  return out;
}

// e_i for all i, then e_i + e_j for i < j: a polarization spanning set.
std::vector<std::vector<Rational>> covector_span(unsigned n) {
  std::vector<std::vector<Rational>> out;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    out.push_back(v);
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      std::vector<Rational> v(n);
      v[i] = 1;
      v[j] = 1;
      out.push_back(v);
    }
  return out;
}

void require_equal(const std::vector<Rational>& a,
                   const std::vector<Rational>& b, const char* what) {
  if (a != b)
    throw ConsistencyError(std::string(what) +
                           ": bilinear extension disagrees on decomposables");
}

}  // namespace

RationalMatrix sym2_tensor(unsigned n, const std::vector<Rational>& coeffs) {
  const SymBasis basis(n, 2);
  if (coeffs.size() != basis.size())
    throw ShapeError("sym2_tensor: coefficient count mismatch");
  RationalMatrix t(n, n);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const MultiIndex& a = basis[s];
    unsigned i = 0, j = 0;
    unsigned seen = 0;
    for (unsigned v = 0; v < n; ++v)
      for (unsigned rep = 0; rep < a[v]; ++rep) (seen++ == 0 ? i : j) = v;
    if (i == j) {
      t(i, i) = coeffs[s];
    } else {
      t(i, j) = coeffs[s] / 2;
      t(j, i) = coeffs[s] / 2;
    }
  }
  return t;
}

std::vector<Rational> sym2_coeffs(const RationalMatrix& t) {
  const unsigned n = static_cast<unsigned>(t.rows());
  if (t.cols() != n || !(t == t.transposed()))
    throw ShapeError("sym2_coeffs: symmetric matrix needed");
  const SymBasis basis(n, 2);
  std::vector<Rational> coeffs(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const MultiIndex& a = basis[s];
    unsigned i = 0, j = 0, seen = 0;
    for (unsigned v = 0; v < n; ++v)
      for (unsigned rep = 0; rep < a[v]; ++rep) (seen++ == 0 ? i : j) = v;
    coeffs[s] = (i == j) ? t(i, i) : t(i, j) * 2;
  }
  return coeffs;
}

std::vector<Rational> quadratic_coeffs(const std::vector<Rational>& p,
                                       const std::vector<Rational>& q) {
  if (p.size() != q.size()) throw ShapeError("quadratic_coeffs: length mismatch");
  return sym2_coeffs(sym_of(outer(p, q)));
}

SymbolMap ricci_symbol(const Metric& metric) {
  const unsigned n = metric.n;
  if (n < 3) throw ShapeError("ricci_symbol: dimension must be at least 3");
  const SymBasis sym(n, 2);
  const std::size_t m = sym.size();  // fiber S^2 has the same dimension
  RationalMatrix mat(m, sym.size() * m);

  auto value = [&](const RationalMatrix& P, const RationalMatrix& Q) {
    return sym_of(P * metric.g_inv * Q) -
           (Q.scaled(metric.trace(P)) + P.scaled(metric.trace(Q)))
               .scaled(Rational(1, 2));
  };

  for (std::size_t s = 0; s < sym.size(); ++s) {
    std::vector<Rational> pc(m);
    pc[s] = 1;
    const RationalMatrix P = sym2_tensor(n, pc);
    for (std::size_t w = 0; w < m; ++w) {
      std::vector<Rational> qc(m);
      qc[w] = 1;
      const std::vector<Rational> out =
          sym2_coeffs(value(P, sym2_tensor(n, qc)));
      for (std::size_t v = 0; v < m; ++v) mat(v, s * m + w) = out[v];
    }
  }
  SymbolMap result = make_symbol_map(n, 2, static_cast<unsigned>(m),
                                     static_cast<unsigned>(m), std::move(mat));

  // zeta(p^2 (x) q^2) = <p,q> pq - (|p|^2 q^2 + |q|^2 p^2)/2 on a spanning
  // set of covectors, evaluated through the assembled matrix.
  for (const auto& p : covector_span(n))
    for (const auto& q : covector_span(n)) {
      const std::vector<Rational> got = result.matrix.apply(
          source_vector(quadratic_coeffs(p, p), quadratic_coeffs(q, q)));
      const Rational pq = metric.pairing(p, q);
      const RationalMatrix expect =
          sym_of(outer(p, q)).scaled(pq) -
          (outer(q, q).scaled(metric.pairing(p, p)) +
           outer(p, p).scaled(metric.pairing(q, q)))
              .scaled(Rational(1, 2));
      require_equal(got, sym2_coeffs(expect), "ricci_symbol");
    }
  return result;
}

SymbolMap bianchi_symbol(const Metric& metric) {
  const unsigned n = metric.n;
  const SymBasis fiber(n, 2);
  const std::size_t m = fiber.size();
  RationalMatrix mat(n, n * m);
  for (unsigned a = 0; a < n; ++a) {
    std::vector<Rational> p(n);
    p[a] = 1;
    for (std::size_t w = 0; w < m; ++w) {
      std::vector<Rational> qc(m);
      qc[w] = 1;
      const RationalMatrix Q = sym2_tensor(n, qc);
      const Rational half_tr = metric.trace(Q) / 2;
      const std::vector<Rational> Qp = mat_vec(Q * metric.g_inv, p);
      for (unsigned v = 0; v < n; ++v)
        mat(v, a * m + w) = Qp[v] - half_tr * p[v];
    }
  }
  SymbolMap result = make_symbol_map(n, 1, static_cast<unsigned>(m), n,
                                     std::move(mat));

  // zeta(p (x) qr) = (<p,q> r + <p,r> q - <q,r> p)/2 on decomposables.
  for (const auto& p : covector_span(n))
    for (const auto& q : covector_span(n))
      for (const auto& r : covector_span(n)) {
        const std::vector<Rational> got =
            result.matrix.apply(source_vector(p, quadratic_coeffs(q, r)));
        std::vector<Rational> expect(n);
        const Rational cq = metric.pairing(p, q), cr = metric.pairing(p, r),
                       cqr = metric.pairing(q, r);
        for (unsigned v = 0; v < n; ++v)
          expect[v] = (cq * r[v] + cr * q[v] - cqr * p[v]) / 2;
        require_equal(got, expect, "bianchi_symbol");
      }
  return result;
}

GravTraceReversal grav_trace_reversal(const Metric& metric) {
  const unsigned n = metric.n;
  if (n <= 2) throw ShapeError("grav_trace_reversal: needs n > 2");
  const SymBasis fiber(n, 2);
  const std::size_t m = fiber.size();
  GravTraceReversal out{RationalMatrix(m, m), RationalMatrix(m, m)};
  for (std::size_t w = 0; w < m; ++w) {
    std::vector<Rational> hc(m);
    hc[w] = 1;
    const RationalMatrix h = sym2_tensor(n, hc);
    const Rational tr = metric.trace(h);
    const std::vector<Rational> fwd =
        sym2_coeffs(h - metric.g.scaled(tr / 2));
    const std::vector<Rational> bwd =
        sym2_coeffs(h - metric.g.scaled(tr / Rational(static_cast<long>(n) - 2)));
    for (std::size_t v = 0; v < m; ++v) {
      out.G(v, w) = fwd[v];
      out.G_inv(v, w) = bwd[v];
    }
  }
  if (!(out.G * out.G_inv == RationalMatrix::identity(m)))
    throw ConsistencyError("grav_trace_reversal: G G^{-1} != id");
  return out;
}

SymbolMap maxwell_symbol(const Metric& metric) {
  const unsigned n = metric.n;
  const SymBasis sym(n, 2);
  RationalMatrix mat(n, sym.size() * n);
  for (std::size_t s = 0; s < sym.size(); ++s) {
    std::vector<Rational> qc(sym.size());
    qc[s] = 1;
    const RationalMatrix Q = sym2_tensor(n, qc);
    const Rational tr = metric.trace(Q);
    const RationalMatrix Qg = Q * metric.g_inv;
    for (unsigned w = 0; w < n; ++w) {
      std::vector<Rational> p(n);
      p[w] = 1;
      const std::vector<Rational> Qp = mat_vec(Qg, p);
      for (unsigned v = 0; v < n; ++v)
        mat(v, s * n + w) = Qp[v] - tr * p[v];
    }
  }
  SymbolMap result = make_symbol_map(n, 2, n, n, std::move(mat));

  // zeta(q^2 (x) a) = <q,a> q - |q|^2 a on decomposables.
  for (const auto& q : covector_span(n))
    for (const auto& a : covector_span(n)) {
      const std::vector<Rational> got =
          result.matrix.apply(source_vector(quadratic_coeffs(q, q), a));
      const Rational qa = metric.pairing(q, a), qq = metric.pairing(q, q);
      std::vector<Rational> expect(n);
      for (unsigned v = 0; v < n; ++v) expect[v] = qa * q[v] - qq * a[v];
      require_equal(got, expect, "maxwell_symbol");
    }
  return result;
}

SymbolMap codifferential_symbol(const Metric& metric) {
  const unsigned n = metric.n;
  RationalMatrix mat(1, n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned w = 0; w < n; ++w) mat(0, a * n + w) = metric.g_inv(a, w);
  return make_symbol_map(n, 1, n, 1, std::move(mat));
}

SymbolMap einstein_maxwell_symbol(const Metric& metric) {
  return direct_sum(ricci_symbol(metric), maxwell_symbol(metric));
}

SymbolMap energy_momentum_div_symbol(const Metric& metric,
                                     const RationalMatrix& stress,
                                     const Rational& lambda) {
  const unsigned n = metric.n;
  if (stress.rows() != n || stress.cols() != n ||
      !(stress == stress.transposed()))
    throw ShapeError("energy_momentum_div_symbol: stress must be symmetric n x n");
  const RationalMatrix shifted = stress - metric.g.scaled(lambda);
  const RationalMatrix op = shifted * metric.g_inv;  // covector endomorphism
  const RationalMatrix quad = metric.g_inv * shifted * metric.g_inv;
  const SymBasis fiber(n, 2);
  const std::size_t m = fiber.size();
  RationalMatrix mat(n, n * m);
  for (unsigned a = 0; a < n; ++a) {
    std::vector<Rational> p(n);
    p[a] = 1;
    const std::vector<Rational> op_p = mat_vec(op, p);
    for (std::size_t w = 0; w < m; ++w) {
      std::vector<Rational> qc(m);
      qc[w] = 1;
      const RationalMatrix Q = sym2_tensor(n, qc);
      const Rational tr = metric.trace(Q);
      Rational mixed = 0;  // Tr(g^{-1} T g^{-1} Q)
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) mixed += quad(i, j) * Q(j, i);
      for (unsigned v = 0; v < n; ++v)
        mat(v, a * m + w) = (tr * op_p[v] - mixed * p[v]) / 2;
    }
  }
  SymbolMap result = make_symbol_map(n, 1, static_cast<unsigned>(m), n,
                                     std::move(mat));

  // zeta(p (x) q^2) = (|q|^2 T p - <T q, q> p)/2 on decomposables.
  for (const auto& p : covector_span(n))
    for (const auto& q : covector_span(n)) {
      const std::vector<Rational> got =
          result.matrix.apply(source_vector(p, quadratic_coeffs(q, q)));
      const std::vector<Rational> op_p = mat_vec(op, p);
      Rational tqq = 0;
      const std::vector<Rational> gq = mat_vec(quad, q);
      for (unsigned i = 0; i < n; ++i) tqq += q[i] * gq[i];
      std::vector<Rational> expect(n);
      const Rational qq = metric.pairing(q, q);
      for (unsigned v = 0; v < n; ++v)
        expect[v] = (qq * op_p[v] - tqq * p[v]) / 2;
      require_equal(got, expect, "energy_momentum_div_symbol");
    }
  return result;
}

SymbolMap wave_symbol(const Metric& metric) {
  const unsigned n = metric.n;
  const SymBasis sym(n, 2);
  RationalMatrix mat(1, sym.size());
  for (std::size_t s = 0; s < sym.size(); ++s) {
    std::vector<Rational> qc(sym.size());
    qc[s] = 1;
    mat(0, s) = metric.trace(sym2_tensor(n, qc));
  }
  return make_symbol_map(n, 2, 1, 1, std::move(mat));
}

SymbolMap block_triangular_symbol(const SymbolMap& gravity,
                                  const SymbolMap& coupling,
                                  const SymbolMap& matter) {
  if (gravity.order != 2 || coupling.order != 2 || matter.order != 2)
    throw ShapeError("block_triangular_symbol: all blocks must have order 2");
  if (gravity.n != coupling.n || gravity.n != matter.n)
    throw ShapeError("block_triangular_symbol: base dimension mismatch");
  if (coupling.source_fiber_dim != gravity.source_fiber_dim)
    throw ShapeError("block_triangular_symbol: coupling must act on the S^2 block");
  if (coupling.target_fiber_dim != matter.target_fiber_dim)
    throw ShapeError("block_triangular_symbol: matter target mismatch");
  if (gravity.target_sym_degree != 0 || coupling.target_sym_degree != 0 ||
      matter.target_sym_degree != 0)
    throw ShapeError("block_triangular_symbol: base symbols required");
  const SymBasis sym(gravity.n, 2);
  const unsigned mg = gravity.source_fiber_dim, mm = matter.source_fiber_dim;
  const unsigned vg = gravity.target_fiber_dim, vm = matter.target_fiber_dim;
  const unsigned m = mg + mm, V = vg + vm;
  RationalMatrix mat(V, sym.size() * m);
  for (std::size_t s = 0; s < sym.size(); ++s) {
    for (unsigned w = 0; w < mg; ++w) {
      for (unsigned v = 0; v < vg; ++v)
        mat(v, s * m + w) = gravity.matrix(v, s * mg + w);
      for (unsigned v = 0; v < vm; ++v)
        mat(vg + v, s * m + w) = coupling.matrix(v, s * mg + w);
    }
    for (unsigned w = 0; w < mm; ++w)
      for (unsigned v = 0; v < vm; ++v)
        mat(vg + v, s * m + mg + w) = matter.matrix(v, s * mm + w);
  }
  return make_symbol_map(gravity.n, 2, m, V, std::move(mat));
}

}  // namespace involute
