#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "involute/cartan.hpp"
#include "involute/cohomology.hpp"
#include "involute/errors.hpp"
#include "involute/field_equations.hpp"
#include "involute/linalg.hpp"
#include "involute/metric.hpp"
#include "involute/pointwise.hpp"

using namespace involute;

namespace {

std::vector<Rational> power_coeffs(const std::vector<Rational>& p, unsigned d) {
  const unsigned n = static_cast<unsigned>(p.size());
  std::vector<Rational> out{Rational(1)};
  for (unsigned step = 0; step < d; ++step) {
    const SymBasis from(n, step), to(n, step + 1);
    std::vector<Rational> next(to.size());
    for (std::size_t s = 0; s < from.size(); ++s) {
      if (is_zero(out[s])) continue;
      MultiIndex mu = from[s];
      for (unsigned j = 0; j < n; ++j) {
        if (is_zero(p[j])) continue;
        ++mu[j];
        next[to.index_of(mu)] += out[s] * p[j];
        --mu[j];
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Rational> tensor_coeffs(const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i * b.size() + j] = a[i] * b[j];
  return out;
}

std::vector<Rational> random_covector(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::vector<Rational> p(n);
  for (auto& c : p) c = coeff(rng);
  return p;
}

RationalMatrix random_symmetric(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  RationalMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) m(i, j) = m(j, i) = coeff(rng);
  return m;
}

RationalMatrix sym_part(const RationalMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = (a(i, j) + a(j, i)) / 2;
  return out;
}

}  // namespace

TEST_CASE("Ricci symbol values on arbitrary symmetric pairs") {
  std::mt19937_64 rng(31);
  const Metric g = minkowski_metric(4);
  const SymbolMap ric = ricci_symbol(g);
  for (int it = 0; it < 20; ++it) {
    const RationalMatrix P = random_symmetric(rng, 4);
    const RationalMatrix Q = random_symmetric(rng, 4);
    const auto got =
        ric.matrix.apply(tensor_coeffs(sym2_coeffs(P), sym2_coeffs(Q)));
    RationalMatrix expect = sym_part(P * g.g_inv * Q);
    const Rational trP = g.trace(P), trQ = g.trace(Q);
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = 0; j < 4; ++j)
        expect(i, j) -= (trP * Q(i, j) + trQ * P(i, j)) / 2;
    CHECK(got == sym2_coeffs(expect));
  }
  // zeta(p^2 (x) p^2) = |p|^2 p^2 - (|p|^2 p^2 + |p|^2 p^2)/2 = 0
  for (int it = 0; it < 20; ++it) {
    const auto p = random_covector(rng, 4);
    const auto v = quadratic_coeffs(p, p);
    bool all_zero = true;
    for (const auto& c : ric.matrix.apply(tensor_coeffs(v, v)))
      all_zero = all_zero && is_zero(c);
    CHECK(all_zero);
  }
}

TEST_CASE("Bianchi symbol prolongation identity") {
  // zeta^{(l)}((1/(l+1)) p^{l+1} (x) pq) = p^l (x) (|p|^2 / 2) q, any p, q
  std::mt19937_64 rng(7);
  const Metric g = minkowski_metric(4);
  const SymbolMap bia = bianchi_symbol(g);
  for (unsigned l = 0; l <= 2; ++l) {
    const SymbolMap pr = prolong(bia, l);
    for (int it = 0; it < 5; ++it) {
      const auto p = random_covector(rng, 4);
      const auto q = random_covector(rng, 4);
      auto sym = power_coeffs(p, l + 1);
      for (auto& c : sym) c /= (l + 1);
      const auto got =
          pr.matrix.apply(tensor_coeffs(sym, quadratic_coeffs(p, q)));
      const Rational half_norm = g.pairing(p, p) / 2;
      std::vector<Rational> scaled(q);
      for (auto& c : scaled) c *= half_norm;
      CHECK(got == tensor_coeffs(power_coeffs(p, l), scaled));
    }
  }
}

TEST_CASE("Bianchi composite with the Ricci symbol vanishes") {
  const Metric g = minkowski_metric(4);
  const SymbolMap ric = ricci_symbol(g), bia = bianchi_symbol(g);
  for (unsigned l = 0; l <= 2; ++l) {
    const RationalMatrix composite =
        prolong(bia, l).matrix * prolong(ric, l + 1).matrix;
    CHECK(composite.is_zero());
  }
}

TEST_CASE("Bianchi prolongations are surjective") {
  const SymbolMap bia = bianchi_symbol(minkowski_metric(4));
  for (unsigned l = 0; l <= 2; ++l) {
    const SymbolMap pr = prolong(bia, l);
    CHECK(rank_of(pr.matrix) == pr.matrix.rows());
  }
}

TEST_CASE("codifferential composite with the potential symbol vanishes") {
  const Metric g = minkowski_metric(4);
  const SymbolMap pot = maxwell_symbol(g), codiff = codifferential_symbol(g);
  for (unsigned l = 0; l <= 1; ++l) {
    const RationalMatrix composite =
        prolong(codiff, l).matrix * prolong(pot, l + 1).matrix;
    CHECK(composite.is_zero());
  }
}

TEST_CASE("codifferential prolongations are surjective") {
  const SymbolMap codiff = codifferential_symbol(minkowski_metric(4));
  for (unsigned l = 0; l <= 3; ++l) {
    const SymbolMap pr = prolong(codiff, l);
    CHECK(rank_of(pr.matrix) == pr.matrix.rows());
  }
}

TEST_CASE("compatibility ranks fill the middle term exactly") {
  // rank zeta_Ric^{(l+1)} + rank zeta_Bianchi^{(l)} = dim S^{l+1} (x) S^2
  const Metric g = minkowski_metric(4);
  const SymbolMap ric = ricci_symbol(g), bia = bianchi_symbol(g);
  for (unsigned l = 0; l <= 1; ++l) {
    const SymbolMap a = prolong(ric, l + 1);
    const SymbolMap b = prolong(bia, l);
    CHECK(rank_of(a.matrix) + rank_of(b.matrix) == a.matrix.rows());
  }
  const SymbolMap pot = maxwell_symbol(g), codiff = codifferential_symbol(g);
  for (unsigned l = 0; l <= 1; ++l) {
    const SymbolMap a = prolong(pot, l + 1);
    const SymbolMap b = prolong(codiff, l);
    CHECK(rank_of(a.matrix) + rank_of(b.matrix) == a.matrix.rows());
  }
}

TEST_CASE("trace reversal") {
  std::mt19937_64 rng(13);
  for (const Metric& g : {minkowski_metric(4), euclidean_metric(4)}) {
    const GravTraceReversal tr = grav_trace_reversal(g);
    CHECK(tr.G * tr.G_inv == RationalMatrix::identity(10));
    // G(g) = g - (n/2) g = (1 - n/2) g
    const auto image = tr.G.apply(sym2_coeffs(g.g));
    RationalMatrix expect = g.g;
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = 0; j < 4; ++j) expect(i, j) *= Rational(-1);
    CHECK(image == sym2_coeffs(expect));
    for (int it = 0; it < 20; ++it) {
      const RationalMatrix h = random_symmetric(rng, 4);
      const auto there = tr.G.apply(sym2_coeffs(h));
      CHECK(tr.G_inv.apply(there) == sym2_coeffs(h));
    }
  }
}

TEST_CASE("energy-momentum divergence symbol") {
  std::mt19937_64 rng(19);
  const Metric g = minkowski_metric(4);
  // T_shift proportional to g kills the symbol entirely
  RationalMatrix scaled_g = g.g;
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) scaled_g(i, j) *= 3;
  CHECK(energy_momentum_div_symbol(g, scaled_g, Rational(2)).matrix.is_zero());
  CHECK(energy_momentum_div_symbol(g, g.g, Rational(1)).matrix.is_zero());

  // generic stress: nonzero, and values match the displayed formula
  RationalMatrix stress(4, 4);
  stress(0, 0) = 2;
  stress(1, 1) = 1;
  const Rational lambda(1, 2);
  const SymbolMap s = energy_momentum_div_symbol(g, stress, lambda);
  CHECK(!s.matrix.is_zero());
  RationalMatrix shift = stress;
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) shift(i, j) -= lambda * g.g(i, j);
  for (int it = 0; it < 10; ++it) {
    const auto p = random_covector(rng, 4);
    const RationalMatrix Q = random_symmetric(rng, 4);
    const auto got = s.matrix.apply(tensor_coeffs(p, sym2_coeffs(Q)));
    const RationalMatrix tg = shift * g.g_inv;
    const auto tg_p = tg.apply(p);
    Rational inner = 0;  // Tr(g^{-1} T_shift g^{-1} Q)
    const RationalMatrix prod = g.g_inv * shift * g.g_inv * Q;
    for (unsigned i = 0; i < 4; ++i) inner += prod(i, i);
    const Rational trQ = g.trace(Q);
    std::vector<Rational> expect(4);
    for (unsigned i = 0; i < 4; ++i)
      expect[i] = (trQ * tg_p[i] - inner * p[i]) / 2;
    CHECK(got == expect);
  }
}

TEST_CASE("scalar wave system is determined and involutive") {
  const Metric g = minkowski_metric(4);
  const SymbolicSystem sys = build_system(wave_symbol(g), 5);
  for (unsigned t = 0; t <= 5; ++t)
    CHECK(sys.dim_g(t) == (t + 1) * (t + 1));
  const CohomologyTable table = cohomology_table(sys, 5);
  CHECK(table.h_vector() == std::vector<std::size_t>{1, 1, 0, 0, 0});
  const InvolutivityVerdict v = is_involutive_symbolic(sys, table, 3);
  CHECK(v.involutive);
  CHECK(v.cartan.characters == std::vector<std::size_t>{4, 3, 2, 0});
}

TEST_CASE("signature independence of the dimension tables") {
  const SymbolicSystem e = build_system(ricci_symbol(euclidean_metric(4)), 4);
  const std::vector<std::size_t> dims{10, 40, 90, 164, 266};
  for (unsigned t = 0; t <= 4; ++t) CHECK(e.dim_g(t) == dims[t]);
  const CohomologyTable table = cohomology_table(e, 4);
  CHECK(table.h_vector() == std::vector<std::size_t>{10, 10, 4, 0, 0});
  const InvolutivityVerdict v = is_involutive_symbolic(e, table, 5);
  CHECK(v.involutive);
  CHECK(v.cartan.characters == std::vector<std::size_t>{40, 30, 16, 4});
}

TEST_CASE("three-dimensional gravity") {
  const SymbolicSystem sys = build_system(ricci_symbol(minkowski_metric(3)), 4);
  CHECK(sys.dim_g(0) == 6);
  CHECK(sys.dim_g(2) == 30);  // 6 * 6 - 6, epimorphic symbol
  const CohomologyTable table = cohomology_table(sys, 4);
  // is_involutive_symbolic raises on any Cartan/cohomology disagreement
  const InvolutivityVerdict v = is_involutive_symbolic(sys, table, 11);
  CHECK(v.involutive == v.cohomology_clean);
}

TEST_CASE("block-triangular coupling does not change dimensions") {
  const Metric g = minkowski_metric(4);
  const SymbolMap grav = ricci_symbol(g), matter = wave_symbol(g);
  const SymbolMap zero_coupling =
      make_symbol_map(4, 2, 10, 1, RationalMatrix(1, 100));
  RationalMatrix c(1, 100);
  for (std::size_t col = 0; col < 100; ++col) c(0, col) = Rational(col + 1);
  const SymbolMap coupling = make_symbol_map(4, 2, 10, 1, c);

  const SymbolicSystem plain =
      build_system(block_triangular_symbol(grav, zero_coupling, matter), 4);
  const SymbolicSystem coupled =
      build_system(block_triangular_symbol(grav, coupling, matter), 4);
  const SymbolicSystem grav_sys = build_system(grav, 4);
  const SymbolicSystem matter_sys = build_system(matter, 4);
  for (unsigned t = 0; t <= 4; ++t) {
    // the matter block stays determined, so coupling terms never cut g_t
    CHECK(coupled.dim_g(t) == plain.dim_g(t));
    CHECK(plain.dim_g(t) == grav_sys.dim_g(t) + matter_sys.dim_g(t));
  }
  const CohomologyTable table = cohomology_table(coupled, 4);
  CHECK(table.h_vector() == std::vector<std::size_t>{11, 11, 4, 0, 0});
  CHECK(is_involutive_symbolic(coupled, table, 8).involutive);
}

TEST_CASE("radiation characteristic matrix") {
  std::mt19937_64 rng(41);
  const Metric g = minkowski_metric(4);
  PointData pt;
  pt.k = {1, 1, 0, 0};  // null: -1 + 1 = 0
  pt.epsilon = Rational(3, 2);
  for (int it = 0; it < 20; ++it) {
    const auto p = random_covector(rng, 4);
    const RationalMatrix m = radiation_symbol_at(p, pt, g);
    REQUIRE(m.rows() == 4);
    Rational pk = 0;
    for (unsigned i = 0; i < 4; ++i) pk += p[i] * pt.k[i];
    CHECK(determinant(m) * pt.epsilon == pk * pk * pk * pk);
  }
  // p annihilating k is characteristic
  const std::vector<Rational> ann{1, -1, 2, 5};
  CHECK(is_zero(determinant(radiation_symbol_at(ann, pt, g))));

  PointData bad = pt;
  bad.k = {1, 0, 0, 0};  // timelike
  CHECK_THROWS_AS(radiation_symbol_at(ann, bad, g), ShapeError);
  bad = pt;
  bad.epsilon = 0;
  CHECK_THROWS_AS(radiation_symbol_at(ann, bad, g), ShapeError);
}

TEST_CASE("fluid characteristic matrix") {
  std::mt19937_64 rng(43);
  const Metric g = minkowski_metric(4);
  PointData pt;
  pt.U = {1, 0, 0, 0};
  pt.epsilon = 2;
  pt.pressure = Rational(1, 3);
  pt.pressure_derivative = Rational(1, 3);
  const Rational enthalpy = pt.epsilon + pt.pressure;
  for (int it = 0; it < 20; ++it) {
    const auto p = random_covector(rng, 4);
    const RationalMatrix m = fluid_symbol_at(p, pt, g);
    REQUIRE(m.rows() == 4);
    Rational pU = 0;
    for (unsigned i = 0; i < 4; ++i) pU += p[i] * pt.U[i];
    const Rational p_norm = g.pairing(p, p);
    const Rational expect = enthalpy * enthalpy * enthalpy * pU * pU *
                            (pU * pU - pt.pressure_derivative *
                                           (p_norm + pU * pU));
    CHECK(determinant(m) == expect);
  }
  // p = g U is never characteristic: the sound factor degenerates to 1
  const std::vector<Rational> ub{-1, 0, 0, 0};
  const RationalMatrix m = fluid_symbol_at(ub, pt, g);
  CHECK(!is_zero(determinant(m)));
  CHECK(determinant(m) == enthalpy * enthalpy * enthalpy);

  PointData bad = pt;
  bad.U = {2, 0, 0, 0};
  CHECK_THROWS_AS(fluid_symbol_at(ub, bad, g), ShapeError);
  bad = pt;
  bad.pressure = -bad.epsilon;
  CHECK_THROWS_AS(fluid_symbol_at(ub, bad, g), ShapeError);
}

TEST_CASE("gauge-fixing characteristic matrix") {
  std::mt19937_64 rng(47);
  const Metric e = euclidean_metric(4);
  // identity background: M = |p|^2 I + p p^T, always invertible off p = 0
  for (int it = 0; it < 10; ++it) {
    auto p = random_covector(rng, 4);
    p[0] = 1;  // keep p nonzero
    const RationalMatrix m =
        deturck_symbol_at(p, e, e.g, RationalMatrix::identity(4));
    CHECK(rank_of(m) == 4);
    Rational p_norm = 0;
    for (const auto& c : p) p_norm += c * c;
    RationalMatrix expect(4, 4);
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = 0; j < 4; ++j)
        expect(i, j) = p[i] * p[j] + (i == j ? p_norm : Rational(0));
    CHECK(m == expect);
  }

  // degenerate stress makes the matrix singular
  RationalMatrix degenerate(4, 4);
  degenerate(0, 0) = 1;
  const std::vector<Rational> p{1, 2, 0, 1};
  CHECK(rank_of(deturck_symbol_at(p, e, degenerate,
                                  RationalMatrix::identity(4))) < 4);

  // null covector in the Lorentzian case collapses the rank
  const Metric g = minkowski_metric(4);
  const std::vector<Rational> null_p{1, 1, 0, 0};
  CHECK(rank_of(deturck_symbol_at(null_p, g, g.g,
                                  RationalMatrix::identity(4))) <= 1);

  CHECK_THROWS_AS(deturck_symbol_at(p, e, e.g, RationalMatrix(4, 4)),
                  ShapeError);
}
