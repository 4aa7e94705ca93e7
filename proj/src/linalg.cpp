#include "involute/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "involute/errors.hpp"

namespace involute {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Gauss-Jordan on a dense local block.  Returns pivot (row, col) pairs in
// column order; the block is left in reduced row echelon form.
std::vector<std::pair<std::size_t, std::size_t>> reduce(
    std::vector<std::vector<Rational>>& a) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  if (a.empty()) return pivots;
  const std::size_t nrows = a.size(), ncols = a[0].size();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < ncols && prow < nrows; ++c) {
    std::size_t sel = nrows;
    for (std::size_t r = prow; r < nrows; ++r)
      if (!is_zero(a[r][c])) {
        sel = r;
        // Unit pivots keep entries small.
        if (a[r][c] == 1 || a[r][c] == -1) break;
      }
    if (sel == nrows) continue;
    std::swap(a[prow], a[sel]);
    const Rational inv_piv = 1 / a[prow][c];
    for (std::size_t j = c; j < ncols; ++j) a[prow][j] *= inv_piv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == prow || is_zero(a[r][c])) continue;
      const Rational f = a[r][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (is_zero(a[prow][j])) continue;
        a[r][j] -= f * a[prow][j];
      }
    }
    pivots.emplace_back(prow, c);
    ++prow;
  }
  return pivots;
}

}  // namespace

RankKernel rank_kernel(const RationalMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  // Node ids: rows are 0..R-1, column c is R+c.
  UnionFind uf(R + C);
  std::vector<bool> col_nonempty(C, false);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c)
      if (!is_zero(m(r, c))) {
        uf.unite(r, R + c);
        col_nonempty[c] = true;
      }

  // Group columns (and the rows linked to them) per component.
  std::vector<std::vector<std::size_t>> comp_cols, comp_rows;
  std::vector<std::size_t> comp_of(R + C, static_cast<std::size_t>(-1));
  std::vector<std::pair<std::size_t, std::vector<Rational>>> kernel_vecs;
  for (std::size_t c = 0; c < C; ++c) {
    if (!col_nonempty[c]) {
      // Zero column: a kernel direction on its own.
      std::vector<Rational> v(C);
      v[c] = 1;
      kernel_vecs.emplace_back(c, std::move(v));
      continue;
    }
    const std::size_t root = uf.find(R + c);
    if (comp_of[root] == static_cast<std::size_t>(-1)) {
      comp_of[root] = comp_cols.size();
      comp_cols.emplace_back();
      comp_rows.emplace_back();
    }
    comp_cols[comp_of[root]].push_back(c);
  }
  for (std::size_t r = 0; r < R; ++r) {
    const std::size_t root = uf.find(r);
    if (comp_of[root] != static_cast<std::size_t>(-1))
      comp_rows[comp_of[root]].push_back(r);
  }

  std::size_t rank = 0;
  for (std::size_t k = 0; k < comp_cols.size(); ++k) {
    const auto& cols = comp_cols[k];
    const auto& rows = comp_rows[k];
    std::vector<std::vector<Rational>> block(
        rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        block[i][j] = m(rows[i], cols[j]);
    const auto pivots = reduce(block);
    rank += pivots.size();
    std::vector<bool> is_pivot_col(cols.size(), false);
    for (const auto& p : pivots) is_pivot_col[p.second] = true;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (is_pivot_col[j]) continue;
      std::vector<Rational> v(C);
      v[cols[j]] = 1;
      for (const auto& p : pivots)
        v[cols[p.second]] = -block[p.first][j];
      kernel_vecs.emplace_back(cols[j], std::move(v));
    }
  }

  std::sort(kernel_vecs.begin(), kernel_vecs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  RankKernel out;
  out.rank = rank;
  out.kernel = RationalMatrix(C, kernel_vecs.size());
  for (std::size_t j = 0; j < kernel_vecs.size(); ++j)
    for (std::size_t i = 0; i < C; ++i)
      out.kernel(i, j) = kernel_vecs[j].second[i];
  return out;
}

std::size_t rank_of(const RationalMatrix& m) { return rank_kernel(m).rank; }

std::size_t rank_fraction_free(const RationalMatrix& m, bool reverse_columns) {
  const std::size_t R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return 0;
  // Clear denominators row by row; row scaling preserves rank.
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (std::size_t r = 0; r < R; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < C; ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den().get_mpz_t());
    for (std::size_t c = 0; c < C; ++c) {
      Rational v = m(r, c) * l;
      a[r][c] = v.get_num();
    }
  }
  std::vector<std::size_t> col_order(C);
  std::iota(col_order.begin(), col_order.end(), std::size_t{0});
  if (reverse_columns) std::reverse(col_order.begin(), col_order.end());

  Integer prev = 1;
  std::size_t prow = 0;
  for (std::size_t ci = 0; ci < C && prow < R; ++ci) {
    const std::size_t c = col_order[ci];
    std::size_t sel = R;
    for (std::size_t r = prow; r < R; ++r)
      if (sgn(a[r][c]) != 0) {
        sel = r;
        break;
      }
    if (sel == R) continue;
    std::swap(a[prow], a[sel]);
    const Integer piv = a[prow][c];
    for (std::size_t r = prow + 1; r < R; ++r) {
      const Integer f = a[r][c];
      for (std::size_t cj = ci + 1; cj < C; ++cj) {
        const std::size_t j = col_order[cj];
        Integer t = a[r][j] * piv - f * a[prow][j];
        mpz_divexact(a[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = piv;
    ++prow;
  }
  return prow;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den().get_mpz_t());
    scale *= Rational(l);
    for (std::size_t c = 0; c < n; ++c) a[r][c] = Rational(m(r, c) * l).get_num();
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t sel = n;
    for (std::size_t r = k; r < n; ++r)
      if (sgn(a[r][k]) != 0) {
        sel = r;
        break;
      }
    if (sel == n) return 0;
    if (sel != k) {
      std::swap(a[k], a[sel]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        Integer t = a[r][c] * a[k][k] - a[r][k] * a[k][c];
        mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1]);
  if (sign < 0) det = -det;
  return det / scale;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    a[r][n + r] = 1;
  }
  const auto pivots = reduce(a);
  if (pivots.size() != n || pivots.back().second >= n)
    throw ShapeError("matrix is singular");
  RationalMatrix out(n, n);
  for (const auto& p : pivots)
    for (std::size_t c = 0; c < n; ++c) out(p.second, c) = a[p.first][n + c];
  return out;
}

RationalMatrix express_in_basis(const RationalMatrix& basis,
                                const RationalMatrix& m) {
  if (basis.rows() != m.rows()) throw ShapeError("express_in_basis row mismatch");
  const std::size_t R = basis.rows(), B = basis.cols(), K = m.cols();
  std::vector<std::vector<Rational>> a(R, std::vector<Rational>(B + K));
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < B; ++c) a[r][c] = basis(r, c);
    for (std::size_t c = 0; c < K; ++c) a[r][B + c] = m(r, c);
  }
  const auto pivots = reduce(a);
  RationalMatrix x(B, K);
  for (const auto& p : pivots) {
    if (p.second >= B)
      throw ConsistencyError("express_in_basis: column outside basis span");
    for (std::size_t c = 0; c < K; ++c) x(p.second, c) = a[p.first][B + c];
  }
  if (pivots.size() != B)
    throw ConsistencyError("express_in_basis: basis is column-rank deficient");
  return x;
}

RationalMatrix annihilator_rows(const RationalMatrix& basis) {
  return rank_kernel(basis.transposed()).kernel.transposed();
}

}  // namespace involute
