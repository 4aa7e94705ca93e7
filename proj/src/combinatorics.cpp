#include "involute/combinatorics.hpp"

#include <numeric>

#include "involute/errors.hpp"

namespace involute {

namespace {

std::uint64_t pack(const std::vector<unsigned>& t) {
  std::uint64_t key = 0;
  for (unsigned v : t) key = (key << 8) | (v & 0xffu);
  return key;
}

void gen_sym(unsigned n, unsigned d, unsigned pos, MultiIndex& cur,
             std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned v = d + 1; v-- > 0;) {
    cur[pos] = v;
    gen_sym(n, d - v, pos + 1, cur, out);
  }
}

void gen_ext(unsigned n, unsigned i, unsigned start,
             std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == i) {
    out.push_back(cur);
    return;
  }
  for (unsigned v = start; v < n; ++v) {
    cur.push_back(v);
    gen_ext(n, i, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

unsigned degree_of(const MultiIndex& a) {
  return std::accumulate(a.begin(), a.end(), 0u);
}

SymBasis::SymBasis(unsigned n, unsigned d) : n_(n), d_(d) {
  if (n < 1) throw ShapeError("SymBasis: n must be >= 1");
  MultiIndex cur(n);
  gen_sym(n, d, 0, cur, elems_);
  for (std::size_t i = 0; i < elems_.size(); ++i) lookup_[pack(elems_[i])] = i;
}

std::size_t SymBasis::index_of(const MultiIndex& a) const {
  auto it = lookup_.find(pack(a));
  if (it == lookup_.end()) throw ShapeError("SymBasis: index_of miss");
  return it->second;
}

ExtBasis::ExtBasis(unsigned n, unsigned i) : n_(n), i_(i) {
  if (i > n) throw ShapeError("ExtBasis: degree exceeds n");
  std::vector<unsigned> cur;
  gen_ext(n, i, 0, cur, elems_);
  for (std::size_t k = 0; k < elems_.size(); ++k) lookup_[pack(elems_[k])] = k;
}

std::size_t ExtBasis::index_of(const std::vector<unsigned>& t) const {
  auto it = lookup_.find(pack(t));
  if (it == lookup_.end()) throw ShapeError("ExtBasis: index_of miss");
  return it->second;
}

ExtBasis::Wedge ExtBasis::wedge(unsigned j, std::size_t k,
                                const ExtBasis& next) const {
  const auto& t = elems_[k];
  std::vector<unsigned> merged;
  merged.reserve(t.size() + 1);
  int before = 0;
  bool placed = false;
  for (unsigned v : t) {
    if (v == j) return {0, 0};
    if (v < j) {
      ++before;
      merged.push_back(v);
    } else {
      if (!placed) {
        merged.push_back(j);
        placed = true;
      }
      merged.push_back(v);
    }
  }
  if (!placed) merged.push_back(j);
  return {(before % 2 == 0) ? 1 : -1, next.index_of(merged)};
}

std::vector<CoTerm> comultiply(const MultiIndex& a, unsigned l) {
  const unsigned deg = degree_of(a);
  if (l > deg) throw ShapeError("comultiply: l exceeds |a|");
  std::vector<CoTerm> out;
  const unsigned n = static_cast<unsigned>(a.size());
  MultiIndex beta(n);
  // Enumerate beta <= a componentwise with |beta| = l.
  std::vector<unsigned> stack;
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos == n) {
      if (left != 0) return;
      CoTerm t;
      t.beta = beta;
      t.gamma.resize(n);
      t.coeff = 1;
      for (unsigned i = 0; i < n; ++i) {
        t.gamma[i] = a[i] - beta[i];
        t.coeff *= binomial(a[i], beta[i]);
      }
      out.push_back(std::move(t));
      return;
    }
    const unsigned top = std::min(a[pos], left);
    for (unsigned v = top + 1; v-- > 0;) {
      beta[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, l);
  return out;
}

RationalMatrix delta_matrix(unsigned n, unsigned d, unsigned i,
                            unsigned fiber_dim) {
  if (d < 1) throw ShapeError("delta_matrix: need d >= 1");
  if (i >= n) throw ShapeError("delta_matrix: target exterior degree exceeds n");
  const SymBasis src_sym(n, d), dst_sym(n, d - 1);
  const ExtBasis src_ext(n, i), dst_ext(n, i + 1);
  RationalMatrix m(dst_sym.size() * fiber_dim * dst_ext.size(),
                   src_sym.size() * fiber_dim * src_ext.size());
  for (std::size_t s = 0; s < src_sym.size(); ++s) {
    const MultiIndex& a = src_sym[s];
    for (unsigned j = 0; j < n; ++j) {
      if (a[j] == 0) continue;
      MultiIndex b = a;
      --b[j];
      const std::size_t ds = dst_sym.index_of(b);
      for (std::size_t e = 0; e < src_ext.size(); ++e) {
        const auto w = src_ext.wedge(j, e, dst_ext);
        if (w.sign == 0) continue;
        for (unsigned f = 0; f < fiber_dim; ++f) {
          const std::size_t col = (s * fiber_dim + f) * src_ext.size() + e;
          const std::size_t row = (ds * fiber_dim + f) * dst_ext.size() + w.index;
          m(row, col) += static_cast<int>(a[j]) * w.sign;
        }
      }
    }
  }
  return m;
}

}  // namespace involute
