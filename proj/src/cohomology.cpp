#include "involute/cohomology.hpp"

#include "involute/errors.hpp"
#include "involute/linalg.hpp"

namespace involute {

std::size_t CohomologyTable::h(unsigned i, unsigned j) const {
  auto it = dims.find({i, j});
  return it == dims.end() ? 0 : it->second;
}

std::vector<std::size_t> CohomologyTable::h_vector() const {
  std::vector<std::size_t> out(n + 1);
  out[0] = h(0, 0);
  for (unsigned j = 1; j <= n; ++j) out[j] = (k >= 1) ? h(k - 1, j) : 0;
  return out;
}

bool CohomologyTable::only_row_k_minus_1() const {
  for (const auto& [ij, d] : dims) {
    if (d == 0) continue;
    const auto [i, j] = ij;
    if (i + j == 0) continue;
    if (k == 0 || i != k - 1) return false;
  }
  return true;
}

long CohomologyTable::euler_characteristic_direct(unsigned t) const {
  long acc = 0;
  for (unsigned i = 0; i <= std::min(n, t); ++i) {
    const long term = static_cast<long>(g_dims[t - i]) * binomial_l(n, i);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

long CohomologyTable::euler_characteristic_table(unsigned t) const {
  long acc = 0;
  for (unsigned i = 0; i <= std::min(n, t); ++i) {
    const long term = static_cast<long>(h(t - i, i));
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

CohomologyTable cohomology_table(const SymbolicSystem& sys, unsigned T) {
  if (T > sys.truncation)
    throw ShapeError("cohomology_table: T beyond system truncation");
  CohomologyTable table;
  table.n = sys.n();
  table.k = sys.order();
  table.T = T;
  for (unsigned t = 0; t <= T; ++t) table.g_dims.push_back(sys.dim_g(t));

  // rank of delta out of g_a (x) Lambda^i, for every slot in the rectangle.
  for (unsigned a = 1; a <= T; ++a)
    for (unsigned i = 0; a + i <= T && i < table.n; ++i)
      table.delta_ranks[{a, i}] = rank_of(restricted_delta_image(sys, a, i));

  auto rank_at = [&table](unsigned a, unsigned i) -> std::size_t {
    auto it = table.delta_ranks.find({a, i});
    return it == table.delta_ranks.end() ? 0 : it->second;
  };

  for (unsigned a = 0; a <= T; ++a)
    for (unsigned j = 0; a + j <= T && j <= table.n; ++j) {
      const std::size_t slot =
          sys.dim_g(a) * static_cast<std::size_t>(binomial_l(table.n, j));
      const std::size_t out = (a >= 1 && j < table.n) ? rank_at(a, j) : 0;
      const std::size_t in = (j >= 1) ? rank_at(a + 1, j - 1) : 0;
      if (slot < out + in)
        throw ConsistencyError("cohomology_table: negative dimension");
      table.dims[{a, j}] = slot - out - in;
    }
  return table;
}

}  // namespace involute
