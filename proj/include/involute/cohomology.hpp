#ifndef INVOLUTE_COHOMOLOGY_HPP
#define INVOLUTE_COHOMOLOGY_HPP

#include <map>
#include <utility>
#include <vector>

#include "involute/symbolic_system.hpp"

namespace involute {

// dim H^{i,j} for the rectangle i + j <= T, together with the ranks of the
// restricted Spencer differentials that produced them.
class CohomologyTable {
 public:
  unsigned n = 0, k = 0, T = 0;
  // (i, j) -> dim H^{i,j}; every in-range bidegree is present.
  std::map<std::pair<unsigned, unsigned>, std::size_t> dims;
  // (a, i) -> rank of delta: g_a (x) Lambda^i -> g_{a-1} (x) Lambda^{i+1}.
  std::map<std::pair<unsigned, unsigned>, std::size_t> delta_ranks;
  std::vector<std::size_t> g_dims;  // dim g_t for t = 0..T

  std::size_t h(unsigned i, unsigned j) const;

  // (h_0, ..., h_n) with h_0 = dim H^{0,0} and h_j = dim H^{k-1,j}.
  std::vector<std::size_t> h_vector() const;

  // True when every nonzero entry with i+j > 0 sits on the row i = k-1.
  bool only_row_k_minus_1() const;

  // Alternating sums over the slice of total degree t; the two must agree.
  long euler_characteristic_direct(unsigned t) const;
  long euler_characteristic_table(unsigned t) const;
};

CohomologyTable cohomology_table(const SymbolicSystem& sys, unsigned T);

}  // namespace involute

#endif
