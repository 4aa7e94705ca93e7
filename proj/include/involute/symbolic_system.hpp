#ifndef INVOLUTE_SYMBOLIC_SYSTEM_HPP
#define INVOLUTE_SYMBOLIC_SYSTEM_HPP

#include <string>
#include <vector>

#include "involute/symbol_map.hpp"

namespace involute {

// Graded family g = (+) g_t truncated at a working order.  Levels below the
// equation order are the full spaces S^t (x) N and stay implicit (no stored
// basis); levels t >= k hold a kernel basis of the prolonged symbol.
class SymbolicSystem {
 public:
  struct Level {
    std::size_t dim = 0;
    bool implicit = true;
    RationalMatrix basis;  // columns span g_t inside S^t (x) N, when explicit
  };

  SymbolMap defining;
  unsigned truncation = 0;
  std::vector<Level> levels;  // index t = 0..truncation

  // Report metadata; empty for ad-hoc systems.
  std::string name;
  std::string obstruction_note;

  unsigned n() const { return defining.n; }
  unsigned order() const { return defining.order; }
  unsigned fiber_dim() const { return defining.source_fiber_dim; }

  std::size_t dim_g(unsigned t) const;
  const RationalMatrix& basis(unsigned t) const;
};

SymbolicSystem build_system(const SymbolMap& s, unsigned truncation);

// Independent route for g_t: (g_k (x) S^{t-k}) intersect (S^t (x) N),
// realized as the kernel of a stacked annihilator constraint system.
struct IntersectionProlongation {
  std::size_t dim = 0;
  RationalMatrix basis;
};
IntersectionProlongation prolong_by_intersection(const SymbolicSystem& sys,
                                                 unsigned t);

// Spencer chain at total degree t, restricted to the stored kernel bases.
// maps[i] sends coordinates of g_{t-i} (x) Lambda^i to coordinates of
// g_{t-i-1} (x) Lambda^{i+1}; implicit levels use full-space coordinates.
// Coordinate convention: (basis_column * ext_dim + ext_index).
struct SpencerComplexSlice {
  unsigned t = 0;
  std::vector<std::size_t> slot_dims;
  std::vector<RationalMatrix> maps;
};
SpencerComplexSlice spencer_slice(const SymbolicSystem& sys, unsigned t);

// Ambient image of delta restricted to g_a (x) Lambda^i (target in full
// S^{a-1} (x) N (x) Lambda^{i+1} coordinates).  Rank equals the rank of the
// corresponding restricted Spencer map.
RationalMatrix restricted_delta_image(const SymbolicSystem& sys, unsigned a,
                                      unsigned i);

}  // namespace involute

#endif
