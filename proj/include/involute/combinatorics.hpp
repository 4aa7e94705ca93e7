#ifndef INVOLUTE_COMBINATORICS_HPP
#define INVOLUTE_COMBINATORICS_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "involute/matrix.hpp"

namespace involute {

// Exponent tuple (a_1,...,a_n) of a monomial x^a.
using MultiIndex = std::vector<unsigned>;

unsigned degree_of(const MultiIndex& a);

// Ordered monomial basis of S^d T* for dim T = n.  Ordering contract:
// lexicographically descending exponent tuples, so (d,0,...,0) first.
class SymBasis {
 public:
  SymBasis(unsigned n, unsigned d);

  unsigned n() const { return n_; }
  unsigned d() const { return d_; }
  std::size_t size() const { return elems_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return elems_[i]; }
  std::size_t index_of(const MultiIndex& a) const;

 private:
  unsigned n_, d_;
  std::vector<MultiIndex> elems_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

// Ordered basis of Lambda^i T*: strictly increasing index tuples,
// lexicographically ascending.
class ExtBasis {
 public:
  ExtBasis(unsigned n, unsigned i);

  unsigned n() const { return n_; }
  unsigned i() const { return i_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<unsigned>& operator[](std::size_t k) const {
    return elems_[k];
  }
  std::size_t index_of(const std::vector<unsigned>& t) const;

  // dx_j wedged onto basis element k; sign 0 when j already occurs.
  struct Wedge {
    int sign;
    std::size_t index;  // in ExtBasis(n, i+1)
  };
  Wedge wedge(unsigned j, std::size_t k, const ExtBasis& next) const;

 private:
  unsigned n_, i_;
  std::vector<std::vector<unsigned>> elems_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

// One term of the comultiplication S^{|a|} -> S^l (x) S^{|a|-l}.
struct CoTerm {
  MultiIndex beta;   // degree l
  MultiIndex gamma;  // degree |a|-l
  Integer coeff;     // prod_i binom(a_i, beta_i)
};

// All splittings a = beta + gamma with |beta| = l.
std::vector<CoTerm> comultiply(const MultiIndex& a, unsigned l);

// Matrix of the Spencer differential
//   delta: S^d (x) W (x) Lambda^i  ->  S^{d-1} (x) W (x) Lambda^{i+1},
//   delta(x^a (x) w (x) omega) = sum_j a_j x^{a-e_j} (x) w (x) dx_j ^ omega.
// Index convention everywhere: ((sym * fiber_dim + w) * ext_dim + e).
RationalMatrix delta_matrix(unsigned n, unsigned d, unsigned i,
                            unsigned fiber_dim);

}  // namespace involute

#endif
