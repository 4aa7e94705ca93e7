#ifndef INVOLUTE_CARTAN_HPP
#define INVOLUTE_CARTAN_HPP

#include <cstdint>
#include <vector>

#include "involute/cohomology.hpp"
#include "involute/symbolic_system.hpp"

namespace involute {

// Cartan characters of g_k along a generic complete flag, realized by a
// random invertible integer coordinate change.
struct CartanData {
  std::vector<std::size_t> characters;          // s_1..s_n
  std::vector<std::size_t> derived_characters;  // s'_i = s_i + ... + s_n
  RationalMatrix flag;  // the accepted coordinate change
  bool cartan_pass = false;
  std::uint64_t seed = 0;
};

// Two independently seeded generic flags must agree; on disagreement the
// entry bound is doubled and both are redrawn (up to 3 escalations) before
// GenericityFailure is raised.
CartanData cartan_characters(const SymbolicSystem& sys, std::uint64_t seed);

// dim g_{k+1} == s_1 + 2 s_2 + ... + n s_n, exactly.
bool cartan_test(const SymbolicSystem& sys,
                 const std::vector<std::size_t>& characters);

struct InvolutivityVerdict {
  bool involutive = false;        // the Cartan test verdict
  bool cohomology_clean = false;  // corroboration from the computed table
  CartanData cartan;
};

// Symbolic involutivity decided by the Cartan test; the cohomology table is
// checked alongside as corroboration (the two criteria are equivalent).
InvolutivityVerdict is_involutive_symbolic(const SymbolicSystem& sys,
                                           const CohomologyTable& table,
                                           std::uint64_t seed);

// Matrix of the induced substitution on monomials of degree d: the image of
// x^a under x_i -> sum_j M(i,j) y_j, columns in SymBasis(n, d) order.
RationalMatrix sym_power_matrix(const RationalMatrix& m, unsigned d);

}  // namespace involute

#endif
