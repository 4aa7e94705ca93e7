#ifndef INVOLUTE_CONVERSIONS_HPP
#define INVOLUTE_CONVERSIONS_HPP

#include <cstddef>
#include <vector>

namespace involute {

// Closed-form translations between the Cartan characters (s_0, ..., s_n) of
// an order-k system and the reduced cohomology vector (h_0, ..., h_n) with
// h_0 = dim H^{0,0} and h_j = dim H^{k-1,j}.  Both directions are exact and
// mutually inverse; inputs must be nonnegative and of length n+1.

std::vector<std::size_t> chars_from_cohomology(
    const std::vector<std::size_t>& h, unsigned n, unsigned k);

std::vector<std::size_t> cohomology_from_chars(
    const std::vector<std::size_t>& s, unsigned n, unsigned k);

}  // namespace involute

#endif
