#ifndef INVOLUTE_HILBERT_HPP
#define INVOLUTE_HILBERT_HPP

#include <string>
#include <vector>

#include "involute/cohomology.hpp"
#include "involute/rational.hpp"

namespace involute {

// Exact polynomial in one variable, coefficients ascending by degree.
class Polynomial {
 public:
  Polynomial() : coeffs_{Rational(0)} {}
  explicit Polynomial(std::vector<Rational> coeffs);

  std::size_t degree() const;  // 0 for the zero polynomial
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational at(const Rational& z) const;
  Rational at(long z) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  // "10 + 22 z + 89/6 z^2 + 3 z^3 + 1/6 z^4"; "0" for the zero polynomial.
  std::string str(const std::string& var = "z") const;

 private:
  std::vector<Rational> coeffs_;
};

// binom(z + shift, r) as a polynomial in z.
Polynomial binomial_poly(long shift, unsigned r);

// Unique polynomial of degree < points.size() through (z_i, v_i).
Polynomial interpolate(const std::vector<std::pair<long, Rational>>& points);

// dim g_z for z >= k, three independent routes.
Polynomial dim_poly_from_table(const CohomologyTable& table);
Polynomial dim_poly_from_chars(const std::vector<std::size_t>& s, unsigned n,
                               unsigned k);
Polynomial dim_poly_by_interpolation(const std::vector<std::size_t>& g_dims,
                                     unsigned n, unsigned k);

struct HilbertData {
  unsigned n = 0, k = 0;
  Polynomial dim_poly;    // dim g_z, valid for z >= k
  Polynomial cumulative;  // sum_{i <= z} dim g_i, valid for z >= k
  // Coefficients of dim g_z over binom(z+l-k-1, l-1), l = 0..n (the entry
  // for l = 0 plays no role in the sum and is kept for alignment).
  std::vector<std::size_t> binomial_coeffs;
};

// Runs all three routes, demands exact agreement (InterpolationMismatch
// otherwise), checks every stored dimension, then integrates discretely with
// the anchor sum_{i <= k} dim g_i.
HilbertData hilbert_analysis(const CohomologyTable& table);

}  // namespace involute

#endif
