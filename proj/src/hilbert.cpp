#include "involute/hilbert.hpp"

#include <sstream>

#include "involute/conversions.hpp"
#include "involute/errors.hpp"
#include "involute/linalg.hpp"

namespace involute {

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && is_zero(coeffs_.back())) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
}

std::size_t Polynomial::degree() const { return coeffs_.size() - 1; }

Rational Polynomial::at(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

Rational Polynomial::at(long z) const { return at(Rational(z)); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& s) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (is_zero(c)) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (i == 0 || mag != 1) {
      os << to_string(mag);
      if (i > 0) os << " ";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Polynomial binomial_poly(long shift, unsigned r) {
  Polynomial out(std::vector<Rational>{Rational(1)});
  Rational fact = 1;
  for (unsigned t = 0; t < r; ++t) {
    out = out * Polynomial(std::vector<Rational>{Rational(shift - t),
                                                 Rational(1)});
    fact *= Rational(static_cast<long>(t) + 1);
  }
  return out.scaled(1 / fact);
}

Polynomial interpolate(const std::vector<std::pair<long, Rational>>& points) {
  const std::size_t m = points.size();
  if (m == 0) throw ShapeError("interpolate: no points");
  RationalMatrix vand(m, m), rhs(m, 1);
  for (std::size_t r = 0; r < m; ++r) {
    Rational pw = 1;
    for (std::size_t c = 0; c < m; ++c) {
      vand(r, c) = pw;
      pw *= Rational(points[r].first);
    }
    rhs(r, 0) = points[r].second;
  }
  const RationalMatrix sol = express_in_basis(vand, rhs);
  std::vector<Rational> coeffs(m);
  for (std::size_t i = 0; i < m; ++i) coeffs[i] = sol(i, 0);
  return Polynomial(std::move(coeffs));
}

Polynomial dim_poly_from_table(const CohomologyTable& table) {
  const long n = table.n;
  Polynomial acc;
  for (const auto& [ij, h] : table.dims) {
    if (h == 0) continue;
    const auto [i, j] = ij;
    const Polynomial term =
        binomial_poly(n - static_cast<long>(i) - static_cast<long>(j) - 1,
                      table.n - 1)
            .scaled(Rational(static_cast<long>(h)));
    acc = acc + (j % 2 == 0 ? term : term.scaled(-1));
  }
  return acc;
}

Polynomial dim_poly_from_chars(const std::vector<std::size_t>& s, unsigned n,
                               unsigned k) {
  if (s.size() != static_cast<std::size_t>(n) + 1)
    throw ShapeError("dim_poly_from_chars: need n+1 characters");
  Polynomial acc;
  for (unsigned l = 1; l <= n; ++l) {
    if (s[l] == 0) continue;
    acc = acc + binomial_poly(static_cast<long>(l) - k - 1, l - 1)
                    .scaled(Rational(static_cast<long>(s[l])));
  }
  return acc;
}

Polynomial dim_poly_by_interpolation(const std::vector<std::size_t>& g_dims,
                                     unsigned n, unsigned k) {
  if (g_dims.size() < static_cast<std::size_t>(k) + n)
    throw ShapeError("dim_poly_by_interpolation: not enough levels");
  std::vector<std::pair<long, Rational>> pts;
  for (unsigned z = k; z < k + n; ++z)
    pts.push_back({static_cast<long>(z),
                   Rational(static_cast<long>(g_dims[z]))});
  return interpolate(pts);
}

HilbertData hilbert_analysis(const CohomologyTable& table) {
  const unsigned n = table.n, k = table.k;
  if (table.T + 1 < k + n)
    throw ShapeError("hilbert_analysis: table too shallow");

  const Polynomial via_table = dim_poly_from_table(table);
  const std::vector<std::size_t> s =
      chars_from_cohomology(table.h_vector(), n, k);
  const Polynomial via_chars = dim_poly_from_chars(s, n, k);
  const Polynomial via_interp =
      dim_poly_by_interpolation(table.g_dims, n, k);
  if (!(via_table == via_chars) || !(via_table == via_interp))
    throw InterpolationMismatch("hilbert_analysis: routes disagree: [" +
                                via_table.str() + "] vs [" + via_chars.str() +
                                "] vs [" + via_interp.str() + "]");
  for (unsigned z = k; z <= table.T; ++z)
    if (via_table.at(static_cast<long>(z)) !=
        Rational(static_cast<long>(table.g_dims[z])))
      throw InterpolationMismatch(
          "hilbert_analysis: polynomial misses a stored dimension");

  HilbertData data;
  data.n = n;
  data.k = k;
  data.dim_poly = via_table;
  data.binomial_coeffs = s;

  // Discrete antiderivative: interpolate Q through deg+2 cumulative values
  // anchored at Q(k) = sum of all dimensions up to the equation order.
  Rational anchor = 0;
  for (unsigned z = 0; z <= k; ++z)
    anchor += Rational(static_cast<long>(table.g_dims[z]));
  std::vector<std::pair<long, Rational>> pts;
  Rational running = anchor;
  pts.push_back({static_cast<long>(k), running});
  for (std::size_t z = k + 1; z < k + data.dim_poly.degree() + 3; ++z) {
    running += data.dim_poly.at(static_cast<long>(z));
    pts.push_back({static_cast<long>(z), running});
  }
  data.cumulative = interpolate(pts);
  return data;
}

}  // namespace involute
