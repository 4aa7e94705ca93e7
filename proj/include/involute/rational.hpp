#ifndef INVOLUTE_RATIONAL_HPP
#define INVOLUTE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "involute/errors.hpp"

namespace involute {

// Exact rational coefficient field.  mpq_class keeps values in lowest terms
// with positive denominator, which is exactly the storage invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Parses "num" or "num/den".  Rejects zero denominators and junk.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw ParseError("bad rational literal '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Canonical form: plain integer when den==1, otherwise "num/den".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

inline long binomial_l(long a, long b) {
  return static_cast<long>(binomial(a, b).get_si());
}

}  // namespace involute

#endif
