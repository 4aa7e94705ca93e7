#include "involute/conversions.hpp"

#include "involute/errors.hpp"
#include "involute/rational.hpp"

namespace involute {

namespace {

std::size_t as_size(const Integer& v, const char* what) {
  if (v < 0) throw ConsistencyError(std::string(what) + ": negative value");
  if (!v.fits_ulong_p()) throw ShapeError(std::string(what) + ": overflow");
  return static_cast<std::size_t>(v.get_ui());
}

void check_input(const std::vector<std::size_t>& v, unsigned n,
                 const char* what) {
  if (v.size() != static_cast<std::size_t>(n) + 1)
    throw ShapeError(std::string(what) + ": vector must have n+1 entries");
}

}  // namespace

std::vector<std::size_t> chars_from_cohomology(
    const std::vector<std::size_t>& h, unsigned n, unsigned k) {
  check_input(h, n, "chars_from_cohomology");
  if (k == 0) throw ShapeError("chars_from_cohomology: order must be >= 1");
  std::vector<std::size_t> s(n + 1);
  s[0] = h[0];
  for (unsigned l = 1; l <= n; ++l) {
    Integer acc = binomial(n + k - l - 1, k - 1) * Integer(h[0]);
    for (unsigned i = n - l + 1; i <= n; ++i) {
      const Integer term = binomial(i - 1, n - l) * Integer(h[i]);
      acc += ((n - l - i) % 2 == 0) ? term : -term;
    }
    s[l] = as_size(acc, "chars_from_cohomology");
  }
  return s;
}

std::vector<std::size_t> cohomology_from_chars(
    const std::vector<std::size_t>& s, unsigned n, unsigned k) {
  check_input(s, n, "cohomology_from_chars");
  if (k == 0) throw ShapeError("cohomology_from_chars: order must be >= 1");
  std::vector<std::size_t> h(n + 1);
  h[0] = s[0];
  for (unsigned l = 1; l <= n; ++l) {
    Integer acc = 0;
    for (unsigned j = 1; j <= n; ++j) {
      Integer inner = 0;
      for (unsigned i = 0; i < l; ++i) {
        const Integer term =
            binomial(n, i) * binomial(static_cast<long>(l) + j - i - 2,
                                      static_cast<long>(j) - 1);
        inner += (i % 2 == 0) ? term : -term;
      }
      acc += Integer(s[j]) * inner;
    }
    Integer tail = 0;
    for (unsigned i = l; i <= n; ++i) {
      const Integer term =
          binomial(n, i) * binomial(static_cast<long>(k) + l + n - i - 2,
                                    static_cast<long>(n) - 1);
      tail += (i % 2 == 0) ? term : -term;
    }
    acc += Integer(s[0]) * tail;
    if (l % 2 != 0) acc = -acc;
    h[l] = as_size(acc, "cohomology_from_chars");
  }
  return h;
}

}  // namespace involute
