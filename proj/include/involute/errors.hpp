#ifndef INVOLUTE_ERRORS_HPP
#define INVOLUTE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace involute {

// Input-side failures: malformed spec files, bad shapes, unknown names.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownGenerator : std::runtime_error {
  explicit UnknownGenerator(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal cross-check failures.  These indicate a bug (or a genuinely
// degenerate random sample), never a user error, and must stay loud.
struct GenericityFailure : std::runtime_error {
  explicit GenericityFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct InterpolationMismatch : std::runtime_error {
  explicit InterpolationMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace involute

#endif
