#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monorel {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, so equality of values is equality of representations.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// Raised for malformed textual input (rational strings, problem files, points).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts "p", "-p", "p/q". Denominator must be nonzero.
Scalar parse_scalar(std::string_view text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Scalar& value);

inline int sign(const Scalar& value) { return sgn(value); }

inline double to_double(const Scalar& value) { return value.get_d(); }

}  // namespace monorel
