#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kkb {

/// Exact face counts and binomials. Always nonnegative; every public entry
/// point that takes a Count rejects negative values.
using Count = boost::multiprecision::cpp_int;

/// Precondition violation carrying the name of the violated condition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An explicit construction would exceed the configured oracle scale.
class LimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline void require(bool condition, const char* what) {
    if (!condition) throw PreconditionError(what);
}

double to_double(const Count& c);

/// Natural log of a positive Count, accurate even past the double range.
double log_count(const Count& c);

/// Throws std::overflow_error when c does not fit.
std::int64_t to_int64(const Count& c);

/// Parses a decimal literal or a sum/difference of literals and C(n,k) terms,
/// e.g. "C(50,10)+C(49,9)+1". Throws PreconditionError on malformed input or a
/// negative result.
Count parse_count(std::string_view text);

}  // namespace kkb
