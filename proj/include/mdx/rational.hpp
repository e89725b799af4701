#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under the
// C++20 rewritten-comparison rules. Exact non-template overloads win overload
// resolution and route through a rational/rational comparison instead.
namespace boost {
#define MDX_RATIONAL_EQ(Int)                                                                            \
  inline bool operator==(const rational<std::int64_t>& a, Int b) { return a == rational<std::int64_t>(b); } \
  inline bool operator==(Int a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) == b; }
MDX_RATIONAL_EQ(int)
MDX_RATIONAL_EQ(long)
MDX_RATIONAL_EQ(long long)
#undef MDX_RATIONAL_EQ
}  // namespace boost

namespace mdx {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", an integer, or a finite decimal such as "0.35" (converted
/// exactly over 10^digits). Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace mdx
