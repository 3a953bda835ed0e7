#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace scrminer {

/// Exact ratio used for supports, confidences and thresholds.
using Ratio = boost::rational<std::int64_t>;

/// Parses a non-negative decimal ("0.07", "1", "2/3") into an exact ratio.
/// Throws ValidationError on anything else.
Ratio parse_ratio(std::string_view text);

/// ceil(r * n) computed exactly.
std::uint64_t ceil_mul(const Ratio& r, std::uint64_t n);

/// Round-half-up rendering with a fixed number of decimals: 2/3 -> "0.6667".
std::string format_fixed(const Ratio& r, int decimals = 4);

/// Rendering with `digits` significant digits, e.g. 0.064 -> "0.06400".
std::string format_significant(const Ratio& r, int digits = 4);

/// Nearest double; for display and plotting only.
inline double to_double(const Ratio& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace scrminer
