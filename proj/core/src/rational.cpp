#include "scrminer/rational.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "scrminer/error.hpp"

namespace scrminer {

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  if (digits.empty() || digits.front() < '0' || digits.front() > '9') {
    throw ValidationError("not a non-negative number: '" + std::string(whole) + "'");
  }
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ValidationError("not a non-negative number: '" + std::string(whole) + "'");
  }
  return value;
}

std::int64_t pow10(int exponent) {
  std::int64_t p = 1;
  for (int i = 0; i < exponent; ++i) p *= 10;
  return p;
}

}  // namespace

Ratio parse_ratio(std::string_view text) {
  if (text.empty()) throw ValidationError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_digits(text.substr(0, slash), text);
    const auto den = parse_digits(text.substr(slash + 1), text);
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Ratio(num, den);
  }

  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Ratio(parse_digits(text, text));

  const auto int_part = text.substr(0, dot);
  const auto frac_part = text.substr(dot + 1);
  if ((int_part.empty() && frac_part.empty()) || frac_part.size() > 15) {
    throw ValidationError("not a non-negative number: '" + std::string(text) + "'");
  }
  const std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
  const std::int64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
  const std::int64_t scale = pow10(static_cast<int>(frac_part.size()));
  if (whole > std::numeric_limits<std::int64_t>::max() / scale - 1) {
    throw ValidationError("number out of range: '" + std::string(text) + "'");
  }
  return Ratio(whole * scale + frac, scale);
}

std::uint64_t ceil_mul(const Ratio& r, std::uint64_t n) {
  const auto num = static_cast<__int128>(r.numerator()) * static_cast<__int128>(n);
  const auto den = static_cast<__int128>(r.denominator());
  auto q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return static_cast<std::uint64_t>(q);
}

std::string format_fixed(const Ratio& r, int decimals) {
  const bool negative = r < Ratio(0);
  const auto num = static_cast<__int128>(negative ? -r.numerator() : r.numerator());
  const auto den = static_cast<__int128>(r.denominator());
  const auto scale = static_cast<__int128>(pow10(decimals));
  const __int128 scaled = (num * scale * 2 + den) / (den * 2);

  const auto whole = static_cast<std::int64_t>(scaled / scale);
  auto frac = static_cast<std::int64_t>(scaled % scale);

  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string(whole);
  if (decimals > 0) {
    std::string digits(static_cast<std::size_t>(decimals), '0');
    for (int i = decimals - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
      frac /= 10;
    }
    out += '.';
    out += digits;
  }
  return out;
}

std::string format_significant(const Ratio& r, int digits) {
  if (r == Ratio(0)) return format_fixed(r, digits - 1);
  const auto num = static_cast<__int128>(r.numerator() < 0 ? -r.numerator() : r.numerator());
  const auto den = static_cast<__int128>(r.denominator());
  // Position of the leading digit: 10^lead <= num/den < 10^(lead+1).
  int lead = 0;
  __int128 scale = 10;
  while (num >= scale * den) {
    ++lead;
    scale *= 10;
  }
  scale = 1;
  while (lead > -18 && num * scale < den) {
    --lead;
    scale *= 10;
  }
  const int decimals = std::max(0, digits - 1 - lead);
  return format_fixed(r, decimals);
}

}  // namespace scrminer
