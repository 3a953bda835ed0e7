#include "scrminer/rules.hpp"

#include <algorithm>

#include "scrminer/error.hpp"

namespace scrminer {

MinSupport MinSupport::ratio(Ratio r) {
  if (r <= Ratio(0) || r > Ratio(1)) throw ValidationError("minimum support ratio must be in (0, 1], got " + format_fixed(r, 6));
  MinSupport s;
  s.is_ratio_ = true;
  s.ratio_ = r;
  return s;
}

MinSupport MinSupport::count(std::uint64_t c) {
  if (c < 1) throw ValidationError("minimum support count must be at least 1");
  MinSupport s;
  s.count_ = c;
  return s;
}

std::uint64_t MinSupport::count_threshold(std::uint64_t n_total) const {
  if (!is_ratio_) return count_;
  return std::max<std::uint64_t>(1, ceil_mul(ratio_, n_total));
}

std::string MinSupport::to_string() const {
  if (is_ratio_) return format_significant(ratio_, 4);
  return std::to_string(count_) + " records";
}

void MiningParams::validate() const {
  if (min_confidence <= Ratio(0) || min_confidence > Ratio(1)) {
    throw ValidationError("minimum confidence must be in (0, 1], got " + format_fixed(min_confidence, 6));
  }
}

Ratio ClassificationRule::support() const {
  return n_total == 0 ? Ratio(0) : make_ratio(count(), n_total);
}

Ratio ClassificationRule::confidence() const {
  const auto den = condset_count();
  return den == 0 ? Ratio(0) : make_ratio(count(), den);
}

}  // namespace scrminer
