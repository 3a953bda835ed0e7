#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "scrminer/dataset.hpp"
#include "scrminer/lattice.hpp"
#include "scrminer/rational.hpp"

namespace scrminer {

/// Minimum support given either as a ratio of all records or as an
/// absolute support number.
class MinSupport {
 public:
  /// ratio in (0, 1]
  static MinSupport ratio(Ratio r);
  /// count >= 1
  static MinSupport count(std::uint64_t c);

  bool is_ratio() const { return is_ratio_; }
  const Ratio& as_ratio() const { return ratio_; }

  /// Smallest support number that satisfies the threshold on `n_total`
  /// records: ceil(ratio * n_total), never below 1.
  std::uint64_t count_threshold(std::uint64_t n_total) const;

  std::string to_string() const;

 private:
  bool is_ratio_ = false;
  Ratio ratio_{1};
  std::uint64_t count_ = 1;
};

struct MiningParams {
  MinSupport min_support = MinSupport::count(1);
  Ratio min_confidence{1, 2};  // alpha, in (0, 1]

  /// Throws ValidationError when min_confidence is outside (0, 1].
  void validate() const;
};

/// condset -> class. Carries the condset's per-class counts so support and
/// confidence stay exact.
struct ClassificationRule {
  Condset condset;
  ClassId cls = 0;
  ClassCounts counts{0, 0};
  std::uint64_t n_total = 0;

  std::uint64_t count() const { return counts[cls]; }
  std::uint64_t condset_count() const { return total(counts); }
  /// Ruleitem support: count / n_total.
  Ratio support() const;
  /// count / condset count.
  Ratio confidence() const;

  friend auto operator<=>(const ClassificationRule&, const ClassificationRule&) = default;
  friend bool operator==(const ClassificationRule&, const ClassificationRule&) = default;
};

inline Ratio make_ratio(std::uint64_t num, std::uint64_t den) {
  return Ratio(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace scrminer
