#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scrminer/lattice.hpp"
#include "scrminer/rules.hpp"

namespace scrminer {

/// condset<class>: records containing the condset and labelled `cls`.
struct Ruleitem {
  Condset condset;
  ClassId cls = 0;
  std::uint64_t count = 0;

  friend auto operator<=>(const Ruleitem&, const Ruleitem&) = default;
  friend bool operator==(const Ruleitem&, const Ruleitem&) = default;
};

struct CarResult {
  std::vector<Level> levels;
  /// Frequent ruleitems, canonical (condset, class) order.
  std::vector<Ruleitem> ruleitems;
  /// Condsets with at least one frequent ruleitem, with both class counts.
  std::vector<CountedItemset> frequent_condsets;
  std::uint64_t min_count = 0;
  std::uint64_t n_total = 0;
};

/// CAR-Apriori. The lattice runs over condsets; a condset is carried to the
/// next level when either of its two ruleitems is frequent.
CarResult mine_car_ruleitems(const Dataset& data, const MinSupport& min_support, unsigned threads = 1);

/// Confident rules straight from ruleitems. `condset_counts` must be sorted
/// by condset and cover every ruleitem's condset.
std::vector<ClassificationRule> rules_from_ruleitems(std::span<const Ruleitem> ruleitems,
                                                     std::span<const CountedItemset> condset_counts,
                                                     std::uint64_t n_total, const Ratio& min_confidence);

}  // namespace scrminer
