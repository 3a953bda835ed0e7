#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scrminer/lattice.hpp"
#include "scrminer/rules.hpp"

namespace scrminer {

struct FrequentItemset {
  Itemset items;
  std::uint64_t count = 0;  // whole-dataset support number

  friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

struct AprioriResult {
  std::vector<FrequentItemset> itemsets;  // canonical order
  std::vector<Level> levels;
  std::uint64_t min_count = 0;
  std::uint64_t n_total = 0;
};

/// Classic Apriori over every attribute, the class attribute included, so
/// that class-consequent rules can be derived afterwards.
AprioriResult mine_frequent_itemsets(const Dataset& data, const MinSupport& min_support,
                                     unsigned threads = 1);

/// X -> Y over itemsets that may contain class items.
struct AssociationRule {
  Itemset antecedent;
  Itemset consequent;
  std::uint64_t count = 0;             // support number of X u Y
  std::uint64_t antecedent_count = 0;  // support number of X
  std::uint64_t n_total = 0;

  Ratio support() const { return n_total == 0 ? Ratio(0) : make_ratio(count, n_total); }
  Ratio confidence() const { return make_ratio(count, antecedent_count); }

  friend auto operator<=>(const AssociationRule&, const AssociationRule&) = default;
  friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

/// Every rule (c - b) -> b over frequent c and non-empty proper subsets b
/// with confidence >= min_confidence. `frequent` must be downward closed.
std::vector<AssociationRule> generate_rules(std::span<const FrequentItemset> frequent, std::uint64_t n_total,
                                            const Ratio& min_confidence);

/// Keeps rules whose consequent is exactly one class item.
std::vector<ClassificationRule> classification_rules_via_postfilter(std::span<const AssociationRule> rules,
                                                                    const AttributeSchema& schema);

}  // namespace scrminer
