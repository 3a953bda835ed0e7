#include "scrminer/apriori.hpp"

#include <algorithm>
#include <unordered_map>

#include "scrminer/error.hpp"

namespace scrminer {

AprioriResult mine_frequent_itemsets(const Dataset& data, const MinSupport& min_support, unsigned threads) {
  AprioriResult result;
  result.n_total = data.size();
  result.min_count = min_support.count_threshold(data.size());

  const auto min_count = result.min_count;
  result.levels = run_levelwise(
      data, initial_candidates(data.schema(), /*include_class=*/true),
      [min_count](const SupportTable& level) {
        std::vector<bool> keep(level.size());
        for (std::size_t i = 0; i < level.size(); ++i) keep[i] = level[i].total() >= min_count;
        return keep;
      },
      threads);

  for (const auto& level : result.levels) {
    for (auto i : level.kept) {
      result.itemsets.push_back({level.candidates[i].items, level.candidates[i].total()});
    }
  }
  std::sort(result.itemsets.begin(), result.itemsets.end(),
            [](const FrequentItemset& a, const FrequentItemset& b) { return a.items < b.items; });
  return result;
}

std::vector<AssociationRule> generate_rules(std::span<const FrequentItemset> frequent, std::uint64_t n_total,
                                            const Ratio& min_confidence) {
  std::unordered_map<Itemset, std::uint64_t, ItemsetHash> support;
  support.reserve(frequent.size());
  for (const auto& f : frequent) support.emplace(f.items, f.count);

  std::vector<AssociationRule> rules;
  for (const auto& f : frequent) {
    const auto p = f.items.size();
    if (p < 2) continue;
    if (p >= 63) throw ValidationError("itemset too large for rule enumeration");
    const std::uint64_t full = (std::uint64_t{1} << p) - 1;
    // Each mask selects the consequent; 0 and full would leave a side empty.
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      std::vector<Item> lhs;
      std::vector<Item> rhs;
      for (std::size_t i = 0; i < p; ++i) ((mask >> i) & 1 ? rhs : lhs).push_back(f.items[i]);
      Itemset antecedent(std::move(lhs));
      const auto it = support.find(antecedent);
      if (it == support.end()) throw ValidationError("frequent itemset collection is not downward closed");
      AssociationRule rule{std::move(antecedent), Itemset(std::move(rhs)), f.count, it->second, n_total};
      if (rule.confidence() >= min_confidence) rules.push_back(std::move(rule));
    }
  }
  std::sort(rules.begin(), rules.end());
  return rules;
}

std::vector<ClassificationRule> classification_rules_via_postfilter(std::span<const AssociationRule> rules,
                                                                    const AttributeSchema& schema) {
  std::vector<ClassificationRule> out;
  for (const auto& r : rules) {
    if (r.consequent.size() != 1 || r.consequent[0].attr != schema.class_index()) continue;
    ClassificationRule cr;
    cr.condset = r.antecedent;
    cr.cls = static_cast<ClassId>(r.consequent[0].value);
    cr.counts[cr.cls] = static_cast<std::uint32_t>(r.count);
    cr.counts[other_class(cr.cls)] = static_cast<std::uint32_t>(r.antecedent_count - r.count);
    cr.n_total = r.n_total;
    out.push_back(std::move(cr));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace scrminer
