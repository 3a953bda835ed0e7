#include "scrminer/car.hpp"

#include <algorithm>

#include "scrminer/error.hpp"

namespace scrminer {

CarResult mine_car_ruleitems(const Dataset& data, const MinSupport& min_support, unsigned threads) {
  CarResult result;
  result.n_total = data.size();
  result.min_count = min_support.count_threshold(data.size());

  const auto min_count = result.min_count;
  result.levels = run_levelwise(
      data, initial_candidates(data.schema()),
      [min_count](const SupportTable& level) {
        std::vector<bool> keep(level.size());
        for (std::size_t i = 0; i < level.size(); ++i) {
          keep[i] = level[i].counts[0] >= min_count || level[i].counts[1] >= min_count;
        }
        return keep;
      },
      threads);

  for (const auto& level : result.levels) {
    for (auto i : level.kept) {
      const auto& c = level.candidates[i];
      result.frequent_condsets.push_back(c);
      for (ClassId k = 0; k < 2; ++k) {
        if (c.counts[k] >= min_count) result.ruleitems.push_back({c.items, k, c.counts[k]});
      }
    }
  }
  std::sort(result.frequent_condsets.begin(), result.frequent_condsets.end(),
            [](const CountedItemset& a, const CountedItemset& b) { return a.items < b.items; });
  std::sort(result.ruleitems.begin(), result.ruleitems.end());
  return result;
}

std::vector<ClassificationRule> rules_from_ruleitems(std::span<const Ruleitem> ruleitems,
                                                     std::span<const CountedItemset> condset_counts,
                                                     std::uint64_t n_total, const Ratio& min_confidence) {
  std::vector<ClassificationRule> rules;
  for (const auto& ri : ruleitems) {
    const auto it = std::lower_bound(condset_counts.begin(), condset_counts.end(), ri.condset,
                                     [](const CountedItemset& c, const Itemset& key) { return c.items < key; });
    if (it == condset_counts.end() || it->items != ri.condset) {
      throw ValidationError("no condset support for a ruleitem");
    }
    ClassificationRule rule{ri.condset, ri.cls, it->counts, n_total};
    if (rule.count() != ri.count) throw ValidationError("ruleitem count disagrees with condset counts");
    if (rule.confidence() >= min_confidence) rules.push_back(std::move(rule));
  }
  std::sort(rules.begin(), rules.end());
  return rules;
}

}  // namespace scrminer
