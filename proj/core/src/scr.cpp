#include "scrminer/scr.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace scrminer {

namespace {

constexpr ValueId kAnyValue = std::numeric_limits<ValueId>::max();

// Ruleitems can only be contrast pairs of each other when they share this
// key: the attribute list with invariant values kept and varying values
// blanked out.
std::vector<Item> contrast_group_key(const Condset& c, const AttributeSchema& schema) {
  std::vector<Item> key(c.begin(), c.end());
  for (auto& item : key) {
    if (schema.is_varying(item.attr)) item.value = kAnyValue;
  }
  return key;
}

bool all_invariant(const Condset& c, const AttributeSchema& schema) {
  return std::all_of(c.begin(), c.end(), [&](const Item& i) { return schema.is_invariant(i.attr); });
}

std::vector<AttrIndex> attribute_list(const Condset& c) {
  std::vector<AttrIndex> attrs;
  attrs.reserve(c.size());
  for (const auto& i : c) attrs.push_back(i.attr);
  return attrs;
}

}  // namespace

bool is_contrast_pair(const Condset& a, const Condset& b, const AttributeSchema& schema) {
  if (!a.same_attributes(b)) return false;
  bool varying_differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto attr = a[i].attr;
    const bool equal = a[i].value == b[i].value;
    if (schema.is_invariant(attr) && !equal) return false;
    if (schema.is_varying(attr) && !equal) varying_differs = true;
  }
  return varying_differs;
}

std::vector<FilterDecision> choose_frequent_and_contrast(std::span<const ScrRuleitem> level,
                                                         const AttributeSchema& schema,
                                                         const ClassThresholds& thresholds) {
  std::vector<ScrRuleitem> items(level.begin(), level.end());
  std::sort(items.begin(), items.end(),
            [](const ScrRuleitem& a, const ScrRuleitem& b) { return a.items < b.items; });
  items.erase(std::unique(items.begin(), items.end(),
                          [](const ScrRuleitem& a, const ScrRuleitem& b) { return a.items == b.items; }),
              items.end());

  auto frequent_in = [&](const ScrRuleitem& r, ClassId k) { return r.counts[k] >= thresholds[k]; };

  // Per group: how many members are frequent in each class.
  std::map<std::vector<Item>, std::array<std::size_t, 2>> frequent_members;
  for (const auto& r : items) {
    auto& n = frequent_members[contrast_group_key(r.items, schema)];
    for (ClassId k = 0; k < 2; ++k) n[k] += frequent_in(r, k) ? 1 : 0;
  }

  std::vector<FilterDecision> decisions;
  decisions.reserve(items.size());
  for (auto& r : items) {
    const bool f0 = frequent_in(r, 0);
    const bool f1 = frequent_in(r, 1);
    int branch;
    if (f0 && f1) {
      branch = 1;
    } else if (!f0 && !f1) {
      branch = 2;
    } else if (all_invariant(r.items, schema)) {
      branch = 3;
    } else {
      // Every other group member differs in some varying value, so it is a
      // contrast pair. The member itself is not frequent in the opposite
      // class and is therefore not among the counted ones.
      const ClassId opposite = f0 ? 1 : 0;
      const auto& n = frequent_members.at(contrast_group_key(r.items, schema));
      branch = n[opposite] > 0 ? 5 : 4;
    }
    decisions.push_back({std::move(r), branch});
  }
  return decisions;
}

ScrRun mine_scr_ruleitems(const Dataset& data, const MinSupport& min_support, unsigned threads) {
  ScrRun run;
  run.n_total = data.size();
  run.min_count = min_support.count_threshold(data.size());

  const ClassThresholds thresholds{run.min_count, run.min_count};
  const auto& schema = data.schema();
  auto& decisions = run.decisions;

  run.levels = run_levelwise(
      data, initial_candidates(schema),
      [&](const SupportTable& level) {
        auto decided = choose_frequent_and_contrast(level, schema, thresholds);
        // Decisions come back in canonical order, as does the level itself.
        std::vector<bool> keep(level.size());
        for (std::size_t i = 0; i < level.size(); ++i) keep[i] = decided[i].kept();
        decisions.push_back(std::move(decided));
        return keep;
      },
      threads);

  for (const auto& level : run.levels) {
    for (auto i : level.kept) run.kept.push_back(level.candidates[i]);
  }
  std::sort(run.kept.begin(), run.kept.end(),
            [](const ScrRuleitem& a, const ScrRuleitem& b) { return a.items < b.items; });
  return run;
}

ContrastCheck check_contrast_rules(const ClassificationRule& r1, const ClassificationRule& r2,
                                   const AttributeSchema& schema, const Ratio& alpha) {
  ContrastCheck check;
  check.confident = r1.confidence() >= alpha && r2.confidence() >= alpha;
  check.different_classes = r1.cls != r2.cls;
  check.same_attributes = r1.condset.same_attributes(r2.condset);

  const auto& a = r1.condset;
  const auto& b = r2.condset;
  bool any_varying = false;
  bool any_invariant = false;
  bool shared_varying_value = false;
  bool differing_varying_value = false;
  bool invariants_equal = true;
  for (const auto& item : a) {
    const auto other = b.value_of(item.attr);
    if (schema.is_invariant(item.attr)) {
      any_invariant = true;
      if (other != item.value) invariants_equal = false;
    } else if (schema.is_varying(item.attr)) {
      any_varying = true;
      if (other == item.value) shared_varying_value = true;
      if (other && *other != item.value) differing_varying_value = true;
    }
  }
  for (const auto& item : b) {
    if (schema.is_invariant(item.attr) && a.value_of(item.attr) != item.value) invariants_equal = false;
  }

  check.enough_attributes = a.size() >= 2 && any_varying;
  check.invariants_equal = invariants_equal;
  check.shared_varying = any_invariant || shared_varying_value;
  check.varying_differs = differing_varying_value;
  return check;
}

std::vector<Item> ScrPattern::shared_items() const {
  std::vector<Item> out;
  std::set_intersection(first.condset.begin(), first.condset.end(), second.condset.begin(),
                        second.condset.end(), std::back_inserter(out));
  return out;
}

std::vector<Item> ScrPattern::differing_items(int which) const {
  const auto& mine = which == 0 ? first.condset : second.condset;
  const auto& theirs = which == 0 ? second.condset : first.condset;
  std::vector<Item> out;
  std::set_difference(mine.begin(), mine.end(), theirs.begin(), theirs.end(), std::back_inserter(out));
  return out;
}

ScrPattern make_pattern(ClassificationRule a, ClassificationRule b) {
  if (a.cls > b.cls || (a.cls == b.cls && b < a)) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::vector<ScrPattern> assemble_patterns(std::span<const ScrRuleitem> ruleitems, const AttributeSchema& schema,
                                          std::uint64_t n_total, std::uint64_t min_count, const Ratio& alpha) {
  std::map<std::vector<AttrIndex>, std::vector<const ScrRuleitem*>> by_attributes;
  for (const auto& r : ruleitems) by_attributes[attribute_list(r.items)].push_back(&r);

  std::vector<ScrPattern> patterns;
  for (const auto& [attrs, group] : by_attributes) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const auto& a = *group[i];
        const auto& b = *group[j];
        for (ClassId k = 0; k < 2; ++k) {
          ClassificationRule ra{a.items, k, a.counts, n_total};
          ClassificationRule rb{b.items, other_class(k), b.counts, n_total};
          if (ra.count() < min_count || rb.count() < min_count) continue;
          if (!is_contrast_pair_rules(ra, rb, schema, alpha)) continue;
          patterns.push_back(make_pattern(std::move(ra), std::move(rb)));
        }
      }
    }
  }
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  return patterns;
}

std::size_t count_pattern_rules(std::span<const ScrPattern> patterns) {
  std::vector<const ClassificationRule*> rules;
  rules.reserve(patterns.size() * 2);
  for (const auto& p : patterns) {
    rules.push_back(&p.first);
    rules.push_back(&p.second);
  }
  std::sort(rules.begin(), rules.end(), [](auto* a, auto* b) { return *a < *b; });
  return std::unique(rules.begin(), rules.end(), [](auto* a, auto* b) { return *a == *b; }) - rules.begin();
}

std::vector<ScrPattern> mine_scr_patterns(const Dataset& data, const MiningParams& params, unsigned threads,
                                          ScrRun* run) {
  params.validate();
  auto mined = mine_scr_ruleitems(data, params.min_support, threads);
  auto patterns = assemble_patterns(mined.kept, data.schema(), mined.n_total, mined.min_count,
                                    params.min_confidence);
  if (run) *run = std::move(mined);
  return patterns;
}

}  // namespace scrminer
