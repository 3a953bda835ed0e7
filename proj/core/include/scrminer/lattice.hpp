#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "scrminer/dataset.hpp"

namespace scrminer {

/// One attribute=value assignment.
struct Item {
  AttrIndex attr = 0;
  ValueId value = 0;

  friend auto operator<=>(const Item&, const Item&) = default;
};

/// Set of items sorted by attribute index, at most one item per attribute.
/// Ordering is lexicographic over (attribute, value) pairs, which is the
/// canonical order used everywhere downstream.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<Item> items);
  /// Sorts; throws ValidationError if an attribute repeats.
  explicit Itemset(std::vector<Item> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Item& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Item>& items() const { return items_; }

  std::optional<ValueId> value_of(AttrIndex attr) const;
  bool has_attr(AttrIndex attr) const { return value_of(attr).has_value(); }
  bool same_attributes(const Itemset& other) const;
  bool is_subset_of(const Itemset& other) const;

  /// True if the record carries every item.
  bool matches(std::span<const ValueId> record) const {
    for (const auto& it : items_) {
      if (record[it.attr] != it.value) return false;
    }
    return true;
  }

  /// Copy with the item at `index` removed.
  Itemset without(std::size_t index) const;
  /// Copy with `extra` added; throws if its attribute is present.
  Itemset with(Item extra) const;

  friend auto operator<=>(const Itemset&, const Itemset&) = default;
  friend bool operator==(const Itemset&, const Itemset&) = default;

 private:
  std::vector<Item> items_;
};

/// Itemset without class items. Kept as an alias: the distinction is a
/// precondition checked by `is_condset`, not a separate representation.
using Condset = Itemset;

bool is_condset(const Itemset& items, const AttributeSchema& schema);

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept;
};

/// An itemset with its per-class containment counts.
struct CountedItemset {
  Itemset items;
  ClassCounts counts{0, 0};

  std::uint64_t total() const { return scrminer::total(counts); }
  friend bool operator==(const CountedItemset&, const CountedItemset&) = default;
};

/// Counted candidates of one level, in candidate order.
using SupportTable = std::vector<CountedItemset>;

/// Size-1 candidates: one per (attribute, domain value) in canonical order.
/// The class attribute is skipped unless `include_class` is set.
std::vector<Itemset> initial_candidates(const AttributeSchema& schema, bool include_class = false);

/// Exact per-class counts of every candidate in one pass over the records.
/// With threads > 1 the records are split into contiguous ranges and partial
/// counts are summed; the result does not depend on `threads`.
SupportTable count_supports(std::span<const Itemset> candidates, const Dataset& data,
                            unsigned threads = 1);

/// Apriori self-join over a canonically sorted, duplicate-free level.
/// Pairs sharing their first p-1 items are joined; pairs whose last items
/// name the same attribute are dropped.
std::vector<Itemset> self_join(std::span<const Itemset> level);

/// Keeps candidates whose every one-smaller subset is in `survivors`
/// (canonically sorted).
std::vector<Itemset> subset_prune(std::span<const Itemset> candidates,
                                  std::span<const Itemset> survivors);

/// One iteration of the levelwise loop.
struct Level {
  std::size_t size = 0;
  SupportTable candidates;
  std::vector<std::size_t> kept;  // indices into candidates, ascending
};

/// Per-level step-2 filter: flags which counted candidates survive.
using LevelFilter = std::function<std::vector<bool>(const SupportTable&)>;

/// Levelwise loop: count, filter, join + prune the survivors, repeat until a
/// level has no survivors or no candidates.
std::vector<Level> run_levelwise(const Dataset& data, std::vector<Itemset> initial,
                                 const LevelFilter& filter, unsigned threads = 1);

}  // namespace scrminer
