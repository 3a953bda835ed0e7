#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "scrminer/lattice.hpp"
#include "scrminer/rules.hpp"

namespace scrminer {

/// A condset with its support number in each class.
using ScrRuleitem = CountedItemset;

enum class Verdict { Keep, Exclude };

/// Outcome of the frequent-and-contrast filter for one SCR-ruleitem.
///
///   1  frequent in both classes                                    keep
///   2  frequent in neither class                                   exclude
///   3  frequent in one class, every attribute invariant            exclude
///   4  frequent in one class, no contrast pair in the level that is
///      frequent in the other class                                 exclude
///   5  frequent in one class, some contrast pair frequent in the
///      other class                                                 keep
struct FilterDecision {
  ScrRuleitem ruleitem;
  int branch = 0;

  Verdict verdict() const { return branch == 1 || branch == 5 ? Verdict::Keep : Verdict::Exclude; }
  bool kept() const { return verdict() == Verdict::Keep; }
};

/// Relaxed contrast relation between SCR-ruleitems: same attributes, equal
/// values on every invariant attribute, and at least one varying attribute
/// with different values. Single-attribute condsets qualify, and no varying
/// value has to be shared.
bool is_contrast_pair(const Condset& a, const Condset& b, const AttributeSchema& schema);

/// Per-class support-number thresholds.
using ClassThresholds = std::array<std::uint64_t, 2>;

/// Decides every SCR-ruleitem of one level at once. Contrast-pair lookups
/// see the whole level as counted, so the result (returned in canonical
/// condset order) is independent of the input order. Partners absent from
/// the level count as infrequent.
std::vector<FilterDecision> choose_frequent_and_contrast(std::span<const ScrRuleitem> level,
                                                         const AttributeSchema& schema,
                                                         const ClassThresholds& thresholds);

struct ScrRun {
  std::vector<Level> levels;
  std::vector<std::vector<FilterDecision>> decisions;  // parallel to levels
  std::vector<ScrRuleitem> kept;                       // all sizes, canonical order
  std::uint64_t min_count = 0;
  std::uint64_t n_total = 0;
};

/// SCR-Apriori: the Apriori level loop with the frequent-and-contrast filter
/// as its pruning step. Only kept condsets are joined, so an excluded condset
/// suppresses all of its supersets.
ScrRun mine_scr_ruleitems(const Dataset& data, const MinSupport& min_support, unsigned threads = 1);

/// Condition-by-condition result of checking two classification rules for
/// being an alpha-contrasting pair.
struct ContrastCheck {
  bool confident = false;             // both confidences >= alpha
  bool different_classes = false;
  bool same_attributes = false;
  bool enough_attributes = false;     // >= 2 attributes, >= 1 varying
  bool invariants_equal = false;
  bool shared_varying = false;        // only required without invariant attributes
  bool varying_differs = false;

  bool all() const {
    return confident && different_classes && same_attributes && enough_attributes && invariants_equal &&
           shared_varying && varying_differs;
  }
};

ContrastCheck check_contrast_rules(const ClassificationRule& r1, const ClassificationRule& r2,
                                   const AttributeSchema& schema, const Ratio& alpha);

inline bool is_contrast_pair_rules(const ClassificationRule& r1, const ClassificationRule& r2,
                                   const AttributeSchema& schema, const Ratio& alpha) {
  return check_contrast_rules(r1, r2, schema, alpha).all();
}

/// A pair of alpha-contrasting rules. `first` always predicts class 0.
struct ScrPattern {
  ClassificationRule first;
  ClassificationRule second;

  /// Items both antecedents share (invariant part plus equal varying items).
  std::vector<Item> shared_items() const;
  /// Items of first (which == 0) or second (which == 1) not in the other rule.
  std::vector<Item> differing_items(int which) const;

  friend auto operator<=>(const ScrPattern&, const ScrPattern&) = default;
  friend bool operator==(const ScrPattern&, const ScrPattern&) = default;
};

/// Orders the two rules canonically (class-0 rule first).
ScrPattern make_pattern(ClassificationRule a, ClassificationRule b);

/// Builds every SCR-pattern from pairs of SCR-ruleitems, trying both class
/// assignments per pair. Each rule must reach `min_count` in its class and
/// the pair must pass `is_contrast_pair_rules`. Sorted, duplicate-free.
std::vector<ScrPattern> assemble_patterns(std::span<const ScrRuleitem> ruleitems, const AttributeSchema& schema,
                                          std::uint64_t n_total, std::uint64_t min_count, const Ratio& alpha);

/// Number of distinct rules that take part in at least one pattern.
std::size_t count_pattern_rules(std::span<const ScrPattern> patterns);

/// mine_scr_ruleitems followed by assemble_patterns.
std::vector<ScrPattern> mine_scr_patterns(const Dataset& data, const MiningParams& params, unsigned threads = 1,
                                          ScrRun* run = nullptr);

}  // namespace scrminer
