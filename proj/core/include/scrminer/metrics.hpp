#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "scrminer/lattice.hpp"
#include "scrminer/rational.hpp"

namespace scrminer {

struct CarResult;
struct ScrRun;

/// Growth rate of a condset from `background` to `target`:
///   supp_target(X) / supp_background(X)
/// with within-class supports count_k / n_k.
struct GrowthRate {
  enum class Kind { Finite, Infinite, Undefined };

  Kind kind = Kind::Undefined;
  Ratio value{0};  // meaningful when Finite
  ClassId target = 0;
  ClassId background = 1;

  bool finite() const { return kind == Kind::Finite; }
};

/// Within-class support count_k / n_k (zero for an empty class).
Ratio class_support(const ClassCounts& counts, const ClassCounts& class_sizes, ClassId k);

GrowthRate growth_rate(const ClassCounts& counts, const ClassCounts& class_sizes, ClassId target,
                       ClassId background);
GrowthRate growth_rate(const Condset& condset, const Dataset& data, ClassId target, ClassId background);

/// growth rate >= rho; infinity passes any rho. An undefined growth rate
/// yields false and a warning. Throws ValidationError unless rho > 1.
bool is_rho_emerging(const GrowthRate& gr, const Ratio& rho);
bool is_rho_emerging(const Condset& condset, const Dataset& data, const Ratio& rho, ClassId target = 0);

/// conf(X -> target) expressed through the growth rate:
///   GR * n_target / (GR * n_target + n_background)
Ratio confidence_from_growth_rate(const Ratio& gr, std::uint64_t n_target, std::uint64_t n_background);

/// SCR-Apriori versus CAR-Apriori on one dataset and parameter set.
struct PruningStats {
  std::uint64_t scr_ruleitems = 0;           // kept SCR-ruleitems
  std::uint64_t car_ruleitems = 0;           // condsets with a frequent ruleitem
  std::uint64_t car_frequent_ruleitems = 0;  // (condset, class) pairs
  std::uint64_t scr_rules = 0;               // distinct rules inside SCR-patterns
  std::uint64_t car_rules = 0;               // confident classification rules
  std::uint64_t scr_candidates = 0;          // condsets counted, all levels
  std::uint64_t car_candidates = 0;

  std::optional<Ratio> ruleitem_ratio() const;
  std::optional<Ratio> rule_ratio() const;
};

PruningStats pruning_stats(std::uint64_t scr_ruleitems, std::uint64_t scr_rules, std::uint64_t scr_candidates,
                           std::uint64_t car_ruleitems, std::uint64_t car_frequent_ruleitems,
                           std::uint64_t car_rules, std::uint64_t car_candidates);

/// From the two run logs plus the rule/pattern counts derived from them.
PruningStats pruning_stats(const ScrRun& scr, std::uint64_t scr_rules, const CarResult& car,
                           std::uint64_t car_rules);

/// Percentage with one decimal, "58.0%", or "n/a" without a denominator.
std::string format_percent(const std::optional<Ratio>& r);

/// Two-line summary in the form used when reporting pruning results.
std::string format_pruning_summary(const PruningStats& stats);

}  // namespace scrminer
