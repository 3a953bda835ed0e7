#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scrminer/car.hpp"
#include "scrminer/scr.hpp"

namespace scrminer {

inline constexpr std::uint64_t kDefaultCondsetCap = 2'000'000;

/// prod(domain size + 1) - 1 over non-class attributes, saturating at
/// UINT64_MAX.
std::uint64_t condset_space_size(const AttributeSchema& schema);

/// Every non-empty condset in canonical order. Throws CapExceeded when the
/// space is larger than `cap`.
std::vector<Condset> enumerate_all_condsets(const AttributeSchema& schema, std::uint64_t cap = kDefaultCondsetCap);

/// Result of the exhaustive mine-then-post-filter pipeline.
struct OracleReport {
  std::vector<ScrPattern> patterns;
  std::vector<Ruleitem> frequent_ruleitems;
  std::uint64_t condsets = 0;
  std::uint64_t frequent_condsets = 0;  // with at least one frequent ruleitem
  std::uint64_t frequent_ruleitem_count = 0;
  std::uint64_t confident_rules = 0;
  std::uint64_t pattern_rules = 0;  // distinct rules appearing in patterns
  std::uint64_t pattern_count = 0;
};

/// Counts every condset exhaustively, forms all frequent and confident
/// classification rules, and pairs them with `is_contrast_pair_rules`.
/// Shares nothing with the levelwise miners except the pair predicate.
OracleReport oracle_scr_patterns(const Dataset& data, const MiningParams& params,
                                 std::uint64_t cap = kDefaultCondsetCap);

struct PatternDiff {
  std::vector<ScrPattern> missing_from_a;  // in b only
  std::vector<ScrPattern> missing_from_b;  // in a only

  bool empty() const { return missing_from_a.empty() && missing_from_b.empty(); }
};

/// Both inputs sorted canonically.
PatternDiff compare_pattern_sets(std::span<const ScrPattern> a, std::span<const ScrPattern> b);

}  // namespace scrminer
