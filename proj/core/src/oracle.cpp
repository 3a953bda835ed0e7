#include "scrminer/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "scrminer/error.hpp"

namespace scrminer {

namespace {

// Mixed-radix encoding of condsets: digit i is 0 when attribute cols[i] is
// absent, value + 1 otherwise.
struct CondsetCodec {
  std::vector<AttrIndex> cols;
  std::vector<std::uint64_t> stride;
  std::uint64_t space = 1;

  explicit CondsetCodec(const AttributeSchema& schema) {
    for (std::size_t a = 0; a < schema.size(); ++a) {
      if (a == schema.class_index()) continue;
      cols.push_back(static_cast<AttrIndex>(a));
      stride.push_back(space);
      space *= schema.attribute(a).domain.size() + 1;
    }
  }

  Condset decode(std::uint64_t code, const AttributeSchema& schema) const {
    std::vector<Item> items;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto radix = schema.attribute(cols[i]).domain.size() + 1;
      const auto digit = (code / stride[i]) % radix;
      if (digit != 0) items.push_back({cols[i], static_cast<ValueId>(digit - 1)});
    }
    return Condset(std::move(items));
  }
};

void check_cap(const AttributeSchema& schema, std::uint64_t cap) {
  const auto n = condset_space_size(schema);
  if (n > cap) throw CapExceeded(n, cap);
}

}  // namespace

std::uint64_t condset_space_size(const AttributeSchema& schema) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t product = 1;
  for (std::size_t a = 0; a < schema.size(); ++a) {
    if (a == schema.class_index()) continue;
    const std::uint64_t radix = schema.attribute(a).domain.size() + 1;
    if (product > kMax / radix) return kMax;
    product *= radix;
  }
  return product - 1;
}

std::vector<Condset> enumerate_all_condsets(const AttributeSchema& schema, std::uint64_t cap) {
  check_cap(schema, cap);
  const CondsetCodec codec(schema);
  std::vector<Condset> out;
  out.reserve(codec.space - 1);
  for (std::uint64_t code = 1; code < codec.space; ++code) out.push_back(codec.decode(code, schema));
  std::sort(out.begin(), out.end());
  return out;
}

OracleReport oracle_scr_patterns(const Dataset& data, const MiningParams& params, std::uint64_t cap) {
  params.validate();
  const auto& schema = data.schema();
  check_cap(schema, cap);
  const CondsetCodec codec(schema);

  // Every record contributes to each of its 2^m sub-condsets.
  std::vector<ClassCounts> counts(codec.space, ClassCounts{0, 0});
  std::vector<std::uint64_t> codes;
  for (std::size_t r = 0; r < data.size(); ++r) {
    const auto record = data.record(r);
    codes.assign(1, 0);
    for (std::size_t i = 0; i < codec.cols.size(); ++i) {
      const auto digit = (std::uint64_t{record[codec.cols[i]]} + 1) * codec.stride[i];
      const auto n = codes.size();
      for (std::size_t j = 0; j < n; ++j) codes.push_back(codes[j] + digit);
    }
    const auto cls = data.class_of(r);
    for (auto code : codes) ++counts[code][cls];
  }

  OracleReport report;
  report.condsets = codec.space - 1;
  const auto min_count = params.min_support.count_threshold(data.size());
  const auto n_total = data.size();

  std::map<std::vector<AttrIndex>, std::vector<ClassificationRule>> rules_by_attributes;
  for (std::uint64_t code = 1; code < codec.space; ++code) {
    const auto& c = counts[code];
    if (c[0] < min_count && c[1] < min_count) continue;
    const auto condset = codec.decode(code, schema);
    ++report.frequent_condsets;
    for (ClassId k = 0; k < 2; ++k) {
      if (c[k] < min_count) continue;
      report.frequent_ruleitems.push_back({condset, k, c[k]});
      ClassificationRule rule{condset, k, c, n_total};
      if (rule.confidence() < params.min_confidence) continue;
      ++report.confident_rules;
      std::vector<AttrIndex> attrs;
      for (const auto& item : condset) attrs.push_back(item.attr);
      rules_by_attributes[attrs].push_back(std::move(rule));
    }
  }
  std::sort(report.frequent_ruleitems.begin(), report.frequent_ruleitems.end());
  report.frequent_ruleitem_count = report.frequent_ruleitems.size();

  // Rules over different attribute sets never pair, so only pairs within a
  // bucket are checked.
  for (const auto& [attrs, rules] : rules_by_attributes) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      for (std::size_t j = i + 1; j < rules.size(); ++j) {
        if (is_contrast_pair_rules(rules[i], rules[j], schema, params.min_confidence)) {
          report.patterns.push_back(make_pattern(rules[i], rules[j]));
        }
      }
    }
  }
  std::sort(report.patterns.begin(), report.patterns.end());
  report.patterns.erase(std::unique(report.patterns.begin(), report.patterns.end()), report.patterns.end());
  report.pattern_count = report.patterns.size();
  report.pattern_rules = count_pattern_rules(report.patterns);
  return report;
}

PatternDiff compare_pattern_sets(std::span<const ScrPattern> a, std::span<const ScrPattern> b) {
  PatternDiff diff;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(diff.missing_from_a));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff.missing_from_b));
  return diff;
}

}  // namespace scrminer
