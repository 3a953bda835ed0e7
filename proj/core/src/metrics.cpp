#include "scrminer/metrics.hpp"

#include "scrminer/car.hpp"
#include "scrminer/error.hpp"
#include "scrminer/log.hpp"
#include "scrminer/rules.hpp"
#include "scrminer/scr.hpp"

namespace scrminer {

namespace {

std::uint64_t candidate_total(const std::vector<Level>& levels) {
  std::uint64_t n = 0;
  for (const auto& l : levels) n += l.candidates.size();
  return n;
}

std::optional<Ratio> safe_ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return std::nullopt;
  return make_ratio(num, den);
}

}  // namespace

Ratio class_support(const ClassCounts& counts, const ClassCounts& class_sizes, ClassId k) {
  if (class_sizes[k] == 0) return Ratio(0);
  return make_ratio(counts[k], class_sizes[k]);
}

GrowthRate growth_rate(const ClassCounts& counts, const ClassCounts& class_sizes, ClassId target,
                       ClassId background) {
  GrowthRate gr;
  gr.target = target;
  gr.background = background;
  const auto num = class_support(counts, class_sizes, target);
  const auto den = class_support(counts, class_sizes, background);
  if (den == Ratio(0)) {
    gr.kind = num == Ratio(0) ? GrowthRate::Kind::Undefined : GrowthRate::Kind::Infinite;
    return gr;
  }
  gr.kind = GrowthRate::Kind::Finite;
  gr.value = num / den;
  return gr;
}

GrowthRate growth_rate(const Condset& condset, const Dataset& data, ClassId target, ClassId background) {
  const auto table = count_supports(std::span<const Itemset>(&condset, 1), data);
  return growth_rate(table.front().counts, data.class_sizes(), target, background);
}

bool is_rho_emerging(const GrowthRate& gr, const Ratio& rho) {
  if (rho <= Ratio(1)) throw ValidationError("growth rate threshold must exceed 1");
  switch (gr.kind) {
    case GrowthRate::Kind::Infinite: return true;
    case GrowthRate::Kind::Finite: return gr.value >= rho;
    case GrowthRate::Kind::Undefined: break;
  }
  warn("growth rate undefined (condset absent from both classes); not emerging");
  return false;
}

bool is_rho_emerging(const Condset& condset, const Dataset& data, const Ratio& rho, ClassId target) {
  return is_rho_emerging(growth_rate(condset, data, target, other_class(target)), rho);
}

Ratio confidence_from_growth_rate(const Ratio& gr, std::uint64_t n_target, std::uint64_t n_background) {
  const Ratio scaled = gr * Ratio(static_cast<std::int64_t>(n_target));
  return scaled / (scaled + Ratio(static_cast<std::int64_t>(n_background)));
}

std::optional<Ratio> PruningStats::ruleitem_ratio() const { return safe_ratio(scr_ruleitems, car_ruleitems); }

std::optional<Ratio> PruningStats::rule_ratio() const { return safe_ratio(scr_rules, car_rules); }

PruningStats pruning_stats(std::uint64_t scr_ruleitems, std::uint64_t scr_rules, std::uint64_t scr_candidates,
                           std::uint64_t car_ruleitems, std::uint64_t car_frequent_ruleitems,
                           std::uint64_t car_rules, std::uint64_t car_candidates) {
  PruningStats s;
  s.scr_ruleitems = scr_ruleitems;
  s.scr_rules = scr_rules;
  s.scr_candidates = scr_candidates;
  s.car_ruleitems = car_ruleitems;
  s.car_frequent_ruleitems = car_frequent_ruleitems;
  s.car_rules = car_rules;
  s.car_candidates = car_candidates;
  return s;
}

PruningStats pruning_stats(const ScrRun& scr, std::uint64_t scr_rules, const CarResult& car,
                           std::uint64_t car_rules) {
  return pruning_stats(scr.kept.size(), scr_rules, candidate_total(scr.levels), car.frequent_condsets.size(),
                       car.ruleitems.size(), car_rules, candidate_total(car.levels));
}

std::string format_percent(const std::optional<Ratio>& r) {
  if (!r) return "n/a";
  return format_fixed(*r * Ratio(100), 1) + "%";
}

std::string format_pruning_summary(const PruningStats& s) {
  std::string out;
  out += "SCR-ruleitems: " + std::to_string(s.scr_ruleitems) + " = " + format_percent(s.ruleitem_ratio()) +
         " of the " + std::to_string(s.car_ruleitems) + " frequent ruleitems identified with CAR-Apriori\n";
  out += "SCR rules: " + std::to_string(s.scr_rules) + " = " + format_percent(s.rule_ratio()) + " of the " +
         std::to_string(s.car_rules) + " classification rules obtained by post-filtering\n";
  return out;
}

}  // namespace scrminer
