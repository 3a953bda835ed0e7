#include "scrminer/pattern_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

#include "scrminer/error.hpp"

namespace scrminer {

namespace {

bool self_describing(const AttributeSchema& schema, const Item& item) {
  const auto& name = schema.attribute(item.attr).name;
  const auto& value = schema.value_name(item.attr, item.value);
  return value.size() > name.size() && value.compare(0, name.size(), name) == 0;
}

std::string rule_tail(const AttributeSchema& schema, const ClassificationRule& r) {
  return " -> " + schema.value_name(schema.class_index(), r.cls) + " (conf=" + format_fixed(r.confidence()) +
         ", supp=" + format_fixed(r.support()) + ")";
}

std::string escape(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (c == '%' || c == ';' || c == '=' || c == '\t' || c == '\n' || c == '\r') {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

std::string unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') {
      out += s[i];
      continue;
    }
    unsigned value = 0;
    if (i + 2 >= s.size()) throw ValidationError("truncated escape in '" + std::string(s) + "'");
    auto [ptr, ec] = std::from_chars(s.data() + i + 1, s.data() + i + 3, value, 16);
    if (ec != std::errc{} || ptr != s.data() + i + 3) {
      throw ValidationError("bad escape in '" + std::string(s) + "'");
    }
    out += static_cast<char>(value);
    i += 2;
  }
  return out;
}

std::string encode_condset(const AttributeSchema& schema, const Condset& c) {
  std::string out;
  for (const auto& it : c) {
    if (!out.empty()) out += ';';
    out += escape(schema.attribute(it.attr).name);
    out += '=';
    out += escape(schema.value_name(it.attr, it.value));
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Condset decode_condset(const AttributeSchema& schema, std::string_view text) {
  std::vector<Item> items;
  for (auto part : split(text, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw ValidationError("expected name=value, got '" + std::string(part) + "'");
    const auto name = unescape(part.substr(0, eq));
    const auto value = unescape(part.substr(eq + 1));
    const auto attr = schema.index_of(name);
    if (!attr || *attr == schema.class_index()) throw ValidationError("unknown attribute '" + name + "'");
    const auto id = schema.value_id(*attr, value);
    if (!id) throw ValidationError("unknown value '" + value + "' of attribute '" + name + "'");
    items.push_back({*attr, *id});
  }
  return Condset(std::move(items));
}

std::uint64_t parse_count(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ValidationError("bad count '" + std::string(s) + "'");
  return v;
}

ClassId parse_class(const AttributeSchema& schema, std::string_view s) {
  const auto id = schema.value_id(schema.class_index(), unescape(s));
  if (!id) throw ValidationError("unknown class '" + std::string(s) + "'");
  return static_cast<ClassId>(*id);
}

// condset, class, count_0, count_1, conf, supp
constexpr std::size_t kRuleFields = 6;

void write_rule_fields(std::ostream& out, const AttributeSchema& schema, const ClassificationRule& r) {
  out << encode_condset(schema, r.condset) << '\t' << escape(schema.value_name(schema.class_index(), r.cls))
      << '\t' << r.counts[0] << '\t' << r.counts[1] << '\t' << format_fixed(r.confidence()) << '\t'
      << format_fixed(r.support());
}

ClassificationRule parse_rule_fields(const AttributeSchema& schema, std::span<const std::string_view> f,
                                     std::uint64_t n_total) {
  ClassificationRule r;
  r.condset = decode_condset(schema, f[0]);
  r.cls = parse_class(schema, f[1]);
  r.counts = {static_cast<std::uint32_t>(parse_count(f[2])), static_cast<std::uint32_t>(parse_count(f[3]))};
  r.n_total = n_total;
  return r;
}

template <typename Fn>
void for_each_data_line(std::istream& in, std::size_t fields, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto parts = split(line, '\t');
    if (parts.size() != fields) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected " + std::to_string(fields) +
                            " tab-separated fields, found " + std::to_string(parts.size()));
    }
    fn(parts);
  }
}

}  // namespace

std::string item_label(const AttributeSchema& schema, const Item& item) {
  if (self_describing(schema, item)) return schema.value_name(item.attr, item.value);
  return schema.attribute(item.attr).name + "=" + schema.value_name(item.attr, item.value);
}

std::string format_items(const AttributeSchema& schema, std::span<const Item> items) {
  const bool compact =
      std::all_of(items.begin(), items.end(), [&](const Item& i) { return self_describing(schema, i); });
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i && !compact) out += ',';
    out += item_label(schema, items[i]);
  }
  return out;
}

std::string format_pattern(const AttributeSchema& schema, const ScrPattern& p) {
  const auto shared = p.shared_items();
  const auto vary0 = p.differing_items(0);
  const auto vary1 = p.differing_items(1);
  return "{" + format_items(schema, shared) + " / " + format_items(schema, vary0) + rule_tail(schema, p.first) +
         " : " + format_items(schema, vary1) + rule_tail(schema, p.second) + "}";
}

std::string format_rule(const AttributeSchema& schema, const ClassificationRule& rule) {
  return format_items(schema, rule.condset.items()) + rule_tail(schema, rule);
}

std::string format_association_rule(const AttributeSchema& schema, const AssociationRule& rule) {
  return format_items(schema, rule.antecedent.items()) + " -> " + format_items(schema, rule.consequent.items()) +
         " (conf=" + format_fixed(rule.confidence()) + ", supp=" + format_fixed(rule.support()) + ")";
}

void write_patterns(std::ostream& out, const AttributeSchema& schema, std::span<const ScrPattern> patterns) {
  for (const auto& p : patterns) out << format_pattern(schema, p) << '\n';
}

void write_rules(std::ostream& out, const AttributeSchema& schema, std::span<const ClassificationRule> rules) {
  for (const auto& r : rules) out << format_rule(schema, r) << '\n';
}

void write_association_rules(std::ostream& out, const AttributeSchema& schema,
                             std::span<const AssociationRule> rules) {
  for (const auto& r : rules) out << format_association_rule(schema, r) << '\n';
}

void write_patterns_tsv(std::ostream& out, const AttributeSchema& schema, std::span<const ScrPattern> patterns) {
  out << "#condset_a\tclass_a\tcount_a_0\tcount_a_1\tconf_a\tsupp_a"
         "\tcondset_b\tclass_b\tcount_b_0\tcount_b_1\tconf_b\tsupp_b\tn_total\n";
  for (const auto& p : patterns) {
    write_rule_fields(out, schema, p.first);
    out << '\t';
    write_rule_fields(out, schema, p.second);
    out << '\t' << p.first.n_total << '\n';
  }
}

std::vector<ScrPattern> read_patterns_tsv(std::istream& in, const AttributeSchema& schema) {
  std::vector<ScrPattern> patterns;
  for_each_data_line(in, 2 * kRuleFields + 1, [&](std::span<const std::string_view> f) {
    const auto n_total = parse_count(f[2 * kRuleFields]);
    auto a = parse_rule_fields(schema, f.subspan(0, kRuleFields), n_total);
    auto b = parse_rule_fields(schema, f.subspan(kRuleFields, kRuleFields), n_total);
    patterns.push_back(make_pattern(std::move(a), std::move(b)));
  });
  std::sort(patterns.begin(), patterns.end());
  return patterns;
}

void write_rules_tsv(std::ostream& out, const AttributeSchema& schema, std::span<const ClassificationRule> rules) {
  out << "#condset\tclass\tcount_0\tcount_1\tconf\tsupp\tn_total\n";
  for (const auto& r : rules) {
    write_rule_fields(out, schema, r);
    out << '\t' << r.n_total << '\n';
  }
}

std::vector<ClassificationRule> read_rules_tsv(std::istream& in, const AttributeSchema& schema) {
  std::vector<ClassificationRule> rules;
  for_each_data_line(in, kRuleFields + 1, [&](std::span<const std::string_view> f) {
    rules.push_back(parse_rule_fields(schema, f.subspan(0, kRuleFields), parse_count(f[kRuleFields])));
  });
  std::sort(rules.begin(), rules.end());
  return rules;
}

}  // namespace scrminer
