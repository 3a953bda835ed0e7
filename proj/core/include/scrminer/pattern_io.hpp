#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "scrminer/apriori.hpp"
#include "scrminer/scr.hpp"

namespace scrminer {

/// "A1" when the value already starts with the attribute name, else "A=x".
std::string item_label(const AttributeSchema& schema, const Item& item);

/// Labels concatenated ("B1C1") when all are of the first kind, else joined
/// with commas.
std::string format_items(const AttributeSchema& schema, std::span<const Item> items);

/// {A2 / B1C1 -> Cl1 (conf=1.0000, supp=0.1429) : B2C2 -> Cl2 (conf=0.8000, supp=0.2857)}
std::string format_pattern(const AttributeSchema& schema, const ScrPattern& pattern);

/// A1C1 -> Cl2 (conf=0.5556, supp=0.3125)
std::string format_rule(const AttributeSchema& schema, const ClassificationRule& rule);
std::string format_association_rule(const AttributeSchema& schema, const AssociationRule& rule);

void write_patterns(std::ostream& out, const AttributeSchema& schema, std::span<const ScrPattern> patterns);
void write_rules(std::ostream& out, const AttributeSchema& schema, std::span<const ClassificationRule> rules);
void write_association_rules(std::ostream& out, const AttributeSchema& schema,
                             std::span<const AssociationRule> rules);

/// Tab-separated machine format. Condsets are `name=value` pairs joined by
/// ';' with '%', ';', '=', tab, CR and LF percent-encoded. Lines starting
/// with '#' are comments; the writer emits a header comment.
void write_patterns_tsv(std::ostream& out, const AttributeSchema& schema, std::span<const ScrPattern> patterns);
std::vector<ScrPattern> read_patterns_tsv(std::istream& in, const AttributeSchema& schema);

void write_rules_tsv(std::ostream& out, const AttributeSchema& schema, std::span<const ClassificationRule> rules);
std::vector<ClassificationRule> read_rules_tsv(std::istream& in, const AttributeSchema& schema);

}  // namespace scrminer
