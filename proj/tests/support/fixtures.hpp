#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scrminer/dataset.hpp"
#include "scrminer/lattice.hpp"

namespace scrminer::testing {

// One row of a two-class record table: values and the number of copies per class.
struct RecordCount {
  std::vector<std::string> values;
  unsigned cl1 = 0;
  unsigned cl2 = 0;
};

inline AttributeSchema abc_schema() {
  return load_schema("A:invariant\nB:varying\nC:varying\nCl:class\n");
}

inline Dataset build_dataset(const AttributeSchema& schema, const std::vector<RecordCount>& table) {
  std::ostringstream csv;
  for (std::size_t a = 0; a < schema.size(); ++a) csv << (a ? "," : "") << schema.attribute(a).name;
  csv << '\n';
  for (int cls = 0; cls < 2; ++cls) {
    for (const auto& row : table) {
      const unsigned copies = cls == 0 ? row.cl1 : row.cl2;
      for (unsigned i = 0; i < copies; ++i) {
        for (const auto& v : row.values) csv << v << ',';
        csv << (cls == 0 ? "Cl1" : "Cl2") << '\n';
      }
    }
  }
  std::istringstream in(csv.str());
  return load_dataset(in, schema);
}

// 16 records; class sizes (10, 6).
inline Dataset example1() {
  return build_dataset(abc_schema(), {{{"A1", "B1", "C1"}, 1, 2},
                                      {{"A1", "B2", "C1"}, 3, 3},
                                      {{"A1", "B1", "C2"}, 1, 1},
                                      {{"A2", "B1", "C2"}, 3, 0},
                                      {{"A2", "B2", "C1"}, 2, 0}});
}

// 14 records; class sizes (8, 6).
inline Dataset example2() {
  return build_dataset(abc_schema(), {{{"A1", "B1", "C1"}, 2, 1},
                                      {{"A1", "B2", "C1"}, 3, 1},
                                      {{"A2", "B1", "C1"}, 2, 0},
                                      {{"A2", "B2", "C2"}, 1, 4}});
}

// "A1C1" -> {A=A1, C=C1}; every label is the attribute name plus a digit run.
inline Condset cs(const AttributeSchema& schema, std::string_view labels) {
  std::vector<Item> items;
  std::size_t i = 0;
  while (i < labels.size()) {
    std::size_t j = i + 1;
    while (j < labels.size() && labels[j] >= '0' && labels[j] <= '9') ++j;
    const std::string label(labels.substr(i, j - i));
    const auto attr = schema.index_of(label.substr(0, 1));
    const auto value = schema.value_id(*attr, label);
    items.push_back({*attr, *value});
    i = j;
  }
  return Condset(std::move(items));
}

struct RandomShape {
  std::size_t min_attrs = 3, max_attrs = 7;
  std::size_t min_values = 2, max_values = 3;
  std::size_t min_records = 20, max_records = 300;
};

// Seeded random two-class dataset: random roles with at least one varying
// attribute, each class present at least once.
inline Dataset random_dataset(std::mt19937_64& rng, const RandomShape& shape = {}) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t attrs = pick(shape.min_attrs, shape.max_attrs);
  const std::size_t forced_varying = pick(0, attrs - 1);
  std::vector<std::size_t> domain(attrs);
  std::string schema_text;
  for (std::size_t a = 0; a < attrs; ++a) {
    domain[a] = pick(shape.min_values, shape.max_values);
    const bool varying = a == forced_varying || pick(0, 1) == 1;
    schema_text += std::string(1, static_cast<char>('A' + a)) + (varying ? ":varying\n" : ":invariant\n");
  }
  schema_text += "Cl:class\n";
  const auto schema = load_schema(schema_text);

  const std::size_t n = pick(shape.min_records, shape.max_records);
  std::ostringstream csv;
  for (std::size_t a = 0; a < attrs; ++a) csv << static_cast<char>('A' + a) << ',';
  csv << "Cl\n";
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t a = 0; a < attrs; ++a) {
      csv << static_cast<char>('A' + a) << pick(1, domain[a]) << ',';
    }
    const bool cls2 = r == 0 ? false : r == 1 ? true : pick(0, 1) == 1;
    csv << (cls2 ? "Cl2" : "Cl1") << '\n';
  }
  std::istringstream in(csv.str());
  return load_dataset(in, schema);
}

// Per-class support numbers by a direct scan.
inline ClassCounts naive_counts(const Condset& c, const Dataset& data) {
  ClassCounts counts{0, 0};
  for (std::size_t r = 0; r < data.size(); ++r) {
    if (c.matches(data.record(r))) ++counts[data.class_of(r)];
  }
  return counts;
}

}  // namespace scrminer::testing
