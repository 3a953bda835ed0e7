#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scrminer {

using AttrIndex = std::uint16_t;
using ValueId = std::uint16_t;

/// Index of one of the two classes; equals the class attribute's value id.
using ClassId = std::uint8_t;

/// Per-class record counts (class 0, class 1).
using ClassCounts = std::array<std::uint32_t, 2>;

inline std::uint64_t total(const ClassCounts& c) {
  return std::uint64_t{c[0]} + c[1];
}

inline ClassId other_class(ClassId k) { return static_cast<ClassId>(1 - k); }

enum class AttributeRole { Invariant, Varying, Class };

std::string_view to_string(AttributeRole role);

struct Attribute {
  std::string name;
  AttributeRole role = AttributeRole::Varying;
  std::vector<std::string> domain;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// Ordered attribute list with roles and categorical domains. Exactly one
/// attribute carries the Class role.
class AttributeSchema {
 public:
  AttributeSchema() = default;
  /// Validates names and roles; throws ValidationError.
  explicit AttributeSchema(std::vector<Attribute> attributes);

  std::size_t size() const { return attributes_.size(); }
  const Attribute& attribute(std::size_t i) const { return attributes_.at(i); }
  const std::vector<Attribute>& attributes() const { return attributes_; }

  AttrIndex class_index() const { return class_index_; }
  AttributeRole role(std::size_t i) const { return attributes_[i].role; }
  bool is_varying(std::size_t i) const { return attributes_[i].role == AttributeRole::Varying; }
  bool is_invariant(std::size_t i) const { return attributes_[i].role == AttributeRole::Invariant; }
  bool has_varying() const;

  std::optional<AttrIndex> index_of(std::string_view name) const;
  std::optional<ValueId> value_id(std::size_t attr, std::string_view value) const;
  const std::string& value_name(std::size_t attr, ValueId value) const {
    return attributes_[attr].domain[value];
  }

  /// Returns the id of `value`, appending it to the domain if unseen.
  ValueId intern(std::size_t attr, std::string_view value);

  friend bool operator==(const AttributeSchema&, const AttributeSchema&) = default;

 private:
  std::vector<Attribute> attributes_;
  AttrIndex class_index_ = 0;
};

/// Parses the `name:role` line format; `#` starts a comment.
AttributeSchema load_schema(std::string_view text);
AttributeSchema load_schema_file(const std::filesystem::path& path);
void write_schema(std::ostream& out, const AttributeSchema& schema);

/// Immutable two-class categorical dataset stored row-major as value ids,
/// one column per schema attribute (class column included).
class Dataset {
 public:
  Dataset() = default;
  /// `cells` holds size() * schema.size() value ids. The class domain may
  /// hold at most two values. Throws ValidationError.
  Dataset(AttributeSchema schema, std::vector<ValueId> cells);

  const AttributeSchema& schema() const { return schema_; }
  std::size_t size() const { return rows_; }
  std::size_t width() const { return schema_.size(); }
  bool empty() const { return rows_ == 0; }

  std::span<const ValueId> record(std::size_t row) const {
    return {cells_.data() + row * width(), width()};
  }
  ClassId class_of(std::size_t row) const {
    return static_cast<ClassId>(cells_[row * width() + schema_.class_index()]);
  }
  const ClassCounts& class_sizes() const { return class_sizes_; }

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  AttributeSchema schema_;
  std::vector<ValueId> cells_;
  std::size_t rows_ = 0;
  ClassCounts class_sizes_{0, 0};
};

/// Reads a CSV with a header naming every schema attribute (any order).
/// Domains are extended in first-appearance order.
Dataset load_dataset(std::istream& csv, AttributeSchema schema);
Dataset load_dataset_file(const std::filesystem::path& path, AttributeSchema schema);

/// Writes the dataset as CSV with columns in schema order.
void write_csv(std::ostream& out, const Dataset& data);

}  // namespace scrminer
