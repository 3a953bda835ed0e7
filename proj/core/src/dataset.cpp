#include "scrminer/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "scrminer/error.hpp"
#include "scrminer/log.hpp"

namespace scrminer {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

AttributeRole parse_role(std::string_view token, std::size_t line) {
  if (token == "invariant") return AttributeRole::Invariant;
  if (token == "varying") return AttributeRole::Varying;
  if (token == "class") return AttributeRole::Class;
  throw ValidationError("schema line " + std::to_string(line) + ": unknown role '" +
                        std::string(token) + "' (expected invariant, varying or class)");
}

// Splits one RFC-4180 record. Returns false at end of input.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;

  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty() && !was_quoted) {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else if (c == '\n') {
      break;
    } else if (c == '\r') {
      if (in.peek() == '\n') in.get(c);
      break;
    } else {
      field += c;
    }
  }
  if (quoted) throw ValidationError("unterminated quoted CSV field");
  fields.push_back(std::move(field));
  return true;
}

void write_csv_field(std::ostream& out, std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    out << value;
    return;
  }
  out << '"';
  for (char c : value) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

std::string_view to_string(AttributeRole role) {
  switch (role) {
    case AttributeRole::Invariant: return "invariant";
    case AttributeRole::Varying: return "varying";
    case AttributeRole::Class: return "class";
  }
  return "?";
}

AttributeSchema::AttributeSchema(std::vector<Attribute> attributes)
    : attributes_(std::move(attributes)) {
  if (attributes_.size() > std::numeric_limits<AttrIndex>::max()) {
    throw ValidationError("too many attributes");
  }
  std::unordered_set<std::string_view> names;
  std::optional<AttrIndex> class_attr;
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    const auto& a = attributes_[i];
    if (a.name.empty()) throw ValidationError("attribute " + std::to_string(i) + " has an empty name");
    if (!names.insert(a.name).second) throw ValidationError("duplicate attribute name '" + a.name + "'");
    if (a.role == AttributeRole::Class) {
      if (class_attr) {
        throw ValidationError("multiple class attributes: '" + attributes_[*class_attr].name +
                              "' and '" + a.name + "'");
      }
      class_attr = static_cast<AttrIndex>(i);
    }
    std::unordered_set<std::string_view> values;
    for (const auto& v : a.domain) {
      if (!values.insert(v).second) {
        throw ValidationError("duplicate value '" + v + "' in domain of '" + a.name + "'");
      }
    }
  }
  if (!class_attr) throw ValidationError("no class attribute");
  class_index_ = *class_attr;
  if (!has_varying()) warn("schema has no varying attribute; no SCR-pattern can exist");
}

bool AttributeSchema::has_varying() const {
  return std::any_of(attributes_.begin(), attributes_.end(),
                     [](const Attribute& a) { return a.role == AttributeRole::Varying; });
}

std::optional<AttrIndex> AttributeSchema::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name == name) return static_cast<AttrIndex>(i);
  }
  return std::nullopt;
}

std::optional<ValueId> AttributeSchema::value_id(std::size_t attr, std::string_view value) const {
  const auto& domain = attributes_.at(attr).domain;
  const auto it = std::find(domain.begin(), domain.end(), value);
  if (it == domain.end()) return std::nullopt;
  return static_cast<ValueId>(it - domain.begin());
}

ValueId AttributeSchema::intern(std::size_t attr, std::string_view value) {
  if (auto id = value_id(attr, value)) return *id;
  auto& domain = attributes_.at(attr).domain;
  if (domain.size() >= std::numeric_limits<ValueId>::max()) {
    throw ValidationError("attribute '" + attributes_[attr].name + "' has too many distinct values");
  }
  domain.emplace_back(value);
  return static_cast<ValueId>(domain.size() - 1);
}

AttributeSchema load_schema(std::string_view text) {
  std::vector<Attribute> attributes;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.rfind(':');
    if (colon == std::string_view::npos) {
      throw ValidationError("schema line " + std::to_string(line_no) + ": expected 'name:role'");
    }
    Attribute a;
    a.name = std::string(trim(line.substr(0, colon)));
    a.role = parse_role(trim(line.substr(colon + 1)), line_no);
    attributes.push_back(std::move(a));
  }
  return AttributeSchema(std::move(attributes));
}

AttributeSchema load_schema_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open schema file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_schema(buffer.str());
}

void write_schema(std::ostream& out, const AttributeSchema& schema) {
  for (const auto& a : schema.attributes()) out << a.name << ':' << to_string(a.role) << '\n';
}

Dataset::Dataset(AttributeSchema schema, std::vector<ValueId> cells)
    : schema_(std::move(schema)), cells_(std::move(cells)) {
  const auto& class_attr = schema_.attribute(schema_.class_index());
  if (class_attr.domain.size() > 2) {
    throw ValidationError("class attribute '" + class_attr.name + "' must have at most 2 values, found " +
                          std::to_string(class_attr.domain.size()) +
                          "; binarize the class column before mining");
  }
  const auto w = schema_.size();
  if (w == 0 || cells_.size() % w != 0) throw ValidationError("cell count is not a multiple of the schema width");
  rows_ = cells_.size() / w;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      if (cells_[r * w + c] >= schema_.attribute(c).domain.size()) {
        throw ValidationError("record " + std::to_string(r + 1) + ": invalid value id for '" +
                              schema_.attribute(c).name + "'");
      }
    }
    ++class_sizes_[class_of(r)];
  }
  if (rows_ > 0 && class_attr.domain.size() < 2) {
    warn("only one class value occurs in the data; no contrasting rules can exist");
  }
}

Dataset load_dataset(std::istream& csv, AttributeSchema schema) {
  std::vector<std::string> fields;
  if (!read_csv_record(csv, fields)) throw ValidationError("CSV input is empty (no header)");

  const auto w = schema.size();
  std::vector<std::size_t> column_to_attr(fields.size());
  std::vector<bool> seen(w, false);
  for (std::size_t col = 0; col < fields.size(); ++col) {
    const auto name = trim(fields[col]);
    const auto attr = schema.index_of(name);
    if (!attr) throw ValidationError("CSV column '" + std::string(name) + "' is not in the schema");
    if (seen[*attr]) throw ValidationError("CSV column '" + std::string(name) + "' appears twice");
    seen[*attr] = true;
    column_to_attr[col] = *attr;
  }
  for (std::size_t a = 0; a < w; ++a) {
    if (!seen[a]) throw ValidationError("schema attribute '" + schema.attribute(a).name + "' has no CSV column");
  }

  std::vector<ValueId> cells;
  std::size_t record = 0;
  while (read_csv_record(csv, fields)) {
    ++record;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != column_to_attr.size()) {
      throw ValidationError("record " + std::to_string(record) + ": expected " +
                            std::to_string(column_to_attr.size()) + " fields, found " +
                            std::to_string(fields.size()));
    }
    const auto base = cells.size();
    cells.resize(base + w);
    for (std::size_t col = 0; col < fields.size(); ++col) {
      const auto attr = column_to_attr[col];
      if (trim(fields[col]).empty()) {
        throw ValidationError("record " + std::to_string(record) + ", column '" +
                              schema.attribute(attr).name + "': missing value");
      }
      cells[base + attr] = schema.intern(attr, fields[col]);
    }
  }
  return Dataset(std::move(schema), std::move(cells));
}

Dataset load_dataset_file(const std::filesystem::path& path, AttributeSchema schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open data file '" + path.string() + "'");
  return load_dataset(in, std::move(schema));
}

void write_csv(std::ostream& out, const Dataset& data) {
  const auto& schema = data.schema();
  for (std::size_t a = 0; a < schema.size(); ++a) {
    if (a) out << ',';
    write_csv_field(out, schema.attribute(a).name);
  }
  out << '\n';
  for (std::size_t r = 0; r < data.size(); ++r) {
    const auto rec = data.record(r);
    for (std::size_t a = 0; a < rec.size(); ++a) {
      if (a) out << ',';
      write_csv_field(out, schema.value_name(a, rec[a]));
    }
    out << '\n';
  }
}

}  // namespace scrminer
