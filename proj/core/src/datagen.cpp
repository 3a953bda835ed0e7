#include "scrminer/datagen.hpp"

#include <limits>

#include "scrminer/error.hpp"
#include "scrminer/log.hpp"
#include "scrminer/rules.hpp"
#include "scrminer/scr.hpp"

namespace scrminer {

namespace {

constexpr std::size_t kMaxRejections = 10'000;

using Row = std::vector<std::size_t>;  // nominal value index per generated attribute

AttributeSchema nominal_schema(const GenSpec& spec) {
  std::vector<Attribute> attrs;
  for (std::size_t a = 0; a < spec.domain_sizes.size(); ++a) {
    Attribute attr{generated_attribute_name(a), spec.roles[a], {}};
    for (std::size_t v = 0; v < spec.domain_sizes[a]; ++v) attr.domain.push_back(generated_value_name(a, v));
    attrs.push_back(std::move(attr));
  }
  attrs.push_back({"Cl", AttributeRole::Class, {"Cl1", "Cl2"}});
  return AttributeSchema(std::move(attrs));
}

// Interns values in row order so value ids follow first appearance, the same
// ids a reload of the written CSV produces.
Dataset build_dataset(const GenSpec& spec, const std::vector<Row>& rows, const std::vector<ClassId>& classes) {
  std::vector<Attribute> attrs;
  for (std::size_t a = 0; a < spec.domain_sizes.size(); ++a) {
    attrs.push_back({generated_attribute_name(a), spec.roles[a], {}});
  }
  attrs.push_back({"Cl", AttributeRole::Class, {}});
  AttributeSchema schema(std::move(attrs));

  const std::size_t width = spec.domain_sizes.size() + 1;
  std::vector<ValueId> cells;
  cells.reserve(rows.size() * width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t a = 0; a < rows[r].size(); ++a) {
      cells.push_back(schema.intern(a, generated_value_name(a, rows[r][a])));
    }
    cells.push_back(schema.intern(width - 1, classes[r] == 0 ? "Cl1" : "Cl2"));
  }
  return Dataset(std::move(schema), std::move(cells));
}

Row uniform_row(const GenSpec& spec, GenRng& rng) {
  Row row(spec.domain_sizes.size());
  for (std::size_t a = 0; a < row.size(); ++a) row[a] = rng.below(spec.domain_sizes[a]);
  return row;
}

bool row_matches(const Row& row, const std::vector<Item>& items) {
  for (const auto& it : items) {
    if (row[it.attr] != it.value) return false;
  }
  return true;
}

void check_template(const GenSpec& spec, const PlantedPattern& p) {
  const auto schema = nominal_schema(spec);
  for (const auto* rule : {&p.rule0, &p.rule1}) {
    for (const auto& it : *rule) {
      if (it.attr >= spec.domain_sizes.size() || it.value >= spec.domain_sizes[it.attr]) {
        throw ValidationError("planted item outside the generated attributes");
      }
    }
  }
  const ClassificationRule r0{Condset(p.rule0), 0, {1, 1}, 2};
  const ClassificationRule r1{Condset(p.rule1), 1, {1, 1}, 2};
  const auto check = check_contrast_rules(r0, r1, schema, Ratio(0));
  if (!check.all()) {
    throw ValidationError("planted rules do not form a contrasting pair (same attributes, >= 2 of them with "
                          ">= 1 varying, equal invariant values, a differing varying value)");
  }
  for (const auto& conf : {p.confidence0, p.confidence1}) {
    if (conf <= Ratio(0) || conf > Ratio(1)) throw ValidationError("planted confidence must be in (0, 1]");
    if (conf == Ratio(1) && spec.noise > 0) {
      throw ValidationError("planted confidence 1 is infeasible with noise > 0");
    }
  }
  if (p.support <= Ratio(0) || p.support > Ratio(1)) throw ValidationError("planted support must be in (0, 1]");
}

}  // namespace

std::uint64_t GenRng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

bool GenRng::chance(double p) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return u < p;
}

GenSpec GenSpec::uniform(std::size_t attributes, std::size_t values, std::size_t invariant,
                         std::size_t records_per_class, std::uint64_t seed) {
  GenSpec spec;
  spec.domain_sizes.assign(attributes, values);
  for (std::size_t a = 0; a < attributes; ++a) {
    spec.roles.push_back(a < invariant ? AttributeRole::Invariant : AttributeRole::Varying);
  }
  spec.records = {records_per_class, records_per_class};
  spec.seed = seed;
  return spec;
}

void GenSpec::validate() const {
  if (domain_sizes.empty()) throw ValidationError("at least one attribute is required");
  if (roles.size() != domain_sizes.size()) throw ValidationError("one role per attribute is required");
  for (auto d : domain_sizes) {
    if (d < 1) throw ValidationError("every attribute needs at least one value");
  }
  for (auto r : roles) {
    if (r == AttributeRole::Class) throw ValidationError("generated attributes are invariant or varying");
  }
  if (records[0] < 1 || records[1] < 1) throw ValidationError("each class needs at least one record");
  if (!(noise >= 0.0 && noise <= 1.0)) throw ValidationError("noise must be in [0, 1]");
}

std::string generated_attribute_name(std::size_t index) {
  std::string name;
  ++index;
  while (index > 0) {
    --index;
    name.insert(name.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return name;
}

std::string generated_value_name(std::size_t attr, std::size_t value) {
  return generated_attribute_name(attr) + std::to_string(value + 1);
}

Dataset gen_random(const GenSpec& spec) {
  spec.validate();
  GenRng rng(spec.seed);
  std::vector<Row> rows;
  std::vector<ClassId> classes;
  for (ClassId k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < spec.records[k]; ++i) {
      rows.push_back(uniform_row(spec, rng));
      classes.push_back(k);
    }
  }
  return build_dataset(spec, rows, classes);
}

Dataset gen_planted(const GenSpec& spec) {
  spec.validate();
  if (!spec.planted) throw ValidationError("no planted pattern in the generator spec");
  if (spec.noise >= 1.0) {
    warn("noise 1 leaves no planted records; generating uniform data");
    return gen_random(spec);
  }
  const auto& p = *spec.planted;
  check_template(spec, p);

  const std::uint64_t n_total = spec.records[0] + spec.records[1];
  // Block sizes: `hits` records carry the rule's condset and class; `contra`
  // records carry the condset with the other class, as many as the target
  // confidence allows.
  std::array<std::uint64_t, 2> hits{};
  std::array<std::uint64_t, 2> contra{};
  const std::array<const Ratio*, 2> confidence{&p.confidence0, &p.confidence1};
  for (ClassId k = 0; k < 2; ++k) {
    hits[k] = ceil_mul(p.support, n_total);
    const Ratio allowed = make_ratio(hits[k], 1) / *confidence[k];
    contra[k] = static_cast<std::uint64_t>(allowed.numerator() / allowed.denominator()) - hits[k];
  }
  for (ClassId k = 0; k < 2; ++k) {
    if (hits[k] + contra[other_class(k)] > spec.records[k]) {
      throw ValidationError("planted pattern needs " + std::to_string(hits[k] + contra[other_class(k)]) +
                            " records of class " + std::to_string(k + 1) + " but only " +
                            std::to_string(spec.records[k]) + " are generated");
    }
  }

  // Decoy: an invariant value carried by every class 0 background record and
  // by no class 1 record. Only attributes outside the template qualify; a
  // template attribute could leave class 1 background records no value.
  std::optional<Item> decoy;
  if (p.decoy) {
    const Condset template0(p.rule0);
    for (std::size_t a = 0; a < spec.domain_sizes.size() && !decoy; ++a) {
      if (spec.roles[a] != AttributeRole::Invariant || spec.domain_sizes[a] < 2) continue;
      if (template0.has_attr(static_cast<AttrIndex>(a))) continue;
      decoy = Item{static_cast<AttrIndex>(a), static_cast<ValueId>(spec.domain_sizes[a] - 1)};
    }
    if (!decoy) warn("no invariant attribute outside the planted rules; decoy skipped");
  }

  GenRng rng(spec.seed);
  std::vector<Row> rows;
  std::vector<ClassId> classes;

  auto draw = [&](ClassId cls, const std::vector<Item>* condset, bool background) {
    if (spec.noise > 0 && rng.chance(spec.noise)) return uniform_row(spec, rng);
    for (std::size_t attempt = 0; attempt < kMaxRejections; ++attempt) {
      Row row = uniform_row(spec, rng);
      if (condset) {
        for (const auto& it : *condset) row[it.attr] = it.value;
      }
      if (decoy) {
        if (cls == 0 && background) {
          row[decoy->attr] = decoy->value;
        } else if (cls == 1 && row[decoy->attr] == decoy->value) {
          continue;
        }
      }
      if (background && (row_matches(row, p.rule0) || row_matches(row, p.rule1))) continue;
      return row;
    }
    throw ValidationError("cannot draw background records that avoid the planted condsets");
  };
  auto emit = [&](ClassId cls, std::uint64_t n, const std::vector<Item>* condset, bool background) {
    for (std::uint64_t i = 0; i < n; ++i) {
      rows.push_back(draw(cls, condset, background));
      classes.push_back(cls);
    }
  };

  emit(0, hits[0], &p.rule0, false);
  emit(0, contra[1], &p.rule1, false);
  emit(0, spec.records[0] - hits[0] - contra[1], nullptr, true);
  emit(1, hits[1], &p.rule1, false);
  emit(1, contra[0], &p.rule0, false);
  emit(1, spec.records[1] - hits[1] - contra[0], nullptr, true);
  return build_dataset(spec, rows, classes);
}

Dataset generate(const GenSpec& spec) { return spec.planted ? gen_planted(spec) : gen_random(spec); }

Condset resolve_generated(const AttributeSchema& schema, const std::vector<Item>& items) {
  std::vector<Item> out;
  for (const auto& it : items) {
    const auto id = schema.value_id(it.attr, generated_value_name(it.attr, it.value));
    if (!id) throw ValidationError("value " + generated_value_name(it.attr, it.value) + " does not occur");
    out.push_back({it.attr, *id});
  }
  return Condset(std::move(out));
}

}  // namespace scrminer
