#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "scrminer/dataset.hpp"
#include "scrminer/lattice.hpp"
#include "scrminer/rational.hpp"

namespace scrminer {

/// Deterministic generator behind all synthetic data: std::mt19937_64 seeded
/// with the 64-bit seed. Bounded integers use rejection sampling on the raw
/// 64-bit output and probabilities compare the top 53 bits, so a seed gives
/// the same data on every platform.
class GenRng {
 public:
  explicit GenRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability p.
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

/// Two contrasting rule templates to plant. Items use generator coordinates:
/// attribute index among the generated attributes and 0-based value index.
struct PlantedPattern {
  std::vector<Item> rule0;  // predicts class 0 ("Cl1")
  std::vector<Item> rule1;  // predicts class 1 ("Cl2")
  Ratio confidence0{4, 5};
  Ratio confidence1{4, 5};
  /// Records matching each rule's condset inside its class, as a share of
  /// all records.
  Ratio support{1, 5};
  /// Make one invariant value frequent only in class 0, a frequent condset
  /// that can never be part of a pattern.
  bool decoy = true;
};

struct GenSpec {
  std::vector<std::size_t> domain_sizes;  // one entry per generated attribute
  std::vector<AttributeRole> roles;       // Invariant or Varying, same length
  std::array<std::size_t, 2> records{50, 50};
  std::uint64_t seed = 1;
  /// Probability that a record is drawn uniformly, ignoring the plan.
  double noise = 0.0;
  std::optional<PlantedPattern> planted;

  /// `attributes` attributes with `values` values each; the first
  /// `invariant` are invariant, the rest varying.
  static GenSpec uniform(std::size_t attributes, std::size_t values, std::size_t invariant,
                         std::size_t records_per_class, std::uint64_t seed);

  void validate() const;
};

/// Names used by the generator: attributes A, B, ..., Z, AA, AB, ...;
/// values <attr>1, <attr>2, ...; class attribute Cl with Cl1 and Cl2.
std::string generated_attribute_name(std::size_t index);
std::string generated_value_name(std::size_t attr, std::size_t value);

/// Uniform records per class; ignores `planted`.
Dataset gen_random(const GenSpec& spec);

/// Records arranged so the planted pattern holds at the requested
/// confidences (exactly when noise is 0). Throws ValidationError for
/// templates that violate the structural pattern conditions and for
/// infeasible specs. noise >= 1 disables planting with a warning.
Dataset gen_planted(const GenSpec& spec);

/// gen_planted when a pattern is set, gen_random otherwise.
Dataset generate(const GenSpec& spec);

/// Maps generator-coordinate items onto the value ids of `schema`.
Condset resolve_generated(const AttributeSchema& schema, const std::vector<Item>& items);

}  // namespace scrminer
