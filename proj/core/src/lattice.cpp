#include "scrminer/lattice.hpp"

#include <algorithm>
#include <thread>

#include "scrminer/error.hpp"

namespace scrminer {

namespace {

void check_distinct_attributes(const std::vector<Item>& items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i].attr == items[i - 1].attr) {
      throw ValidationError("itemset holds two values of attribute " + std::to_string(items[i].attr));
    }
  }
}

void count_range(std::span<const Itemset> candidates, const Dataset& data, std::size_t first,
                 std::size_t last, std::vector<ClassCounts>& counts) {
  for (std::size_t r = first; r < last; ++r) {
    const auto record = data.record(r);
    const auto cls = data.class_of(r);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (candidates[c].matches(record)) ++counts[c][cls];
    }
  }
}

}  // namespace

Itemset::Itemset(std::initializer_list<Item> items) : Itemset(std::vector<Item>(items)) {}

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  check_distinct_attributes(items_);
}

std::optional<ValueId> Itemset::value_of(AttrIndex attr) const {
  const auto it = std::lower_bound(items_.begin(), items_.end(), attr,
                                   [](const Item& i, AttrIndex a) { return i.attr < a; });
  if (it == items_.end() || it->attr != attr) return std::nullopt;
  return it->value;
}

bool Itemset::same_attributes(const Itemset& other) const {
  return std::equal(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                    [](const Item& a, const Item& b) { return a.attr == b.attr; });
}

bool Itemset::is_subset_of(const Itemset& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

Itemset Itemset::without(std::size_t index) const {
  Itemset out;
  out.items_.reserve(items_.size() - 1);
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i != index) out.items_.push_back(items_[i]);
  }
  return out;
}

Itemset Itemset::with(Item extra) const {
  auto items = items_;
  items.push_back(extra);
  return Itemset(std::move(items));
}

bool is_condset(const Itemset& items, const AttributeSchema& schema) {
  if (items.empty()) return false;
  return std::none_of(items.begin(), items.end(), [&](const Item& i) {
    return i.attr >= schema.size() || i.attr == schema.class_index();
  });
}

std::size_t ItemsetHash::operator()(const Itemset& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& it : s) {
    h ^= (std::size_t{it.attr} << 16) | it.value;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Itemset> initial_candidates(const AttributeSchema& schema, bool include_class) {
  std::vector<Itemset> out;
  for (std::size_t a = 0; a < schema.size(); ++a) {
    if (a == schema.class_index() && !include_class) continue;
    const auto n = schema.attribute(a).domain.size();
    for (std::size_t v = 0; v < n; ++v) {
      out.push_back(Itemset{{static_cast<AttrIndex>(a), static_cast<ValueId>(v)}});
    }
  }
  return out;
}

SupportTable count_supports(std::span<const Itemset> candidates, const Dataset& data, unsigned threads) {
  const std::size_t n = data.size();
  std::vector<ClassCounts> counts(candidates.size(), ClassCounts{0, 0});

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1 || candidates.empty()) {
    count_range(candidates, data, 0, n, counts);
  } else {
    std::vector<std::vector<ClassCounts>> partial(workers,
                                                  std::vector<ClassCounts>(candidates.size(), ClassCounts{0, 0}));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = n * w / workers;
      const std::size_t last = n * (w + 1) / workers;
      pool.emplace_back(count_range, candidates, std::cref(data), first, last, std::ref(partial[w]));
    }
    for (auto& t : pool) t.join();
    for (const auto& part : partial) {
      for (std::size_t c = 0; c < counts.size(); ++c) {
        counts[c][0] += part[c][0];
        counts[c][1] += part[c][1];
      }
    }
  }

  SupportTable table;
  table.reserve(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) table.push_back({candidates[c], counts[c]});
  return table;
}

std::vector<Itemset> self_join(std::span<const Itemset> level) {
  std::vector<Itemset> out;
  for (std::size_t i = 0; i < level.size(); ++i) {
    const auto& a = level[i];
    if (a.empty()) continue;
    const auto p = a.size();
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      const auto& b = level[j];
      if (b.size() != p || !std::equal(a.begin(), a.end() - 1, b.begin())) break;
      const auto& last_a = a[p - 1];
      const auto& last_b = b[p - 1];
      if (last_a.attr == last_b.attr) continue;
      out.push_back(a.with(last_b));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Itemset> subset_prune(std::span<const Itemset> candidates, std::span<const Itemset> survivors) {
  std::vector<Itemset> out;
  for (const auto& c : candidates) {
    bool keep = !survivors.empty();
    for (std::size_t i = 0; keep && i < c.size(); ++i) {
      keep = std::binary_search(survivors.begin(), survivors.end(), c.without(i));
    }
    if (keep) out.push_back(c);
  }
  return out;
}

std::vector<Level> run_levelwise(const Dataset& data, std::vector<Itemset> initial, const LevelFilter& filter,
                                 unsigned threads) {
  std::vector<Level> levels;
  std::vector<Itemset> candidates = std::move(initial);
  std::sort(candidates.begin(), candidates.end());
  std::size_t size = 1;

  while (!candidates.empty()) {
    Level level;
    level.size = size;
    level.candidates = count_supports(candidates, data, threads);
    const auto keep = filter(level.candidates);

    std::vector<Itemset> survivors;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (keep[i]) {
        level.kept.push_back(i);
        survivors.push_back(level.candidates[i].items);
      }
    }
    levels.push_back(std::move(level));
    if (survivors.empty()) break;

    candidates = subset_prune(self_join(survivors), survivors);
    ++size;
  }
  return levels;
}

}  // namespace scrminer
