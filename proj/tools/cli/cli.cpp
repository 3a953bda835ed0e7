#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scrminer/apriori.hpp"
#include "scrminer/car.hpp"
#include "scrminer/datagen.hpp"
#include "scrminer/dataset.hpp"
#include "scrminer/error.hpp"
#include "scrminer/metrics.hpp"
#include "scrminer/oracle.hpp"
#include "scrminer/pattern_io.hpp"
#include "scrminer/scr.hpp"

namespace scrminer::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct SupportFlags {
  std::string ratio;
  std::uint64_t count = 0;

  MinSupport resolve() const {
    if (!ratio.empty()) return MinSupport::ratio(parse_ratio(ratio));
    if (count > 0) return MinSupport::count(count);
    throw ValidationError("one of --min-supp or --min-supp-count is required");
  }
};

void add_support_flags(CLI::App* cmd, SupportFlags& flags) {
  auto* ratio = cmd->add_option("--min-supp", flags.ratio, "minimum support as a ratio of all records");
  auto* count = cmd->add_option("--min-supp-count", flags.count, "minimum support number (records)")
                    ->check(CLI::PositiveNumber);
  ratio->excludes(count);
  count->excludes(ratio);
}

MiningParams make_params(const SupportFlags& support, const std::string& min_conf) {
  MiningParams params{support.resolve(), parse_ratio(min_conf)};
  params.validate();
  return params;
}

// Writes through `fn` to `path`, or to `fallback` when path is "-".
void write_to(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& fn) {
  if (path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  fn(file);
  if (!file) throw IoError("failed writing '" + path + "'");
}

Dataset load_inputs(const std::string& data_path, const std::string& schema_path) {
  return load_dataset_file(data_path, load_schema_file(schema_path));
}

void write_level_table(std::ostream& out, const std::vector<Level>& levels,
                       const std::vector<std::vector<FilterDecision>>* decisions) {
  out << "#level\tcandidates\tkept";
  if (decisions) out << "\tbranch1\tbranch2\tbranch3\tbranch4\tbranch5";
  out << '\n';
  for (std::size_t i = 0; i < levels.size(); ++i) {
    out << levels[i].size << '\t' << levels[i].candidates.size() << '\t' << levels[i].kept.size();
    if (decisions) {
      std::array<std::size_t, 6> branches{};
      for (const auto& d : (*decisions)[i]) ++branches[static_cast<std::size_t>(d.branch)];
      for (int b = 1; b <= 5; ++b) out << '\t' << branches[static_cast<std::size_t>(b)];
    }
    out << '\n';
  }
}

std::size_t candidate_total(const std::vector<Level>& levels) {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.candidates.size();
  return n;
}

// ---------------------------------------------------------------- mine

struct MineConfig {
  std::string data;
  std::string schema;
  std::string algo = "scr";
  SupportFlags support;
  std::string min_conf = "0.5";
  std::string out = "-";
  std::string tsv;
  std::string stats;
  unsigned threads = 1;
};

int cmd_mine(const MineConfig& cfg, std::ostream& out) {
  const auto params = make_params(cfg.support, cfg.min_conf);
  const auto data = load_inputs(cfg.data, cfg.schema);
  const auto& schema = data.schema();

  std::ostringstream stats;
  stats << "algorithm\t" << cfg.algo << '\n'
        << "records\t" << data.size() << '\n'
        << "class_1_records\t" << data.class_sizes()[0] << '\n'
        << "class_2_records\t" << data.class_sizes()[1] << '\n'
        << "min_supp\t" << params.min_support.to_string() << '\n'
        << "min_supp_count\t" << params.min_support.count_threshold(data.size()) << '\n'
        << "min_conf\t" << format_fixed(params.min_confidence) << '\n'
        << "threads\t" << cfg.threads << '\n';

  const auto start = Clock::now();
  std::string level_table;
  std::ostringstream levels_out;

  if (cfg.algo == "scr") {
    ScrRun run;
    const auto patterns = mine_scr_patterns(data, params, cfg.threads, &run);
    const double ms = elapsed_ms(start);
    write_to(cfg.out, out, [&](std::ostream& o) { write_patterns(o, schema, patterns); });
    if (!cfg.tsv.empty()) write_to(cfg.tsv, out, [&](std::ostream& o) { write_patterns_tsv(o, schema, patterns); });
    stats << "levels\t" << run.levels.size() << '\n'
          << "candidates\t" << candidate_total(run.levels) << '\n'
          << "scr_ruleitems\t" << run.kept.size() << '\n'
          << "rules\t" << count_pattern_rules(patterns) << '\n'
          << "patterns\t" << patterns.size() << '\n'
          << "wall_time_ms\t" << std::fixed << std::setprecision(3) << ms << '\n';
    write_level_table(levels_out, run.levels, &run.decisions);
  } else if (cfg.algo == "car") {
    const auto car = mine_car_ruleitems(data, params.min_support, cfg.threads);
    const auto rules = rules_from_ruleitems(car.ruleitems, car.frequent_condsets, car.n_total, params.min_confidence);
    const double ms = elapsed_ms(start);
    write_to(cfg.out, out, [&](std::ostream& o) { write_rules(o, schema, rules); });
    if (!cfg.tsv.empty()) write_to(cfg.tsv, out, [&](std::ostream& o) { write_rules_tsv(o, schema, rules); });
    stats << "levels\t" << car.levels.size() << '\n'
          << "candidates\t" << candidate_total(car.levels) << '\n'
          << "frequent_condsets\t" << car.frequent_condsets.size() << '\n'
          << "frequent_ruleitems\t" << car.ruleitems.size() << '\n'
          << "rules\t" << rules.size() << '\n'
          << "wall_time_ms\t" << std::fixed << std::setprecision(3) << ms << '\n';
    write_level_table(levels_out, car.levels, nullptr);
  } else if (cfg.algo == "apriori") {
    const auto apriori = mine_frequent_itemsets(data, params.min_support, cfg.threads);
    const auto rules = generate_rules(apriori.itemsets, apriori.n_total, params.min_confidence);
    const auto class_rules = classification_rules_via_postfilter(rules, schema);
    const double ms = elapsed_ms(start);
    write_to(cfg.out, out, [&](std::ostream& o) { write_association_rules(o, schema, rules); });
    if (!cfg.tsv.empty()) {
      write_to(cfg.tsv, out, [&](std::ostream& o) { write_rules_tsv(o, schema, class_rules); });
    }
    stats << "levels\t" << apriori.levels.size() << '\n'
          << "candidates\t" << candidate_total(apriori.levels) << '\n'
          << "frequent_itemsets\t" << apriori.itemsets.size() << '\n'
          << "association_rules\t" << rules.size() << '\n'
          << "rules\t" << class_rules.size() << '\n'
          << "wall_time_ms\t" << std::fixed << std::setprecision(3) << ms << '\n';
    write_level_table(levels_out, apriori.levels, nullptr);
  } else {
    throw ValidationError("unknown algorithm '" + cfg.algo + "'");
  }

  if (!cfg.stats.empty()) {
    write_to(cfg.stats, out, [&](std::ostream& o) { o << stats.str() << levels_out.str(); });
  }
  return kOk;
}

// ---------------------------------------------------------------- compare

struct CompareConfig {
  std::string data;
  std::string schema;
  SupportFlags support;
  std::string min_conf = "0.5";
  std::uint64_t cap = kDefaultCondsetCap;
  std::string diff = "-";
  unsigned threads = 1;
  bool corrupt_scr = false;
};

int cmd_compare(const CompareConfig& cfg, std::ostream& out) {
  const auto params = make_params(cfg.support, cfg.min_conf);
  const auto data = load_inputs(cfg.data, cfg.schema);
  const auto& schema = data.schema();

  const auto oracle = oracle_scr_patterns(data, params, cfg.cap);
  auto scr = mine_scr_patterns(data, params, cfg.threads);

  if (cfg.corrupt_scr) {
    if (!scr.empty()) {
      scr.pop_back();
    } else {
      // Nothing to drop: add a pattern the oracle cannot contain.
      ClassificationRule bogus{Condset{{0, 0}}, 0, {0, 0}, data.size()};
      if (schema.class_index() == 0) bogus.condset = Condset{{1, 0}};
      scr.push_back(make_pattern(bogus, ClassificationRule{bogus.condset, 1, {0, 0}, data.size()}));
    }
  }

  const auto diff = compare_pattern_sets(scr, oracle.patterns);
  write_to(cfg.diff, out, [&](std::ostream& o) {
    o << "scr_patterns\t" << scr.size() << '\n' << "oracle_patterns\t" << oracle.patterns.size() << '\n';
    o << "oracle_condsets\t" << oracle.condsets << '\n'
      << "oracle_frequent_ruleitems\t" << oracle.frequent_ruleitem_count << '\n'
      << "oracle_confident_rules\t" << oracle.confident_rules << '\n';
    o << "result\t" << (diff.empty() ? "equal" : "DIFFERENT") << '\n';
    for (const auto& p : diff.missing_from_a) o << "missing_from_scr\t" << format_pattern(schema, p) << '\n';
    for (const auto& p : diff.missing_from_b) o << "missing_from_oracle\t" << format_pattern(schema, p) << '\n';
  });
  return diff.empty() ? kOk : kMismatch;
}

// ---------------------------------------------------------------- gen

struct GenConfig {
  std::size_t attrs = 4;
  std::size_t values = 2;
  std::size_t invariant = 1;
  std::size_t records = 100;
  std::uint64_t seed = 1;
  double noise = 0.0;
  std::string out = "synthetic";
  std::string plant0;
  std::string plant1;
  std::string plant_conf = "0.8";
  std::string plant_supp = "0.2";
  bool no_decoy = false;
};

std::size_t attribute_index_from_name(std::string_view letters) {
  std::size_t n = 0;
  for (char c : letters) n = n * 26 + static_cast<std::size_t>(c - 'A' + 1);
  return n - 1;
}

// "A1,B2" in generated value names -> generator-coordinate items.
std::vector<Item> parse_generated_items(const std::string& text) {
  std::vector<Item> items;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t split = 0;
    while (split < token.size() && token[split] >= 'A' && token[split] <= 'Z') ++split;
    if (split == 0 || split == token.size()) {
      throw ValidationError("expected a generated value name like 'B2', got '" + token + "'");
    }
    const auto value = std::stoul(token.substr(split));
    if (value < 1) throw ValidationError("value numbers start at 1 in '" + token + "'");
    items.push_back({static_cast<AttrIndex>(attribute_index_from_name(token.substr(0, split))),
                     static_cast<ValueId>(value - 1)});
  }
  return items;
}

GenSpec make_gen_spec(std::size_t attrs, std::size_t values, std::size_t invariant, std::size_t records,
                      std::uint64_t seed, double noise) {
  if (invariant > attrs) throw ValidationError("--invariant cannot exceed --attrs");
  if (!(noise >= 0.0 && noise <= 1.0)) throw ValidationError("--noise must be in [0, 1]");
  auto spec = GenSpec::uniform(attrs, values, invariant, 0, seed);
  spec.records = {(records + 1) / 2, records / 2};
  spec.noise = noise;
  return spec;
}

void write_generated(const std::string& prefix, const Dataset& data, std::ostream& out) {
  write_to(prefix + ".csv", out, [&](std::ostream& o) { write_csv(o, data); });
  write_to(prefix + ".schema", out, [&](std::ostream& o) { write_schema(o, data.schema()); });
}

int cmd_gen(const GenConfig& cfg, std::ostream& out) {
  auto spec = make_gen_spec(cfg.attrs, cfg.values, cfg.invariant, cfg.records, cfg.seed, cfg.noise);
  if (!cfg.plant0.empty() || !cfg.plant1.empty()) {
    if (cfg.plant0.empty() || cfg.plant1.empty()) {
      throw ValidationError("--plant-rule0 and --plant-rule1 go together");
    }
    PlantedPattern p;
    p.rule0 = parse_generated_items(cfg.plant0);
    p.rule1 = parse_generated_items(cfg.plant1);
    p.confidence0 = p.confidence1 = parse_ratio(cfg.plant_conf);
    p.support = parse_ratio(cfg.plant_supp);
    p.decoy = !cfg.no_decoy;
    spec.planted = p;
  }
  const auto data = generate(spec);
  write_generated(cfg.out, data, out);
  out << "wrote " << cfg.out << ".csv (" << data.size() << " records) and " << cfg.out << ".schema\n";
  return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchConfig {
  std::size_t attrs = 6;
  std::size_t values = 3;
  std::size_t invariant = 2;
  std::size_t records = 400;
  std::size_t seeds = 5;
  std::uint64_t seed = 1;
  std::vector<std::string> min_supps{"0.05"};
  std::string min_conf = "0.5";
  bool planted = false;
  std::string plant_conf = "0.8";
  std::string plant_supp = "0.1";
  double noise = 0.0;
  std::string out = "-";
  std::string tsv;
  unsigned threads = 1;
};

struct BenchRow {
  std::uint64_t seed = 0;
  std::string min_supp;
  std::size_t records = 0;
  std::string scr_levels;
  PruningStats stats;
  std::size_t patterns = 0;
  bool subset_ok = true;
  double scr_ms = 0;
  double car_ms = 0;
};

// Default plant: shared value of the first invariant attribute, differing
// values of the first varying attribute.
PlantedPattern default_plant(const GenSpec& spec, const BenchConfig& cfg) {
  const auto first_varying = cfg.invariant;
  if (cfg.invariant < 1 || first_varying >= spec.domain_sizes.size() || cfg.values < 2) {
    throw ValidationError("--planted needs >= 1 invariant attribute, >= 1 varying attribute and >= 2 values");
  }
  PlantedPattern p;
  p.rule0 = {{0, 0}, {static_cast<AttrIndex>(first_varying), 0}};
  p.rule1 = {{0, 0}, {static_cast<AttrIndex>(first_varying), 1}};
  p.confidence0 = p.confidence1 = parse_ratio(cfg.plant_conf);
  p.support = parse_ratio(cfg.plant_supp);
  return p;
}

BenchRow bench_one(const BenchConfig& cfg, std::uint64_t seed, const std::string& min_supp) {
  auto spec = make_gen_spec(cfg.attrs, cfg.values, cfg.invariant, cfg.records, seed, cfg.noise);
  if (cfg.planted) spec.planted = default_plant(spec, cfg);
  const auto data = generate(spec);
  const MiningParams params{MinSupport::ratio(parse_ratio(min_supp)), parse_ratio(cfg.min_conf)};
  params.validate();

  BenchRow row;
  row.seed = seed;
  row.min_supp = min_supp;
  row.records = data.size();

  auto start = Clock::now();
  ScrRun run;
  const auto patterns = mine_scr_patterns(data, params, cfg.threads, &run);
  row.scr_ms = elapsed_ms(start);

  start = Clock::now();
  const auto car = mine_car_ruleitems(data, params.min_support, cfg.threads);
  const auto rules = rules_from_ruleitems(car.ruleitems, car.frequent_condsets, car.n_total, params.min_confidence);
  row.car_ms = elapsed_ms(start);

  row.stats = pruning_stats(run, count_pattern_rules(patterns), car, rules.size());
  row.patterns = patterns.size();
  for (std::size_t i = 0; i < run.levels.size(); ++i) {
    if (i) row.scr_levels += '/';
    row.scr_levels += std::to_string(run.levels[i].candidates.size());
  }
  for (const auto& k : run.kept) {
    const bool found = std::binary_search(
        car.frequent_condsets.begin(), car.frequent_condsets.end(), k,
        [](const CountedItemset& a, const CountedItemset& b) { return a.items < b.items; });
    row.subset_ok = row.subset_ok && found;
  }
  return row;
}

const std::vector<std::string> kBenchColumns{
    "seed",      "min_supp",  "records",       "scr_level_candidates", "scr_candidates", "car_candidates",
    "scr_ruleitems", "car_ruleitems", "ruleitem_ratio", "scr_rules", "car_rules", "rule_ratio",
    "patterns",  "subset_ok", "scr_ms",        "car_ms"};

std::vector<std::string> bench_cells(const BenchRow& r) {
  auto ms = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << v;
    return s.str();
  };
  return {std::to_string(r.seed),
          r.min_supp,
          std::to_string(r.records),
          r.scr_levels,
          std::to_string(r.stats.scr_candidates),
          std::to_string(r.stats.car_candidates),
          std::to_string(r.stats.scr_ruleitems),
          std::to_string(r.stats.car_ruleitems),
          format_percent(r.stats.ruleitem_ratio()),
          std::to_string(r.stats.scr_rules),
          std::to_string(r.stats.car_rules),
          format_percent(r.stats.rule_ratio()),
          std::to_string(r.patterns),
          r.subset_ok ? "yes" : "NO",
          ms(r.scr_ms),
          ms(r.car_ms)};
}

void write_bench_text(std::ostream& o, const std::vector<BenchRow>& rows) {
  std::vector<std::vector<std::string>> table{kBenchColumns};
  for (const auto& r : rows) table.push_back(bench_cells(r));
  std::vector<std::size_t> width(kBenchColumns.size(), 0);
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) o << "  ";
      o << std::setw(static_cast<int>(width[c])) << line[c];
    }
    o << '\n';
  }
  if (rows.empty()) return;

  PruningStats sum;
  for (const auto& r : rows) {
    sum.scr_ruleitems += r.stats.scr_ruleitems;
    sum.car_ruleitems += r.stats.car_ruleitems;
    sum.scr_rules += r.stats.scr_rules;
    sum.car_rules += r.stats.car_rules;
  }
  o << '\n' << "Totals over " << rows.size() << " runs:\n" << format_pruning_summary(sum);
}

void write_bench_tsv(std::ostream& o, const std::vector<BenchRow>& rows) {
  for (std::size_t c = 0; c < kBenchColumns.size(); ++c) o << (c ? "\t" : "") << kBenchColumns[c];
  o << '\n';
  for (const auto& r : rows) {
    const auto cells = bench_cells(r);
    for (std::size_t c = 0; c < cells.size(); ++c) o << (c ? "\t" : "") << cells[c];
    o << '\n';
  }
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out) {
  std::vector<BenchRow> rows;
  for (const auto& ms : cfg.min_supps) {
    for (std::size_t i = 0; i < cfg.seeds; ++i) rows.push_back(bench_one(cfg, cfg.seed + i, ms));
  }
  write_to(cfg.out, out, [&](std::ostream& o) { write_bench_text(o, rows); });
  if (!cfg.tsv.empty()) write_to(cfg.tsv, out, [&](std::ostream& o) { write_bench_tsv(o, rows); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mine Sets of Contrasting Rules (SCR) patterns from two-class categorical data"};
  app.require_subcommand(1);

  MineConfig mine;
  auto* mine_cmd = app.add_subcommand("mine", "mine patterns (scr) or rules (car, apriori)");
  mine_cmd->add_option("--data", mine.data, "CSV data file")->required();
  mine_cmd->add_option("--schema", mine.schema, "schema file (name:role per line)")->required();
  mine_cmd->add_option("--algo", mine.algo, "scr, car or apriori")
      ->check(CLI::IsMember({"scr", "car", "apriori"}));
  add_support_flags(mine_cmd, mine.support);
  mine_cmd->add_option("--min-conf", mine.min_conf, "minimum confidence (alpha)");
  mine_cmd->add_option("--out", mine.out, "pattern/rule file, '-' for stdout");
  mine_cmd->add_option("--tsv", mine.tsv, "tab-separated machine-readable copy");
  mine_cmd->add_option("--stats", mine.stats, "key/value statistics file");
  mine_cmd->add_option("--threads", mine.threads, "support-counting threads")->check(CLI::PositiveNumber);

  CompareConfig compare;
  auto* compare_cmd = app.add_subcommand("compare", "check SCR-Apriori against the exhaustive oracle");
  compare_cmd->add_option("--data", compare.data, "CSV data file")->required();
  compare_cmd->add_option("--schema", compare.schema, "schema file")->required();
  add_support_flags(compare_cmd, compare.support);
  compare_cmd->add_option("--min-conf", compare.min_conf, "minimum confidence (alpha)");
  compare_cmd->add_option("--cap", compare.cap, "maximum number of condsets the oracle may enumerate");
  compare_cmd->add_option("--diff", compare.diff, "report file, '-' for stdout");
  compare_cmd->add_option("--threads", compare.threads, "support-counting threads")->check(CLI::PositiveNumber);
  compare_cmd->add_flag("--corrupt-scr", compare.corrupt_scr, "test hook: perturb the SCR result")
      ->group("");

  GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic dataset and schema");
  gen_cmd->add_option("--attrs", gen.attrs, "number of attributes")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--values", gen.values, "values per attribute")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--invariant", gen.invariant, "leading attributes that are invariant");
  gen_cmd->add_option("--records", gen.records, "total records, split evenly over the two classes")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 32));
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--noise", gen.noise, "probability a record ignores the plan, in [0, 1]");
  gen_cmd->add_option("--out", gen.out, "output prefix; writes PREFIX.csv and PREFIX.schema");
  gen_cmd->add_option("--plant-rule0", gen.plant0, "antecedent predicting Cl1, e.g. A1,B1");
  gen_cmd->add_option("--plant-rule1", gen.plant1, "antecedent predicting Cl2, e.g. A1,B2");
  gen_cmd->add_option("--plant-conf", gen.plant_conf, "target confidence of both planted rules");
  gen_cmd->add_option("--plant-supp", gen.plant_supp, "share of all records matching each planted rule");
  gen_cmd->add_flag("--no-decoy", gen.no_decoy, "do not plant a class-exclusive invariant value");

  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "compare SCR-Apriori and CAR-Apriori on synthetic data");
  bench_cmd->add_option("--attrs", bench.attrs, "number of attributes")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--values", bench.values, "values per attribute")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--invariant", bench.invariant, "leading attributes that are invariant");
  bench_cmd->add_option("--records", bench.records, "records per dataset")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 32));
  bench_cmd->add_option("--seeds", bench.seeds, "datasets per support level");
  bench_cmd->add_option("--seed", bench.seed, "first seed");
  bench_cmd->add_option("--min-supp", bench.min_supps, "support ratios to sweep")->delimiter(',');
  bench_cmd->add_option("--min-conf", bench.min_conf, "minimum confidence (alpha)");
  bench_cmd->add_flag("--planted", bench.planted, "plant a contrasting pair and a decoy in every dataset");
  bench_cmd->add_option("--plant-conf", bench.plant_conf, "planted rule confidence");
  bench_cmd->add_option("--plant-supp", bench.plant_supp, "planted rule support");
  bench_cmd->add_option("--noise", bench.noise, "generator noise in [0, 1]");
  bench_cmd->add_option("--out", bench.out, "plain-text table, '-' for stdout");
  bench_cmd->add_option("--tsv", bench.tsv, "tab-separated table");
  bench_cmd->add_option("--threads", bench.threads, "support-counting threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (mine_cmd->parsed()) return cmd_mine(mine, out);
    if (compare_cmd->parsed()) return cmd_compare(compare, out);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace scrminer::cli
