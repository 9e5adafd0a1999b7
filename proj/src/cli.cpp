#include "verlinde/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "verlinde/errors.hpp"
#include "verlinde/number_theory.hpp"
#include "verlinde/report.hpp"

namespace verlinde {
namespace {

struct Options {
  std::vector<std::string> types;
  std::vector<std::string> ranks;
  std::int64_t level = 0;
  std::int64_t level_min = 0;
  std::int64_t level_max = 0;
  std::vector<std::uint64_t> primes;
  std::string engine;
  std::string format;
  std::string out_path;
  std::string reading = "literal";
  bool allow_flagged = false;
};

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string piece;
    while (std::getline(ss, piece, ','))
      if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

std::vector<int> parse_ranks(const std::vector<std::string>& specs) {
  std::vector<int> ranks;
  for (const auto& spec : split_commas(specs)) {
    const auto dash = spec.find('-');
    try {
      if (dash == std::string::npos) {
        ranks.push_back(std::stoi(spec));
      } else {
        const int lo = std::stoi(spec.substr(0, dash));
        const int hi = std::stoi(spec.substr(dash + 1));
        if (hi < lo) throw std::invalid_argument("empty rank range");
        for (int r = lo; r <= hi; ++r) ranks.push_back(r);
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad rank specification '" + spec + "'");
    }
  }
  return ranks;
}

// Tokens: a bare series letter (combined with --rank), a name such as "E8", or a
// same-series range such as "A1-A4". F and G default to their only rank.
std::vector<LieType> resolve_types(const Options& opt) {
  const auto ranks = parse_ranks(opt.ranks);
  std::vector<LieType> types;
  for (const auto& spec : split_commas(opt.types)) {
    if (const auto dash = spec.find('-'); dash != std::string::npos) {
      const LieType lo = parse_lie_type(spec.substr(0, dash));
      const LieType hi = parse_lie_type(spec.substr(dash + 1));
      if (lo.series != hi.series || hi.rank < lo.rank) throw std::invalid_argument("bad type range '" + spec + "'");
      for (int r = lo.rank; r <= hi.rank; ++r) types.push_back(make_lie_type(lo.series, r));
      continue;
    }
    if (spec.size() > 1) {
      types.push_back(parse_lie_type(spec));
      continue;
    }
    const Series series = parse_series(spec.front());
    if (ranks.empty()) {
      if (series == Series::F) types.push_back({series, 4});
      else if (series == Series::G) types.push_back({series, 2});
      else throw std::invalid_argument("--rank is required for series " + spec);
      continue;
    }
    for (int r : ranks) types.push_back(make_lie_type(series, r));
  }
  if (types.empty()) throw std::invalid_argument("--type is required");
  return types;
}

LieType single_type(const Options& opt) {
  const auto types = resolve_types(opt);
  if (types.size() != 1) throw std::invalid_argument("this command takes exactly one Lie type");
  return types.front();
}

void require_level(const Options& opt) {
  if (opt.level < 1) throw std::invalid_argument("--level must be >= 1");
}

std::pair<std::int64_t, std::int64_t> level_range(const Options& opt) {
  if (opt.level > 0) {
    if (opt.level_min > 0 || opt.level_max > 0) throw std::invalid_argument("use either --level or --level-min/--level-max");
    return {opt.level, opt.level};
  }
  if (opt.level_min < 1 || opt.level_max < opt.level_min)
    throw std::invalid_argument("need --level or a nonempty --level-min/--level-max range with level-min >= 1");
  return {opt.level_min, opt.level_max};
}

Json query_base(const std::string& command) {
  Json q = Json::object();
  q["command"] = command;
  return q;
}

Json envelope(Json query, Json result) {
  return Json{{"query", std::move(query)}, {"result", std::move(result)}, {"provenance", to_json(current_provenance())}};
}

std::string csv_row(LieType t, std::int64_t m) {
  return std::string(1, static_cast<char>(t.series)) + "," + std::to_string(t.rank) + "," + std::to_string(m);
}

std::string render_count(const Options& opt) {
  const LieType type = single_type(opt);
  require_level(opt);
  if (opt.primes.size() != 1) throw std::invalid_argument("count takes exactly one --prime");
  const std::uint64_t p = opt.primes.front();
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const auto reading = parse_reading(opt.reading);

  std::uint64_t value = 0;
  if (opt.engine == "oracle") {
    value = completion_profile(build_root_system(type), opt.level).multiplicity(p);
  } else if (opt.engine == "formula") {
    value = count(type, opt.level, p, reading);
  } else {
    throw std::invalid_argument("--engine must be oracle or formula");
  }

  switch (parse_format(opt.format)) {
    case OutputFormat::text: return std::to_string(value) + "\n";
    case OutputFormat::csv:
      return "type,rank,level,prime,engine,count\n" + csv_row(type, opt.level) + "," + std::to_string(p) + "," +
             opt.engine + "," + std::to_string(value) + "\n";
    case OutputFormat::json: {
      Json q = query_base("count");
      q["type"] = to_string(type);
      q["level"] = opt.level;
      q["prime"] = p;
      q["engine"] = opt.engine;
      q["reading"] = to_string(reading);
      return envelope(std::move(q), Json{{"count", value}}).dump(2) + "\n";
    }
  }
  return {};
}

std::string render_completion(const Options& opt) {
  const LieType type = single_type(opt);
  require_level(opt);
  const CompletionProfile profile = completion_profile(build_root_system(type), opt.level);
  const Json result = to_json(profile);
  switch (parse_format(opt.format)) {
    case OutputFormat::text:
      return to_string(type) + " level " + std::to_string(opt.level) + ": " + profile.render() + "\n" +
             result.at("counts").dump() + "\nregular weights: " + std::to_string(profile.regular_total) +
             ", unclassified: " + std::to_string(profile.unclassified) + "\n";
    case OutputFormat::csv: {
      std::string s = "type,rank,level,prime,count\n";
      for (const auto& [p, k] : profile.counts)
        s += csv_row(type, opt.level) + "," + std::to_string(p) + "," + std::to_string(k) + "\n";
      return s;
    }
    case OutputFormat::json: {
      Json q = query_base("completion");
      q["type"] = to_string(type);
      q["level"] = opt.level;
      return envelope(std::move(q), result).dump(2) + "\n";
    }
  }
  return {};
}

std::string render_enumerate(const Options& opt) {
  const LieType type = single_type(opt);
  require_level(opt);
  const RegularWeightSet set = enumerate_regular_weights(build_root_system(type), opt.level);
  switch (parse_format(opt.format)) {
    case OutputFormat::text: return to_json(set).at("weights").dump() + "\n";
    case OutputFormat::csv: {
      std::string s;
      for (int i = 1; i <= type.rank; ++i) s += (i > 1 ? ",c" : "c") + std::to_string(i);
      s += "\n";
      for (const auto& w : set.weights) {
        for (int i = 0; i < w.rank(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
        s += "\n";
      }
      return s;
    }
    case OutputFormat::json: {
      Json q = query_base("enumerate");
      q["type"] = to_string(type);
      q["level"] = opt.level;
      return envelope(std::move(q), to_json(set)).dump(2) + "\n";
    }
  }
  return {};
}

RunConfig sweep_config(const Options& opt) {
  RunConfig config;
  config.types = resolve_types(opt);
  std::tie(config.level_min, config.level_max) = level_range(opt);
  config.primes = opt.primes;
  config.reading = parse_reading(opt.reading);
  config.allow_flagged = opt.allow_flagged;
  config.format = parse_format(opt.format);
  if (!opt.out_path.empty()) config.out_path = opt.out_path;
  config.check();
  return config;
}

Json sweep_query(const std::string& command, const RunConfig& config) {
  Json types = Json::array();
  for (const auto& t : config.types) types.push_back(to_string(t));
  Json primes = Json::array();
  for (auto p : config.primes) primes.push_back(p);
  Json q = Json::object();
  q["command"] = command;
  q["types"] = std::move(types);
  q["level_min"] = config.level_min;
  q["level_max"] = config.level_max;
  q["primes"] = config.primes.empty() ? Json("candidate") : std::move(primes);
  q["reading"] = to_string(config.reading);
  return q;
}

std::string render_verify(const Options& opt, int& exit_code) {
  const RunConfig config = sweep_config(opt);
  const CrossCheckReport report = run_verify(config);
  exit_code = report.exit_code(config.allow_flagged);
  switch (config.format) {
    case OutputFormat::csv: return to_csv(report);
    case OutputFormat::text: {
      std::ostringstream os;
      os << "checked " << report.summary.total << " (type, level, prime) points: " << report.summary.matches
         << " match, " << report.summary.mismatches << " mismatch";
      if (report.summary.flagged_mismatches) os << " (" << report.summary.flagged_mismatches << " flagged)";
      os << "\n";
      for (const auto& e : report.entries) {
        if (e.match) continue;
        os << "MISMATCH " << to_string(e.type) << " m=" << e.level << " p=" << e.prime << ": oracle " << e.oracle_count
           << ", formula " << e.formula_count << (e.flagged ? " [flagged]" : "") << "\n";
      }
      return os.str();
    }
    case OutputFormat::json: {
      Json q = sweep_query("verify", config);
      q["allow_flagged"] = config.allow_flagged;
      return Json{{"query", std::move(q)}, {"result", to_json(report)}, {"provenance", to_json(report.provenance)}}.dump(2) +
             "\n";
    }
  }
  return {};
}

std::string render_table(const Options& opt) {
  const RunConfig config = sweep_config(opt);
  const std::string engine = opt.engine.empty() ? "both" : opt.engine;
  if (engine != "oracle" && engine != "formula" && engine != "both")
    throw std::invalid_argument("--engine must be oracle, formula or both");
  const bool want_oracle = engine != "formula";
  const bool want_formula = engine != "oracle";

  struct Row {
    LieType type;
    std::int64_t level;
    std::uint64_t prime;
    std::string engine;
    std::uint64_t count;
  };
  std::vector<Row> rows;
  for (const auto& type : config.types) {
    const RootSystem rs = build_root_system(type);
    for (std::int64_t m = config.level_min; m <= config.level_max; ++m) {
      std::optional<CompletionProfile> profile;
      if (want_oracle) profile = completion_profile(rs, m);
      const auto primes = config.primes.empty() ? candidate_primes(rs, m) : config.primes;
      for (auto p : primes) {
        if (want_oracle) rows.push_back({type, m, p, "oracle", profile->multiplicity(p)});
        if (want_formula) rows.push_back({type, m, p, "formula", count(type, m, p, config.reading)});
      }
    }
  }

  switch (config.format) {
    case OutputFormat::csv: {
      std::string s = "type,rank,level,prime,engine,count\n";
      for (const auto& r : rows)
        s += csv_row(r.type, r.level) + "," + std::to_string(r.prime) + "," + r.engine + "," + std::to_string(r.count) + "\n";
      return s;
    }
    case OutputFormat::text: {
      std::ostringstream os;
      for (const auto& r : rows)
        os << to_string(r.type) << "\tm=" << r.level << "\tp=" << r.prime << "\t" << r.engine << "\t" << r.count << "\n";
      return os.str();
    }
    case OutputFormat::json: {
      Json result = Json::array();
      for (const auto& r : rows)
        result.push_back(Json{{"type", to_string(r.type)},
                              {"level", r.level},
                              {"prime", r.prime},
                              {"engine", r.engine},
                              {"count", r.count}});
      Json q = sweep_query("table", config);
      q["engine"] = engine;
      return envelope(std::move(q), Json{{"rows", std::move(result)}}).dump(2) + "\n";
    }
  }
  return {};
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file " + opt.out_path);
  file << text;
  if (!file) throw std::runtime_error("failed writing " + opt.out_path);
}

void add_type_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--type", opt.types, "Lie series (A..G) or full names like E8; comma-separated")->required();
  cmd->add_option("--rank", opt.ranks, "rank, list or range such as 2-4");
}

void add_common_options(CLI::App* cmd, Options& opt, const std::string& default_format) {
  cmd->add_option("--format", opt.format, "json, csv or text (default " + default_format + ")")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", opt.out_path, "write output to this file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Completion of level-m Verlinde algebras at the augmentation ideal", "verlinde"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Options opt;
  auto* count_cmd = app.add_subcommand("count", "N(G, m, p) from the oracle or the per-type formula");
  add_type_options(count_cmd, opt);
  count_cmd->add_option("--level", opt.level, "level m")->required();
  count_cmd->add_option("--prime", opt.primes, "prime p")->required();
  count_cmd->add_option("--engine", opt.engine, "oracle or formula (default formula)")->check(CLI::IsMember({"oracle", "formula"}));
  count_cmd->add_option("--e6e7-reading", opt.reading, "literal or alternate")
      ->check(CLI::IsMember({"literal", "alternate"}));
  add_common_options(count_cmd, opt, "text");

  auto* completion_cmd = app.add_subcommand("completion", "completion profile sum_p Z_p^N(G,m,p)");
  add_type_options(completion_cmd, opt);
  completion_cmd->add_option("--level", opt.level, "level m")->required();
  add_common_options(completion_cmd, opt, "text");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list level-m regular weights");
  add_type_options(enumerate_cmd, opt);
  enumerate_cmd->add_option("--level", opt.level, "level m")->required();
  add_common_options(enumerate_cmd, opt, "text");

  auto* verify_cmd = app.add_subcommand("verify", "cross-check oracle against per-type formulas");
  add_type_options(verify_cmd, opt);
  verify_cmd->add_option("--level", opt.level, "single level");
  verify_cmd->add_option("--level-min", opt.level_min, "first level");
  verify_cmd->add_option("--level-max", opt.level_max, "last level");
  verify_cmd->add_option("--prime", opt.primes, "explicit primes (default: candidate primes)")->delimiter(',');
  verify_cmd->add_option("--e6e7-reading", opt.reading, "literal or alternate")
      ->check(CLI::IsMember({"literal", "alternate"}));
  verify_cmd->add_flag("--allow-flagged", opt.allow_flagged, "E6/E7 mismatches under the alternate reading pass");
  add_common_options(verify_cmd, opt, "json");

  auto* table_cmd = app.add_subcommand("table", "N(G, m, p) rows over a grid");
  add_type_options(table_cmd, opt);
  table_cmd->add_option("--level", opt.level, "single level");
  table_cmd->add_option("--level-min", opt.level_min, "first level");
  table_cmd->add_option("--level-max", opt.level_max, "last level");
  table_cmd->add_option("--prime", opt.primes, "explicit primes (default: candidate primes)")->delimiter(',');
  table_cmd->add_option("--engine", opt.engine, "oracle, formula or both");
  table_cmd->add_option("--e6e7-reading", opt.reading, "literal or alternate")
      ->check(CLI::IsMember({"literal", "alternate"}));
  add_common_options(table_cmd, opt, "csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // help and --version land here with a success code
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    int code = kExitOk;
    std::string text;
    auto default_format = [&](const char* format) {
      if (opt.format.empty()) opt.format = format;
    };
    if (count_cmd->parsed()) {
      default_format("text");
      if (opt.engine.empty()) opt.engine = "formula";
      text = render_count(opt);
    } else if (completion_cmd->parsed()) {
      default_format("text");
      text = render_completion(opt);
    } else if (enumerate_cmd->parsed()) {
      default_format("text");
      text = render_enumerate(opt);
    } else if (verify_cmd->parsed()) {
      default_format("json");
      text = render_verify(opt, code);
    } else {
      default_format("csv");
      text = render_table(opt);
    }
    emit(text, opt, out);
    return code;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::overflow_error& e) {
    err << "internal limit exceeded: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace verlinde
