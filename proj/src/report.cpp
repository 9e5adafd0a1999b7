#include "verlinde/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include "verlinde/number_theory.hpp"

namespace verlinde {
namespace {

bool is_flaggable(LieType type) { return type.series == Series::E && (type.rank == 6 || type.rank == 7); }

std::uint64_t parse_u64_key(const std::string& key) {
  std::size_t used = 0;
  const auto value = std::stoull(key, &used);
  if (used != key.size()) throw std::invalid_argument("bad prime key '" + key + "'");
  return value;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw std::invalid_argument("format must be json, csv or text, got '" + name + "'");
}

void RunConfig::check() const {
  if (types.empty()) throw std::invalid_argument("no Lie types selected");
  for (const auto& t : types) (void)make_lie_type(t.series, t.rank);
  if (level_min < 1) throw std::invalid_argument("level range must start at >= 1");
  if (level_max < level_min) throw std::invalid_argument("empty level range");
  for (auto p : primes)
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

int CrossCheckReport::exit_code(bool allow_flagged) const {
  const auto blocking = allow_flagged ? summary.mismatches - summary.flagged_mismatches : summary.mismatches;
  return blocking == 0 ? 0 : 2;
}

CrossCheckReport run_verify(const RunConfig& config, const FormulaCounter& formula) {
  config.check();
  const FormulaCounter counter =
      formula ? formula : FormulaCounter([](LieType t, std::int64_t m, std::uint64_t p, ExceptionalReading r) {
        return count(t, m, p, r);
      });

  CrossCheckReport report;
  report.reading = config.reading;
  report.provenance = current_provenance();
  for (const auto& type : config.types) {
    const RootSystem rs = build_root_system(type);
    for (std::int64_t m = config.level_min; m <= config.level_max; ++m) {
      const CompletionProfile profile = completion_profile(rs, m);
      const auto primes = config.primes.empty() ? candidate_primes(rs, m) : config.primes;
      for (auto p : primes) {
        CrossCheckEntry e;
        e.type = type;
        e.level = m;
        e.prime = p;
        e.oracle_count = profile.multiplicity(p);
        e.formula_count = counter(type, m, p, config.reading);
        e.match = e.oracle_count == e.formula_count;
        e.flagged = !e.match && config.reading == ExceptionalReading::alternate && is_flaggable(type);
        report.entries.push_back(e);

        ++report.summary.total;
        if (e.match) {
          ++report.summary.matches;
        } else {
          ++report.summary.mismatches;
          if (e.flagged) ++report.summary.flagged_mismatches;
        }
      }
    }
  }
  return report;
}

Provenance current_provenance() {
  Provenance p;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  p.timestamp = buf;
  return p;
}

Json to_json(const Weight& w) {
  Json arr = Json::array();
  for (auto c : w.coords()) arr.push_back(c);
  return arr;
}

Json to_json(const RegularWeightSet& set) {
  Json weights = Json::array();
  for (const auto& w : set.weights) weights.push_back(to_json(w));
  return Json{{"level", set.level}, {"count", set.weights.size()}, {"weights", std::move(weights)}};
}

Json to_json(const CompletionProfile& profile) {
  Json counts = Json::object();
  for (const auto& [p, k] : profile.counts) counts[std::to_string(p)] = k;
  return Json{{"group", to_string(profile.group)},
              {"level", profile.level},
              {"counts", std::move(counts)},
              {"regular_total", profile.regular_total},
              {"unclassified", profile.unclassified},
              {"rendered", profile.render()}};
}

Json to_json(const Provenance& provenance) {
  return Json{{"tool", provenance.tool}, {"version", provenance.version}, {"timestamp", provenance.timestamp}};
}

Json to_json(const CrossCheckReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"type", to_string(e.type)},
                           {"level", e.level},
                           {"prime", e.prime},
                           {"oracle_count", e.oracle_count},
                           {"formula_count", e.formula_count},
                           {"match", e.match},
                           {"flagged", e.flagged}});
  }
  return Json{{"reading", to_string(report.reading)},
              {"entries", std::move(entries)},
              {"summary",
               {{"total", report.summary.total},
                {"matches", report.summary.matches},
                {"mismatches", report.summary.mismatches},
                {"flagged_mismatches", report.summary.flagged_mismatches}}}};
}

RegularWeightSet regular_weight_set_from_json(const Json& j) {
  RegularWeightSet set;
  set.level = j.at("level").get<std::int64_t>();
  for (const auto& w : j.at("weights")) set.weights.emplace_back(w.get<std::vector<std::int64_t>>());
  return set;
}

CompletionProfile completion_profile_from_json(const Json& j) {
  CompletionProfile profile;
  profile.group = parse_lie_type(j.at("group").get<std::string>());
  profile.level = j.at("level").get<std::int64_t>();
  for (const auto& [key, value] : j.at("counts").items()) profile.counts[parse_u64_key(key)] = value.get<std::uint64_t>();
  profile.regular_total = j.at("regular_total").get<std::uint64_t>();
  profile.unclassified = j.at("unclassified").get<std::uint64_t>();
  return profile;
}

CrossCheckReport cross_check_report_from_json(const Json& j) {
  CrossCheckReport report;
  report.reading = parse_reading(j.at("reading").get<std::string>());
  for (const auto& e : j.at("entries")) {
    CrossCheckEntry entry;
    entry.type = parse_lie_type(e.at("type").get<std::string>());
    entry.level = e.at("level").get<std::int64_t>();
    entry.prime = e.at("prime").get<std::uint64_t>();
    entry.oracle_count = e.at("oracle_count").get<std::uint64_t>();
    entry.formula_count = e.at("formula_count").get<std::uint64_t>();
    entry.match = e.at("match").get<bool>();
    entry.flagged = e.at("flagged").get<bool>();
    report.entries.push_back(entry);
  }
  const auto& s = j.at("summary");
  report.summary.total = s.at("total").get<std::uint64_t>();
  report.summary.matches = s.at("matches").get<std::uint64_t>();
  report.summary.mismatches = s.at("mismatches").get<std::uint64_t>();
  report.summary.flagged_mismatches = s.at("flagged_mismatches").get<std::uint64_t>();
  return report;
}

std::string to_csv(const CrossCheckReport& report) {
  std::ostringstream os;
  os << "type,rank,level,prime,oracle,formula,match,flagged\n";
  for (const auto& e : report.entries) {
    os << static_cast<char>(e.type.series) << ',' << e.type.rank << ',' << e.level << ',' << e.prime << ','
       << e.oracle_count << ',' << e.formula_count << ',' << (e.match ? "true" : "false") << ','
       << (e.flagged ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace verlinde
