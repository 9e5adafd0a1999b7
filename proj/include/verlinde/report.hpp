#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "verlinde/alcove.hpp"
#include "verlinde/completion.hpp"
#include "verlinde/root_system.hpp"
#include "verlinde/type_counters.hpp"

namespace verlinde {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "verlinde";
inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { json, csv, text };
OutputFormat parse_format(const std::string& name);

/// A verification sweep: every type in `types`, every level in [level_min, level_max],
/// and either the candidate primes of each (type, level) or an explicit prime list.
struct RunConfig {
  std::vector<LieType> types;
  std::int64_t level_min = 1;
  std::int64_t level_max = 1;
  /// empty -> candidate primes
  std::vector<std::uint64_t> primes;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out_path;
  ExceptionalReading reading = ExceptionalReading::literal;
  /// mismatches confined to E_6 / E_7 under the alternate reading do not fail the sweep
  bool allow_flagged = false;

  /// Throws std::invalid_argument on an empty type list, an empty or non-positive level range,
  /// or a non-prime entry in `primes`.
  void check() const;
};

struct CrossCheckEntry {
  LieType type;
  std::int64_t level = 0;
  std::uint64_t prime = 0;
  std::uint64_t oracle_count = 0;
  std::uint64_t formula_count = 0;
  bool match = false;
  /// mismatch attributable to the configured E_6 / E_7 reading
  bool flagged = false;
};

struct CrossCheckSummary {
  std::uint64_t total = 0;
  std::uint64_t matches = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t flagged_mismatches = 0;
};

struct Provenance {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::string timestamp;
};

struct CrossCheckReport {
  std::vector<CrossCheckEntry> entries;
  CrossCheckSummary summary;
  ExceptionalReading reading = ExceptionalReading::literal;
  Provenance provenance;

  /// 0 when every entry matches (or only flagged ones fail and allow_flagged is set), 2 otherwise.
  int exit_code(bool allow_flagged) const;
};

using FormulaCounter = std::function<std::uint64_t(LieType, std::int64_t, std::uint64_t, ExceptionalReading)>;

/// Compares completion_profile counts against `formula` (the per-type counters by default)
/// over the configured grid. Entries are ordered by (type as given, level, prime).
CrossCheckReport run_verify(const RunConfig& config, const FormulaCounter& formula = {});

Provenance current_provenance();

// JSON forms. Completion profiles use string-keyed prime -> count maps.
Json to_json(const Weight& w);
Json to_json(const RegularWeightSet& set);
Json to_json(const CompletionProfile& profile);
Json to_json(const CrossCheckReport& report);
Json to_json(const Provenance& provenance);

RegularWeightSet regular_weight_set_from_json(const Json& j);
CompletionProfile completion_profile_from_json(const Json& j);
CrossCheckReport cross_check_report_from_json(const Json& j);

/// CSV with header type,rank,level,prime,oracle,formula,match,flagged
std::string to_csv(const CrossCheckReport& report);

}  // namespace verlinde
