#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gspin/error.hpp"
#include "gspin/field_algebra.hpp"
#include "gspin/group.hpp"
#include "gspin/report.hpp"

namespace gspin {

/// Every check name accepted by RunConfig::checks, in execution order.
const std::vector<std::string>& all_checks();

struct RunConfig {
  /// Built-in "family:param"; ignored when group_file is set.
  std::string group = "symmetric:3";
  std::optional<std::string> group_file;
  std::string subgroup = "full";
  std::string interval = "1/2:2";
  std::vector<std::string> checks;  // empty = all
  std::string family = "std";        // std | shifted
  std::optional<std::string> k;      // site; defaults to the first site with a link to its right
  std::optional<std::string> l;      // site; defaults to k
  std::string monotone_from = "trivial";
  double tol = 1e-9;
  std::uint64_t cap = kDefaultMonomialCap;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

struct Report {
  nlohmann::json group;
  nlohmann::json subgroup;
  std::string interval;
  nlohmann::json family;
  std::vector<CheckResult> checks;
  /// "p/q" of c in Index z_H = c·I, when the index check succeeded.
  std::optional<std::string> index_scalar;

  bool passed() const { return all_passed(checks); }
};

/// Parses the configuration, builds the contexts and runs the requested
/// checks. Context problems (bad group, non-normal subgroup, interval,
/// positions, dimension cap) throw Error; check failures are report entries.
Report run(const RunConfig& config);

/// Deterministic serializations; timings only when asked for.
nlohmann::json to_json(const Report& report, bool include_timing = false);
std::string to_text(const Report& report);

/// JSON for a context error: {"schema": 1, "error": {kind, message, witness}}.
nlohmann::json error_json(const Error& error);

/// 0 when no entry failed, 1 otherwise.
inline int exit_code(const Report& report) { return report.passed() ? 0 : 1; }

}  // namespace gspin
