#pragma once

#include <chrono>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace gspin {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status status);

/// One line of a verification report. `witness` is set on failures and
/// names the offending basis element, monomial or matrix coordinate.
struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string message;
  nlohmann::json data = nlohmann::json::object();
  nlohmann::json witness = nullptr;
  double seconds = 0.0;

  bool passed() const noexcept { return status == Status::pass; }
};

CheckResult make_pass(std::string name, std::string message, nlohmann::json data = nlohmann::json::object());
CheckResult make_fail(std::string name, std::string message, nlohmann::json witness,
                      nlohmann::json data = nlohmann::json::object());

/// Runs `body` and stamps its wall time on the result.
template <typename Body>
CheckResult timed(Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = body();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool all_passed(std::span<const CheckResult> results);

nlohmann::json to_json(const CheckResult& result, bool include_timing);
nlohmann::json to_json(std::span<const CheckResult> results, bool include_timing);

}  // namespace gspin
