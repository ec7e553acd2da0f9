#include "gspin/report.hpp"

#include <algorithm>

namespace gspin {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

CheckResult make_pass(std::string name, std::string message, nlohmann::json data) {
  CheckResult r;
  r.name = std::move(name);
  r.status = Status::pass;
  r.message = std::move(message);
  r.data = std::move(data);
  return r;
}

CheckResult make_fail(std::string name, std::string message, nlohmann::json witness,
                      nlohmann::json data) {
  CheckResult r;
  r.name = std::move(name);
  r.status = Status::fail;
  r.message = std::move(message);
  r.witness = std::move(witness);
  r.data = std::move(data);
  return r;
}

bool all_passed(std::span<const CheckResult> results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status != Status::fail; });
}

nlohmann::json to_json(const CheckResult& result, bool include_timing) {
  nlohmann::json j = {{"name", result.name},
                      {"status", std::string(to_string(result.status))},
                      {"message", result.message}};
  if (!result.data.empty()) j["data"] = result.data;
  if (!result.witness.is_null()) j["witness"] = result.witness;
  if (include_timing) j["seconds"] = result.seconds;
  return j;
}

nlohmann::json to_json(std::span<const CheckResult> results, bool include_timing) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) arr.push_back(to_json(r, include_timing));
  return arr;
}

}  // namespace gspin
