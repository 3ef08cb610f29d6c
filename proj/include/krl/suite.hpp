#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace krl {

struct Check {
  std::string name;
  std::string op;  // "<=", ">=" or "==" between value and threshold
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;

  static Check le(std::string name, double value, double threshold, std::string detail = {});
  static Check ge(std::string name, double value, double threshold, std::string detail = {});
  // Exact count comparison, e.g. number of violations == 0.
  static Check eq(std::string name, double value, double expected, std::string detail = {});
  static Check failed(std::string name, std::string detail);
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;  // wall time, never serialized
  double time_limit = 0.0;
  bool pass() const;
};

inline constexpr int kCriterionCount = 8;

// Criterion ids 1..8. Randomized inputs are drawn from seed; a throwing check is recorded as failed.
CriterionReport run_criterion(int id, std::uint64_t seed);
std::vector<CriterionReport> run_suite(std::uint64_t seed, const std::vector<int>& only = {});

// Individual groups, also used by the command line front end.
std::vector<Check> tricomi_checks(double A, std::uint64_t seed);

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const CriterionReport& r);
// Deterministic: no timing fields.
nlohmann::json suite_report(const std::vector<CriterionReport>& reports, std::uint64_t seed);

}  // namespace krl
