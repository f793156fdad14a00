#pragma once

#include <map>
#include <string>
#include <vector>

namespace ecsusy {

struct CheckResult {
  std::string id;
  std::string relation;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool flagged = false;
  std::string note;
};

struct VerificationReport {
  std::string schema_version = "1";
  std::string tool_version = "0.1.0";
  std::string command;
  std::map<std::string, std::string> config;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  long passed() const;
  long failed() const;
  std::string to_json() const;
  std::string summary_text() const;
};

CheckResult make_check(std::string id, std::string relation, double residual, double tolerance);
CheckResult make_exceed_check(std::string id, std::string relation, double value,
                              double threshold);

}  // namespace ecsusy
