#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ecsusy/config.hpp"
#include "ecsusy/report.hpp"

namespace ecsusy {

VerificationReport run_core_suite(const RunConfig& cfg);
VerificationReport run_tables_suite(const RunConfig& cfg);
VerificationReport run_deform_suite(const RunConfig& cfg);
VerificationReport run_shifted_ho_suite(const RunConfig& cfg);

std::vector<std::string> known_suites(const std::string& command);

inline bool suite_selected(const RunConfig& cfg, const std::string& name) {
  if (cfg.suites.empty()) return true;
  return std::find(cfg.suites.begin(), cfg.suites.end(), name) != cfg.suites.end();
}

}  // namespace ecsusy
