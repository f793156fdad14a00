#include "ecsusy/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ecsusy {

using ordered_json = nlohmann::ordered_json;

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

long VerificationReport::passed() const {
  long n = 0;
  for (const auto& c : checks)
    if (c.pass) ++n;
  return n;
}

long VerificationReport::failed() const { return long(checks.size()) - passed(); }

std::string VerificationReport::to_json() const {
  ordered_json j;
  j["schema_version"] = schema_version;
  j["tool_version"] = tool_version;
  j["command"] = command;
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  j["config"] = cfg;
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["relation"] = c.relation;
    jc["residual"] = c.residual;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    jc["flagged"] = c.flagged;
    if (!c.note.empty()) jc["note"] = c.note;
    arr.push_back(jc);
  }
  j["checks"] = arr;
  j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j.dump(2) + "\n";
}

std::string VerificationReport::summary_text() const {
  std::ostringstream out;
  out << command << ": " << passed() << "/" << checks.size() << " checks passed";
  if (!all_pass()) {
    out << "; failing:";
    for (const auto& c : checks)
      if (!c.pass) out << " " << c.id;
  }
  out << "\n";
  return out.str();
}

CheckResult make_check(std::string id, std::string relation, double residual, double tolerance) {
  CheckResult c;
  c.id = std::move(id);
  c.relation = std::move(relation);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  return c;
}

CheckResult make_exceed_check(std::string id, std::string relation, double value,
                              double threshold) {
  CheckResult c;
  c.id = std::move(id);
  c.relation = std::move(relation);
  c.residual = value;
  c.tolerance = threshold;
  c.pass = value > threshold;
  c.note = "pass requires value above threshold";
  return c;
}

}  // namespace ecsusy
