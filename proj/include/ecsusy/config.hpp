#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace ecsusy {

struct RunConfig {
  long dim = 64;
  long m_max = 14;
  double tol_commutator = 1e-10;
  double tol_biorth = 1e-10;
  double tol_table = 1e-10;
  double tol_quadrature = 1e-8;
  double alpha = 0.5;
  double sigma = 0.5;
  double tau = 0.2;
  double grid_half_width = 12.0;
  long grid_points = 2001;
  std::uint64_t seed = 0x5eed0f0cull;
  std::vector<std::string> suites;

  void validate() const;
  std::map<std::string, std::string> echo() const;
};

std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);
void apply_config_entries(RunConfig& cfg, const std::map<std::string, std::string>& entries);
std::vector<std::string> split_suites(const std::string& csv);

}  // namespace ecsusy
