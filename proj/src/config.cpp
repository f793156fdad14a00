#include "ecsusy/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ecsusy {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string fmt_double(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for " + key + ": '" + value + "'");
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer value for " + key + ": '" + value + "'");
  }
}

}  // namespace

void RunConfig::validate() const {
  if (dim < 8) throw std::invalid_argument("config: dim must be at least 8");
  if (m_max < 0) throw std::invalid_argument("config: m_max must be non-negative");
  if (dim < 4 * m_max + 8)
    throw std::invalid_argument("config: dim must be at least 4*m_max + 8");
  for (double t : {tol_commutator, tol_biorth, tol_table, tol_quadrature})
    if (!(t > 0.0)) throw std::invalid_argument("config: tolerances must be positive");
  if (!(grid_half_width > 0.0))
    throw std::invalid_argument("config: grid_half_width must be positive");
  if (grid_points < 16) throw std::invalid_argument("config: grid_points must be at least 16");
}

std::map<std::string, std::string> RunConfig::echo() const {
  std::map<std::string, std::string> out;
  out["dim"] = std::to_string(dim);
  out["m_max"] = std::to_string(m_max);
  out["tol_commutator"] = fmt_double(tol_commutator);
  out["tol_biorth"] = fmt_double(tol_biorth);
  out["tol_table"] = fmt_double(tol_table);
  out["tol_quadrature"] = fmt_double(tol_quadrature);
  out["alpha"] = fmt_double(alpha);
  out["sigma"] = fmt_double(sigma);
  out["tau"] = fmt_double(tau);
  out["grid_half_width"] = fmt_double(grid_half_width);
  out["grid_points"] = std::to_string(grid_points);
  out["seed"] = std::to_string(seed);
  std::string joined;
  for (const auto& s : suites) {
    if (!joined.empty()) joined += ",";
    joined += s;
  }
  out["suites"] = joined;
  return out;
}

std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path.string());
  std::map<std::string, std::string> entries;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: missing '=' at " + path.string() + ":" +
                                  std::to_string(line_no));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config: empty key at " + path.string() + ":" +
                                  std::to_string(line_no));
    entries[key] = value;
  }
  return entries;
}

void apply_config_entries(RunConfig& cfg, const std::map<std::string, std::string>& entries) {
  for (const auto& [key, value] : entries) {
    if (key == "dim")
      cfg.dim = parse_long(key, value);
    else if (key == "m_max")
      cfg.m_max = parse_long(key, value);
    else if (key == "tol_commutator")
      cfg.tol_commutator = parse_double(key, value);
    else if (key == "tol_biorth")
      cfg.tol_biorth = parse_double(key, value);
    else if (key == "tol_table")
      cfg.tol_table = parse_double(key, value);
    else if (key == "tol_quadrature")
      cfg.tol_quadrature = parse_double(key, value);
    else if (key == "alpha")
      cfg.alpha = parse_double(key, value);
    else if (key == "sigma")
      cfg.sigma = parse_double(key, value);
    else if (key == "tau")
      cfg.tau = parse_double(key, value);
    else if (key == "grid_half_width")
      cfg.grid_half_width = parse_double(key, value);
    else if (key == "grid_points")
      cfg.grid_points = parse_long(key, value);
    else if (key == "seed")
      cfg.seed = std::uint64_t(std::stoull(value));
    else if (key == "suites")
      cfg.suites = split_suites(value);
    else
      throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

std::vector<std::string> split_suites(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace ecsusy
