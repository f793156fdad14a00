#include "ecsusy/suites.hpp"

#include <stdexcept>

namespace ecsusy {

std::vector<std::string> known_suites(const std::string& command) {
  if (command == "verify-core")
    return {"fock",   "boson",   "pseudoboson", "quadruple", "triples",
            "casimir", "eigen",  "dual",        "intertwine"};
  if (command == "verify-tables") return {"families", "rows", "dual", "interleave"};
  if (command == "verify-deform") return {"diagonal", "tilted", "generic", "special"};
  if (command == "shifted-ho") return {"grid", "families", "ladder", "tilted", "bridge"};
  throw std::invalid_argument("known_suites: unknown command '" + command + "'");
}

}  // namespace ecsusy
