#include "remo/config.hpp"

namespace remo {

std::string_view to_string(Algorithm a) {
  return a == Algorithm::Moead ? "moead" : "nsga2";
}

Algorithm algorithm_from_string(std::string_view name) {
  if (name == "moead") return Algorithm::Moead;
  if (name == "nsga2") return Algorithm::Nsga2;
  throw ConfigError("unknown algorithm: " + std::string(name));
}

}  // namespace remo
