#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "krein/point_interactions.hpp"
#include "krein/robin.hpp"

namespace krein {

// I/O failures and malformed/ill-shaped JSON. Physics invariant violations
// surface as std::invalid_argument from the model constructors instead.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelConfig {
  enum class Kind { point_interactions, robin_halfspace };

  Kind kind = Kind::point_interactions;
  std::vector<InteractionPoint> points;  // point models, sorted by position
  RobinProblem robin;                    // robin models

  PointModel make_point_model() const;
};

ModelConfig parse_model_config(const std::string& json_text);
ModelConfig load_model_config(const std::string& path);

}  // namespace krein
