#include "krein/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace krein {

namespace {

using nlohmann::json;

double number_field(const json& j, const std::string& key, const std::string& context) {
  if (!j.contains(key)) throw ConfigError(context + ": missing field '" + key + "'");
  if (!j[key].is_number()) throw ConfigError(context + ": field '" + key + "' must be a number");
  return j[key].get<double>();
}

InteractionPoint parse_point(const json& j, std::size_t index) {
  const std::string context = "points[" + std::to_string(index) + "]";
  if (!j.is_object()) throw ConfigError(context + ": expected an object");
  const double position = number_field(j, "position", context);

  const bool has_delta = j.contains("delta_strength");
  const bool has_delta_prime = j.contains("delta_prime_strength");
  const bool has_full = j.contains("alpha") || j.contains("beta") || j.contains("gamma") ||
                        j.contains("delta") || j.contains("theta");
  if (static_cast<int>(has_delta) + static_cast<int>(has_delta_prime) +
          static_cast<int>(has_full) != 1)
    throw ConfigError(context +
                      ": specify exactly one of delta_strength, delta_prime_strength, or the "
                      "transfer-matrix entries");

  if (has_delta) return delta_point(position, number_field(j, "delta_strength", context));
  if (has_delta_prime)
    return delta_prime_point(position, number_field(j, "delta_prime_strength", context));

  InteractionPoint p;
  p.position = position;
  p.alpha = number_field(j, "alpha", context);
  p.beta = number_field(j, "beta", context);
  p.gamma = number_field(j, "gamma", context);
  p.delta = number_field(j, "delta", context);
  p.theta = j.contains("theta") ? number_field(j, "theta", context) : 0.0;
  return p;
}

RobinProblem parse_robin(const json& j) {
  RobinProblem problem;
  problem.period = number_field(j, "period", "robin config");
  if (!j.contains("grid_size") || !j["grid_size"].is_number_integer())
    throw ConfigError("robin config: 'grid_size' must be an integer");
  const int m = j["grid_size"].get<int>();
  if (!j.contains("coefficients") || !j["coefficients"].is_object())
    throw ConfigError("robin config: missing 'coefficients' object");
  const json& coeff = j["coefficients"];
  const std::string type = coeff.value("type", "");

  problem.a_samples.resize(m);
  problem.b_samples.resize(m);
  if (type == "constant") {
    problem.a_samples.setConstant(number_field(coeff, "a", "coefficients"));
    problem.b_samples.setConstant(number_field(coeff, "b", "coefficients"));
  } else if (type == "piecewise") {
    if (!coeff.contains("pieces") || !coeff["pieces"].is_array() || coeff["pieces"].empty())
      throw ConfigError("coefficients: 'pieces' must be a nonempty array");
    struct Piece {
      double from, to, a, b;
    };
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < coeff["pieces"].size(); ++i) {
      const json& pj = coeff["pieces"][i];
      const std::string ctx = "pieces[" + std::to_string(i) + "]";
      pieces.push_back({number_field(pj, "from", ctx), number_field(pj, "to", ctx),
                        number_field(pj, "a", ctx), number_field(pj, "b", ctx)});
    }
    for (int r = 0; r < m; ++r) {
      const double x = r * problem.period / m;
      const auto piece = std::find_if(pieces.begin(), pieces.end(), [&](const Piece& p) {
        return x >= p.from && x < p.to;
      });
      if (piece == pieces.end())
        throw ConfigError("coefficients: pieces do not cover x = " + std::to_string(x));
      problem.a_samples(r) = piece->a;
      problem.b_samples(r) = piece->b;
    }
  } else if (type == "sampled") {
    if (!coeff.contains("a") || !coeff["a"].is_array() || !coeff.contains("b") ||
        !coeff["b"].is_array())
      throw ConfigError("coefficients: sampled form needs arrays 'a' and 'b'");
    if (static_cast<int>(coeff["a"].size()) != m || static_cast<int>(coeff["b"].size()) != m)
      throw ConfigError("coefficients: sampled arrays must have grid_size entries");
    for (int r = 0; r < m; ++r) {
      problem.a_samples(r) = coeff["a"][r].get<double>();
      problem.b_samples(r) = coeff["b"][r].get<double>();
    }
  } else {
    throw ConfigError("coefficients: unknown type '" + type +
                      "' (expected constant, piecewise, or sampled)");
  }
  problem.validate();
  return problem;
}

}  // namespace

PointModel ModelConfig::make_point_model() const { return PointModel(points); }

ModelConfig parse_model_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ConfigError("config must be an object with a string field 'kind'");

  ModelConfig config;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "point_interactions") {
    config.kind = ModelConfig::Kind::point_interactions;
    if (!j.contains("points") || !j["points"].is_array())
      throw ConfigError("point_interactions config: missing 'points' array");
    for (std::size_t i = 0; i < j["points"].size(); ++i)
      config.points.push_back(parse_point(j["points"][i], i));
    std::sort(config.points.begin(), config.points.end(),
              [](const InteractionPoint& a, const InteractionPoint& b) {
                return a.position < b.position;
              });
    // Constructing the model validates ordering, unimodularity, theta range.
    (void)config.make_point_model();
  } else if (kind == "robin_halfspace") {
    config.kind = ModelConfig::Kind::robin_halfspace;
    config.robin = parse_robin(j);
  } else {
    throw ConfigError("unknown model kind '" + kind +
                      "' (expected point_interactions or robin_halfspace)");
  }
  return config;
}

ModelConfig load_model_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model_config(buffer.str());
}

}  // namespace krein
