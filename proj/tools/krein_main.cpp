#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "krein/config.hpp"
#include "krein/krein.hpp"
#include "krein/linrel.hpp"
#include "krein/point_interactions.hpp"
#include "krein/robin.hpp"

namespace {

using namespace krein;

// Exit codes: 0 success, 1 computation/validation failure, 2 unsupported
// operation, 3 I/O or parse error.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

Complex parse_complex(const std::string& text) {
  // Accepts "a", "a+bi", "a-bi" (also the "j" suffix).
  std::string s = text;
  if (!s.empty() && (s.back() == 'i' || s.back() == 'j')) {
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t pos = 1; pos < s.size(); ++pos) {
      if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != 'e' && s[pos - 1] != 'E') split = pos;
    }
    if (split == std::string::npos)
      throw ConfigError("cannot parse complex value '" + text + "'");
    return {std::stod(s.substr(0, split)), std::stod(s.substr(split))};
  }
  return {std::stod(s), 0.0};
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output file: " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_validate(const std::string& config_path) {
  const ModelConfig config = load_model_config(config_path);
  if (config.kind == ModelConfig::Kind::robin_halfspace) {
    config.robin.validate();
    std::cout << "model: robin_halfspace, period " << fmt12(config.robin.period) << ", grid "
              << config.robin.grid_size() << "\n";
    std::cout << "coefficients: |a| + |b| positive at every sample: yes\n";
    std::cout << "self-adjoint: yes (Robin data defines a self-adjoint realization)\n";
    return 0;
  }

  const PointModel model = config.make_point_model();
  const ParamPair pair = build_pair(model);
  const PairConditions cond = check_pair(pair);
  const bool normalized = is_normalized(pair);
  const LinearRelation relation = relation_from_pair(pair);
  const bool selfadjoint = is_selfadjoint(relation);

  std::cout << "model: point_interactions with " << model.point_count()
            << " point(s), boundary dimension " << model.dim() << "\n";
  std::cout << "bg1 (A B* = B A*): " << (cond.bg1 ? "yes" : "no") << "\n";
  std::cout << "bg2 (ker M^{A,B} = 0): " << (cond.bg2 ? "yes" : "no") << "\n";
  std::cout << "self-adjoint: " << (selfadjoint ? "yes" : "no") << "\n";
  std::cout << "normalized encoding: " << (normalized ? "yes" : "no") << "\n";
  if (selfadjoint) {
    const ComplexMatrix u = cayley_transform(relation);
    const double resid =
        (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
    std::cout << "cayley unitarity residual: " << fmt12(resid) << "\n";
  }
  return selfadjoint ? 0 : 1;
}

int cmd_spectrum(const std::string& config_path, double z_min, double z_max, int grid, double tol,
                 const std::string& out_path) {
  if (!(z_max < 0))
    throw std::invalid_argument("spectrum scan requires --zmax < 0");
  if (!(z_min < z_max)) throw std::invalid_argument("empty scan range: need --zmin < --zmax");

  const ModelConfig config = load_model_config(config_path);
  CsvWriter csv(out_path);
  csv.out() << "z,indicator_residual,multiplicity\n";

  if (config.kind == ModelConfig::Kind::point_interactions) {
    const PointModel model = config.make_point_model();
    const ParamPair pair = build_pair(model);
    for (const auto& state : bound_states(model, pair, z_min, z_max, grid, tol))
      csv.out() << fmt12(state.eigenvalue) << "," << fmt12(state.indicator_residual) << ","
                << state.kernel_vectors.size() << "\n";
  } else {
    for (const auto& root : robin_bound_states(config.robin, z_min, z_max, grid, tol))
      csv.out() << fmt12(root.z) << "," << fmt12(root.indicator) << ","
                << root.kernel_vectors.size() << "\n";
  }
  return 0;
}

int cmd_green(const std::string& config_path, const std::string& z_text, double y, double x_min,
              double x_max, int samples, const std::string& out_path) {
  const ModelConfig config = load_model_config(config_path);
  if (config.kind != ModelConfig::Kind::point_interactions)
    throw UnsupportedError("green-function tabulation supports point_interactions models only");
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(x_min < x_max)) throw std::invalid_argument("empty range: need --xmin < --xmax");

  const Complex z = parse_complex(z_text);
  const PointModel model = config.make_point_model();
  const ParamPair pair = build_pair(model);

  CsvWriter csv(out_path);
  csv.out() << "x,re_g,im_g\n";
  const double step = (x_max - x_min) / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double x = x_min + i * step;
    const Complex g = green_function(model, pair, x, y, z);
    csv.out() << fmt12(x) << "," << fmt12(g.real()) << "," << fmt12(g.imag()) << "\n";
  }
  return 0;
}

int cmd_qcheck(const std::string& config_path, const std::string& z_text,
               const std::string& zeta_text, double threshold) {
  const ModelConfig config = load_model_config(config_path);
  if (config.kind != ModelConfig::Kind::point_interactions)
    throw UnsupportedError(
        "q-function check supports point_interactions models only (no Gamma-field data for "
        "robin_halfspace)");
  const PointModel model = config.make_point_model();
  const double residual =
      q_identity_residual(model, parse_complex(z_text), parse_complex(zeta_text));
  std::cout << "q-identity residual: " << fmt12(residual) << "\n";
  return residual <= threshold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and Green functions of self-adjoint extensions via boundary pairs"};
  app.require_subcommand(1);

  std::string config_path, out_path, z_text = "-1", zeta_text = "-1";
  double z_min = -10.0, z_max = -0.01, y = 0.0, x_min = -5.0, x_max = 5.0, tol = 1e-10;
  int grid = 400, samples = 101;

  CLI::App* validate = app.add_subcommand("validate", "check boundary-condition invariants");
  validate->add_option("config", config_path, "model config (JSON)")->required();

  CLI::App* spectrum = app.add_subcommand("spectrum", "scan for eigenvalues below the threshold");
  spectrum->add_option("config", config_path)->required();
  spectrum->add_option("--zmin", z_min, "lower end of the scan")->required();
  spectrum->add_option("--zmax", z_max, "upper end of the scan (< 0)")->required();
  spectrum->add_option("--grid", grid, "number of scan cells");
  spectrum->add_option("--tol", tol, "refinement width for roots");
  spectrum->add_option("--out", out_path, "CSV output file (default: stdout)");

  CLI::App* green = app.add_subcommand("green", "tabulate the Green function along x");
  green->add_option("config", config_path)->required();
  green->add_option("--z", z_text, "spectral parameter (a or a+bi)")->required();
  green->add_option("--y", y, "second kernel argument")->required();
  green->add_option("--xmin", x_min)->required();
  green->add_option("--xmax", x_max)->required();
  green->add_option("--samples", samples, "number of x samples");
  green->add_option("--out", out_path, "CSV output file (default: stdout)");

  double q_threshold = 1e-5;
  CLI::App* qcheck = app.add_subcommand("qcheck", "Q-function identity residual");
  qcheck->add_option("config", config_path)->required();
  qcheck->add_option("--z", z_text)->required();
  qcheck->add_option("--zeta", zeta_text)->required();
  qcheck->add_option("--threshold", q_threshold, "pass/fail bound on the residual");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (validate->parsed()) return cmd_validate(config_path);
    if (spectrum->parsed())
      return cmd_spectrum(config_path, z_min, z_max, grid, tol, out_path);
    if (green->parsed()) return cmd_green(config_path, z_text, y, x_min, x_max, samples, out_path);
    if (qcheck->parsed()) return cmd_qcheck(config_path, z_text, zeta_text, q_threshold);
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
