#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <harmonium/numeric.hpp>
#include <harmonium/observables.hpp>
#include <harmonium/quadrature.hpp>

namespace cli {

/// Raised for invalid flag combinations; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct RunConfig {
  std::string subcommand;
  std::string action;  // qes sub-action

  int n = 2;
  std::string m = "0";
  std::string Z = "1";
  double omega = 0.5;
  std::size_t branch = 0;

  std::string grid;
  std::string case_name;
  std::string method = "quadrature";
  std::optional<double> cm_width;

  bool scan = false;
  bool surface = false;
  int surface_points = 201;
  double surface_extent = 0.0;

  double gamma = 1.0;
  std::optional<double> alpha;
  std::optional<double> energy;
  int nodes = 0;
  int order = 24;
  std::string bracket;
  std::string form = "operator";
  bool from_hooke = false;

  bool json_summary = false;
  double perturb_omega = 0.0;

  Format format = Format::Csv;
  std::string output;

  std::optional<double> quad_abs_tol;
  std::optional<double> quad_rel_tol;
  std::optional<unsigned> quad_depth;
};

/// argv with key=value lines of --config FILE spliced in ahead of the real
/// flags, so flags given on the command line take precedence.
std::vector<std::string> merge_config(int argc, char** argv);

harmonium::Rational parse_rational(const std::string& text);
int parse_int(const std::string& text);
double parse_real(const std::string& text);
/// "a:b" inclusive integer range, or a single integer.
std::vector<int> parse_int_range(const std::string& text);
/// Comma-separated reals.
std::vector<double> parse_real_list(const std::string& text);
std::pair<double, double> parse_interval(const std::string& text);

harmonium::QuadratureOptions quadrature_options(const RunConfig& cfg, harmonium::QuadratureOptions base);

/// --output if given, else $HARMONIUM_OUTPUT_DIR/default_name, else nothing (stdout).
std::optional<std::filesystem::path> output_path(const RunConfig& cfg, const std::string& default_name);

}  // namespace cli
