#include "options.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> merge_config(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::optional<std::string> path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a file name");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;

  std::ifstream in(*path);
  if (!in) throw ConfigError("cannot read config file " + *path);
  std::vector<std::string> injected;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(*path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value == "true") {
      injected.push_back("--" + key);
    } else if (value != "false") {
      injected.push_back("--" + key);
      injected.push_back(value);
    }
  }
  // program, subcommand path (leading words without dashes), config flags, the rest
  std::vector<std::string> out{rest.front()};
  std::size_t i = 1;
  while (i < rest.size() && !rest[i].empty() && rest[i][0] != '-') out.push_back(rest[i++]);
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), rest.begin() + static_cast<long>(i), rest.end());
  return out;
}

harmonium::Rational parse_rational(const std::string& text) {
  try {
    if (text.find('.') != std::string::npos || text.find('e') != std::string::npos)
      return harmonium::exact_rational(parse_real(text));
    return harmonium::Rational(text);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("not a rational number: '" + text + "'");
  }
}

int parse_int(const std::string& text) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw ConfigError("not an integer: '" + text + "'");
  }
  if (pos != text.size()) throw ConfigError("not an integer: '" + text + "'");
  return v;
}

double parse_real(const std::string& text) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + text + "'");
  }
  if (pos != text.size()) throw ConfigError("not a number: '" + text + "'");
  return v;
}

std::vector<int> parse_int_range(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) return {parse_int(text)};
  const int a = parse_int(text.substr(0, colon));
  const int b = parse_int(text.substr(colon + 1));
  std::vector<int> out;
  for (int k = a; k <= b; ++k) out.push_back(k);
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_real(trim(item)));
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

std::pair<double, double> parse_interval(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw ConfigError("interval must be a:b");
  const double a = parse_real(text.substr(0, colon));
  const double b = parse_real(text.substr(colon + 1));
  if (!(b > a)) throw ConfigError("interval upper end must exceed lower end");
  return {a, b};
}

harmonium::QuadratureOptions quadrature_options(const RunConfig& cfg, harmonium::QuadratureOptions base) {
  if (cfg.quad_abs_tol) base.abs_tol = *cfg.quad_abs_tol;
  if (cfg.quad_rel_tol) base.rel_tol = *cfg.quad_rel_tol;
  if (cfg.quad_depth) base.max_depth = *cfg.quad_depth;
  return base;
}

std::optional<std::filesystem::path> output_path(const RunConfig& cfg, const std::string& default_name) {
  if (!cfg.output.empty()) return std::filesystem::path(cfg.output);
  if (const char* dir = std::getenv("HARMONIUM_OUTPUT_DIR"); dir && *dir) return std::filesystem::path(dir) / default_name;
  return std::nullopt;
}

}  // namespace cli
