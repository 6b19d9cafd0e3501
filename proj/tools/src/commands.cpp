#include "commands.hpp"

#include <json.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

#include <harmonium/closed_form.hpp>
#include <harmonium/entropy.hpp>
#include <harmonium/errors.hpp>
#include <harmonium/hooke.hpp>
#include <harmonium/io.hpp>
#include <harmonium/observables.hpp>
#include <harmonium/qes.hpp>
#include <harmonium/variational.hpp>

namespace cli {
namespace {

using harmonium::Rational;
using json = nlohmann::ordered_json;
namespace hk = harmonium::hooke;
namespace obs = harmonium::observables;
namespace io = harmonium::io;

int integer_m(const RunConfig& cfg) {
  const Rational m = parse_rational(cfg.m);
  if (!harmonium::is_integer(m)) throw ConfigError("--m must be an integer here");
  return boost::multiprecision::numerator(m).convert_to<int>();
}

hk::QuantizationBranch branch_of(const RunConfig& cfg) {
  const double Z = parse_real(cfg.Z);
  const Rational m(integer_m(cfg));
  if (cfg.n < 1) throw ConfigError("--n must be >= 1");
  if (Z == 0.0) {
    if (cfg.n % 2 == 0)
      throw harmonium::NoBranchError("no Coulomb-free branch for even n (n=" + std::to_string(cfg.n) +
                                     ", m=" + cfg.m + ", Z=" + cfg.Z + ")");
    if (!(cfg.omega > 0)) throw ConfigError("--omega must be positive");
  }
  return hk::make_branch(cfg.n, m, Z, cfg.omega, cfg.branch);
}

std::string label(const hk::QuantizationBranch& b) {
  std::ostringstream os;
  os << "n" << b.n << "_m" << b.m << "_Z" << io::format_number(b.Z);
  return os.str();
}

json table_json(const io::Table& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json o = json::object();
    for (std::size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = r[i];
    rows.push_back(o);
  }
  return rows;
}

std::string render(const RunConfig& cfg, const io::Table& t) {
  if (cfg.format == Format::Json) return table_json(t).dump(2) + "\n";
  return io::to_csv(t);
}

/// Writes to the resolved path or stdout. Returns the path used, if any.
std::optional<std::filesystem::path> emit(const RunConfig& cfg, const std::string& default_name,
                                          const std::string& content, std::ostream& out) {
  const auto path = output_path(cfg, default_name);
  if (path) io::write_file(*path, content);
  else out << content;
  return path;
}

void write_sidecar(const std::filesystem::path& data_path, const json& j) {
  auto p = data_path;
  p += ".json";
  io::write_file(p, j.dump(2) + "\n");
}

std::vector<double> grid_for(const RunConfig& cfg, double omega) {
  try {
    return obs::make_grid(cfg.grid.empty() ? obs::GridSpec::for_omega(omega) : obs::GridSpec::parse(cfg.grid));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("grid: ") + e.what());
  }
}

std::string ext(const RunConfig& cfg) { return cfg.format == Format::Json ? ".json" : ".csv"; }

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const double Z = parse_real(cfg.Z);
  const Rational m(integer_m(cfg));
  std::vector<hk::QuantizationBranch> branches;
  if (Z == 0.0) branches.push_back(branch_of(cfg));
  else branches = hk::solve_frequencies(cfg.n, m, Z);
  io::Table t{{"n", "m", "Z", "kappa", "omega", "epsilon_rel", "epsilon_paper_convention"}, {}};
  for (const auto& b : branches)
    t.rows.push_back({static_cast<double>(b.n), harmonium::to_double(b.m), b.Z, b.kappa, b.omega, b.eps_rel,
                      2.0 * b.eps_rel});
  emit(cfg, "solve" + ext(cfg), render(cfg, t), out);
  return 0;
}

int cmd_wavefunction(const RunConfig& cfg, std::ostream& out) {
  const auto b = branch_of(cfg);
  const auto wf = hk::RadialWavefunction::build(b);
  const auto grid = grid_for(cfg, b.omega);
  std::vector<double> values;
  for (double r : grid) values.push_back(wf.u(r));
  const auto t = io::profile_table(grid, values);
  const auto path = emit(cfg, "wavefunction_" + label(b) + ext(cfg), render(cfg, t), out);
  if (path) {
    json side;
    side["n"] = b.n;
    side["m"] = harmonium::to_double(b.m);
    side["Z"] = b.Z;
    side["omega"] = b.omega;
    side["kappa"] = b.kappa;
    side["norm"] = wf.norm();
    side["nodes"] = wf.node_count();
    std::vector<double> coeffs(wf.poly_r().coeffs().begin(), wf.poly_r().coeffs().end());
    side["t_coefficients_r"] = coeffs;
    write_sidecar(*path, side);
  }
  return 0;
}

int cmd_density(const RunConfig& cfg, std::ostream& out) {
  const auto qopts = quadrature_options(cfg, obs::DensityEvaluator::default_options());
  const bool have_case = !cfg.case_name.empty();
  std::optional<harmonium::closed_form::CaseId> id;
  if (have_case) {
    try {
      id = harmonium::closed_form::parse_case(cfg.case_name);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (cfg.method != "quadrature") {
    throw ConfigError("--method " + cfg.method + " needs --case");
  }
  const auto b = id ? harmonium::closed_form::case_branch(*id) : branch_of(cfg);
  const auto grid = grid_for(cfg, b.omega);
  const std::string name = id ? cfg.case_name : label(b);

  json side;
  side["method"] = cfg.method;
  side["n"] = b.n;
  side["m"] = harmonium::to_double(b.m);
  side["Z"] = b.Z;
  side["omega"] = b.omega;
  side["cm_width_physical"] = hk::CenterOfMassState::physical(b).beta;
  side["cm_width_matched"] = hk::CenterOfMassState::matched(b).beta;

  std::optional<obs::DensityProfile> quad;
  std::optional<obs::DensityProfile> closed;
  double beta = hk::CenterOfMassState::physical(b).beta;
  if (cfg.method != "closed_form") {
    if (cfg.cm_width) {
      beta = *cfg.cm_width;
    } else if (id) {
      const auto fit = harmonium::closed_form::fit_cm_width(*id, grid);
      beta = fit.beta;
      side["cm_width_fitted"] = fit.beta;
    }
    if (!(beta > 0)) throw ConfigError("--cm-width must be positive");
    const auto wf = hk::RadialWavefunction::build(b);
    quad = obs::density_quadrature(wf, {beta}, grid, obs::DensityMethod::BesselKernel, qopts);
    side["cm_width"] = beta;
    side["total_quadrature"] = obs::DensityEvaluator(wf, {beta}, obs::DensityMethod::BesselKernel, qopts).total();
  }
  if (cfg.method != "quadrature") closed = harmonium::closed_form::closed_form_density(*id, grid);

  if (quad && closed) {
    const double dev = obs::max_relative_deviation(quad->values, closed->values);
    side["max_relative_deviation"] = dev;
    const auto path = output_path(cfg, "density_" + name + ".csv");
    if (path) {
      auto stem = *path;
      stem.replace_extension();
      auto qp = stem;
      qp += ".quadrature.csv";
      auto cp = stem;
      cp += ".closed_form.csv";
      io::write_file(qp, io::to_csv(io::profile_table(*quad)));
      io::write_file(cp, io::to_csv(io::profile_table(*closed)));
      side["normalization_quadrature"] = quad->integral();
      side["normalization_closed_form"] = closed->integral();
      side["files"] = {qp.filename().string(), cp.filename().string()};
      write_sidecar(stem, side);
    } else {
      io::Table t{{"r", "quadrature", "closed_form"}, {}};
      for (std::size_t i = 0; i < grid.size(); ++i) t.rows.push_back({grid[i], quad->values[i], closed->values[i]});
      out << render(cfg, t);
      std::cerr << "max relative deviation " << io::format_number(dev) << "\n";
    }
    return 0;
  }
  const auto& prof = quad ? *quad : *closed;
  side["normalization"] = prof.integral();
  const auto path = emit(cfg, "density_" + name + ext(cfg), render(cfg, io::profile_table(prof)), out);
  if (path) write_sidecar(*path, side);
  return 0;
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out) {
  const auto qopts = quadrature_options(cfg, {1e-10, 1e-12, 18});
  if (cfg.scan && cfg.surface) throw ConfigError("--scan and --surface are exclusive");
  if (cfg.scan) {
    const auto rows = harmonium::entropy::entropy_scan(cfg.n, parse_int_range(cfg.m), parse_real_list(cfg.Z), qopts);
    emit(cfg, "entropy_scan_n" + std::to_string(cfg.n) + ext(cfg), render(cfg, io::scan_table(rows)), out);
    return 0;
  }
  const auto b = branch_of(cfg);
  const auto wf = hk::RadialWavefunction::build(b);
  const obs::PairCorrelation G(wf);
  if (cfg.surface) {
    const auto s = harmonium::entropy::entropy_surface(G, cfg.surface_points, cfg.surface_extent);
    emit(cfg, "entropy_surface_" + label(b) + ext(cfg), render(cfg, io::surface_table(s)), out);
    return 0;
  }
  const double total = harmonium::entropy::total_entropy(wf, qopts);
  if (cfg.json_summary) {
    io::Table t{{"n", "m", "Z", "omega", "entropy"}, {{double(b.n), harmonium::to_double(b.m), b.Z, b.omega, total}}};
    emit(cfg, "entropy_total_" + label(b) + ext(cfg), render(cfg, t), out);
    return 0;
  }
  const auto grid = grid_for(cfg, b.omega);
  const auto prof = harmonium::entropy::entropy_density(G, grid);
  const auto path = emit(cfg, "entropy_" + label(b) + ext(cfg), render(cfg, io::profile_table(grid, prof.values)), out);
  if (path) {
    json side;
    side["n"] = b.n;
    side["m"] = harmonium::to_double(b.m);
    side["Z"] = b.Z;
    side["omega"] = b.omega;
    side["total"] = total;
    write_sidecar(*path, side);
  } else {
    std::cerr << "total entropy " << io::format_number(total) << "\n";
  }
  return 0;
}

namespace {

harmonium::qes::SexticParams sextic_from(const RunConfig& cfg, int* n_qes) {
  namespace q = harmonium::qes;
  if (cfg.from_hooke) {
    const auto map = q::map_from_hooke(branch_of(cfg));
    if (n_qes) *n_qes = map.n_qes;
    return map.params;
  }
  if (!cfg.alpha) throw ConfigError("--alpha (or --from-hooke) is required");
  if (!(cfg.gamma > 0)) throw ConfigError("--gamma must be positive");
  q::SexticParams p{*cfg.alpha, cfg.gamma, parse_rational(cfg.m)};
  if (n_qes) {
    const double k = -p.A() / p.sqrt_gamma();
    *n_qes = std::abs(k - std::round(k)) < 1e-12 && std::round(k) >= 0 ? static_cast<int>(std::round(k)) : -1;
  }
  return p;
}

}  // namespace

int cmd_qes(const RunConfig& cfg, std::ostream& out) {
  namespace q = harmonium::qes;
  if (cfg.action == "condition") {
    if (cfg.n < 0) throw ConfigError("--n must be >= 0");
    if (!(cfg.gamma > 0)) throw ConfigError("--gamma must be positive");
    const Rational m = parse_rational(cfg.m);
    const double alpha = q::qes_condition(cfg.n, m, cfg.gamma);
    io::Table t{{"n", "m", "gamma", "alpha"}, {{double(cfg.n), harmonium::to_double(m), cfg.gamma, alpha}}};
    emit(cfg, "qes_condition" + ext(cfg), render(cfg, t), out);
    return 0;
  }
  if (cfg.action == "map") {
    const auto b = branch_of(cfg);
    const auto map = q::map_from_hooke(b);
    json j;
    j["hooke"] = {{"n", b.n}, {"m", harmonium::to_double(b.m)}, {"Z", b.Z}, {"omega", b.omega}, {"eps_rel", b.eps_rel}};
    j["sextic"] = {{"alpha", map.params.alpha},
                   {"gamma", map.params.gamma},
                   {"m", harmonium::to_double(map.params.m)},
                   {"m_exact", map.params.m.str()},
                   {"E", map.E},
                   {"A", map.params.A()}};
    j["integer_m"] = map.integer_m;
    j["n_qes"] = map.n_qes;
    j["condition_residual"] = q::condition_residual(map.params, map.n_qes);
    emit(cfg, "qes_map_" + label(b) + ".json", j.dump(2) + "\n", out);
    return 0;
  }
  if (cfg.action == "to-hooke") {
    if (!cfg.energy) throw ConfigError("--E is required");
    const auto p = sextic_from(cfg, nullptr);
    const auto h = q::map_to_hooke(p, *cfg.energy);
    json j{{"omega", h.omega}, {"Z", h.Z}, {"eps_rel", h.eps_rel}, {"m_tilde", harmonium::to_double(h.m_tilde)},
           {"m_tilde_exact", h.m_tilde.str()}};
    emit(cfg, "qes_to_hooke.json", j.dump(2) + "\n", out);
    return 0;
  }
  if (cfg.action == "series") {
    if (!cfg.energy) throw ConfigError("--E is required");
    const auto p = sextic_from(cfg, nullptr);
    const auto s = q::qes_series(*cfg.energy, p, cfg.order,
                                 cfg.form == "displayed" ? q::SeriesForm::Displayed : q::SeriesForm::Operator);
    io::Table t{{"power", "coefficient"}, {}};
    for (std::size_t k = 0; k < s.size(); ++k)
      t.rows.push_back({harmonium::to_double(Rational(s.base_exponent() + static_cast<long>(k))), s.coeffs()[k]});
    emit(cfg, "qes_series" + ext(cfg), render(cfg, t), out);
    return 0;
  }
  // variational
  int n_qes = -1;
  const auto p = sextic_from(cfg, &n_qes);
  if (cfg.order < 2) throw ConfigError("--N must be >= 2");
  const auto bracket = cfg.bracket.empty() ? q::default_bracket(p, n_qes) : parse_interval(cfg.bracket);
  const auto s = q::variational_state(p, cfg.nodes, cfg.order, bracket);
  json j{{"alpha", p.alpha},
         {"gamma", p.gamma},
         {"m", harmonium::to_double(p.m)},
         {"N", cfg.order},
         {"bracket", {bracket.first, bracket.second}},
         {"E_star", s.E_star},
         {"residual", s.residual_norm},
         {"node_count", s.node_count}};
  emit(cfg, "qes_variational.json", j.dump(2) + "\n", out);
  return 0;
}

}  // namespace cli
