#include <CLI11.hpp>

#include <iostream>

#include <harmonium/errors.hpp>

#include "commands.hpp"
#include "options.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kConfig = 2, kNoBranch = 3, kQuadrature = 4, kVariational = 5 };

void add_branch_options(CLI::App* sub, cli::RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Series termination order (t has degree n-1)");
  sub->add_option("--m", cfg.m, "Azimuthal quantum number");
  sub->add_option("--Z", cfg.Z, "Coulomb coupling");
  sub->add_option("--omega", cfg.omega, "Oscillator frequency for Z = 0");
  sub->add_option("--branch", cfg.branch, "Branch index when several frequencies exist (0 = largest omega)");
}

void add_output_options(CLI::App* sub, cli::RunConfig& cfg) {
  sub->add_option("--output,-o", cfg.output, "Output file (default: $HARMONIUM_OUTPUT_DIR/<name> or stdout)");
  sub->add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, cli::Format>{{"csv", cli::Format::Csv},
                                                                             {"json", cli::Format::Json}}));
}

void add_quadrature_options(CLI::App* sub, cli::RunConfig& cfg) {
  sub->add_option("--quad-abs-tol", cfg.quad_abs_tol, "Quadrature absolute tolerance");
  sub->add_option("--quad-rel-tol", cfg.quad_rel_tol, "Quadrature relative tolerance");
  sub->add_option("--quad-depth", cfg.quad_depth, "Quadrature bisection depth");
}

}  // namespace

int main(int argc, char** argv) {
  cli::RunConfig cfg;
  CLI::App app{"Planar Hooke's atom: exact states, densities, entropies and the sextic QES mapping"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* solve = app.add_subcommand("solve", "Admissible frequencies for (n, m, Z)");
  add_branch_options(solve, cfg);
  add_output_options(solve, cfg);

  auto* wave = app.add_subcommand("wavefunction", "Normalized radial function u(r)");
  add_branch_options(wave, cfg);
  add_output_options(wave, cfg);
  wave->add_option("--grid", cfg.grid, "min:max:points[:lin|log]");

  auto* density = app.add_subcommand("density", "Single-particle density n(r)");
  add_branch_options(density, cfg);
  add_output_options(density, cfg);
  add_quadrature_options(density, cfg);
  density->add_option("--case", cfg.case_name, "Closed-form case: n2m0Zp1, n2m0Zm1, n2m1Zp1, n3m0Zp1");
  density->add_option("--method", cfg.method, "quadrature, closed_form or both")
      ->check(CLI::IsMember({"quadrature", "closed_form", "both"}));
  density->add_option("--grid", cfg.grid, "min:max:points[:lin|log]");
  density->add_option("--cm-width", cfg.cm_width, "Centre-of-mass Gaussian width beta");

  auto* entropy = app.add_subcommand("entropy", "Entropy density, totals, scans and surfaces");
  add_branch_options(entropy, cfg);
  add_output_options(entropy, cfg);
  add_quadrature_options(entropy, cfg);
  entropy->add_flag("--scan", cfg.scan, "Total entropy over an m range and Z list");
  entropy->add_flag("--surface", cfg.surface, "S_G on a Cartesian grid");
  entropy->add_option("--points", cfg.surface_points, "Surface points per axis");
  entropy->add_option("--extent", cfg.surface_extent, "Surface half-width (default 5/sqrt(omega))");
  entropy->add_option("--grid", cfg.grid, "min:max:points[:lin|log]");
  entropy->add_flag("--total-only", cfg.json_summary, "Emit only the total entropy");

  auto* qes = app.add_subcommand("qes", "Sextic oscillator mapping and variational estimates");
  qes->add_option("action", cfg.action, "condition, map, to-hooke, variational or series")
      ->required()
      ->check(CLI::IsMember({"condition", "map", "to-hooke", "variational", "series"}));
  add_branch_options(qes, cfg);
  add_output_options(qes, cfg);
  qes->add_option("--gamma", cfg.gamma, "Sextic coupling");
  qes->add_option("--alpha", cfg.alpha, "Quadratic coupling");
  qes->add_option("--E", cfg.energy, "Energy");
  qes->add_option("--nodes", cfg.nodes, "Target node count");
  qes->add_option("--N", cfg.order, "Series truncation order");
  qes->add_option("--bracket", cfg.bracket, "Energy bracket a:b");
  qes->add_option("--form", cfg.form, "operator or displayed")->check(CLI::IsMember({"operator", "displayed"}));
  qes->add_flag("--from-hooke", cfg.from_hooke, "Take sextic parameters from the Hooke branch (--n --m --Z)");

  auto* verify = app.add_subcommand("verify", "Run the self-test battery");
  verify->add_flag("--json", cfg.json_summary, "Machine-readable summary");
  verify->add_option("--perturb-omega", cfg.perturb_omega, "Test hook: relative shift of the trap frequency");

  std::vector<std::string> args;
  try {
    args = cli::merge_config(argc, argv);
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  }
  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (solve->parsed()) return cli::cmd_solve(cfg, std::cout);
    if (wave->parsed()) return cli::cmd_wavefunction(cfg, std::cout);
    if (density->parsed()) return cli::cmd_density(cfg, std::cout);
    if (entropy->parsed()) return cli::cmd_entropy(cfg, std::cout);
    if (qes->parsed()) return cli::cmd_qes(cfg, std::cout);
    if (verify->parsed()) return cli::cmd_verify(cfg, std::cout);
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const harmonium::InconsistentParams& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const harmonium::NoBranchError& e) {
    std::cerr << "no branch: " << e.what() << "\n";
    return kNoBranch;
  } catch (const harmonium::QuadratureNonConvergence& e) {
    std::cerr << "quadrature failure: " << e.what() << "\n";
    return kQuadrature;
  } catch (const harmonium::NodeCountUnreachable& e) {
    std::cerr << "variational failure: " << e.what() << "\n";
    return kVariational;
  } catch (const harmonium::BracketError& e) {
    std::cerr << "variational failure: " << e.what() << "\n";
    return kVariational;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
