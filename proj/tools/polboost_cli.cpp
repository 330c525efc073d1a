// Sweep driver for the polboost library.
//
//   polboost unambiguous --theta-steps 61 --v-steps 39
//   polboost minerror --basis-mode both --out fig2.csv
//   polboost critical --format json
//   polboost holevo --figure 5
//   polboost wigner --factors rot_y:0.3,boost_z:0.5 --theta 0.4 --phi 1.0
//   polboost selftest
//
// Exit status: 0 success, 1 domain/integration error or failed selftest,
// 2 usage or config error.

#include "polboost/errors.hpp"
#include "polboost/harness.hpp"
#include "polboost/kinematics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace polboost;

struct GlobalFlags {
  std::string config_path;
  std::string out;
  std::string format;
  std::string basis_mode;
  long long seed{-1};
};

std::filesystem::path resolve_output(const std::string &out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char *dir = std::getenv("POLBOOST_OUT_DIR"); dir && *dir)
      p = std::filesystem::path(dir) / p;
  }
  return p;
}

// Writes the body to --out (plus a metadata sidecar) or to stdout.
void emit(const std::string &command, const RunConfig &config, const std::string &body) {
  if (config.out.empty()) {
    std::cout << body;
    return;
  }
  const auto path = resolve_output(config.out);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot open output file '" + path.string() + "'");
  out << body;
  std::ofstream meta(path.string() + ".meta.json", std::ios::binary);
  meta << run_metadata(command, config);
}

std::string render(std::span<const SweepRow> rows, OutputFormat format) {
  std::ostringstream os;
  write_rows(os, rows, format);
  return os.str();
}

std::string render_wigner(const FactorList &factors, double theta, double phi,
                          OutputFormat format) {
  const FourVector k = photon_momentum({theta, phi});
  const double table = wigner_angle(factors, k);
  const double matrix = wigner_angle_from_matrix(compose(factors), k);
  std::ostringstream os;
  if (format == OutputFormat::json) {
    nlohmann::ordered_json row;
    row["factors"] = format_factor_list(factors);
    row["theta"] = theta;
    row["phi"] = phi;
    row["wigner_angle"] = table;
    row["wigner_angle_matrix"] = matrix;
    os << nlohmann::ordered_json::array({row}).dump(2) << '\n';
  } else {
    os << "factors,theta,phi,wigner_angle,wigner_angle_matrix\n"
       << format_factor_list(factors) << ',' << format_real(theta) << ',' << format_real(phi)
       << ',' << format_real(table) << ',' << format_real(matrix) << '\n';
  }
  return os.str();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Detector-motion effects on photon polarization discrimination"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "key = value config file")->check(CLI::ExistingFile);
  app.add_option("--out", flags.out, "output path (default stdout)");
  app.add_option("--format", flags.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--basis-mode", flags.basis_mode, "boosted, literal or both")
      ->check(CLI::IsMember({"boosted", "literal", "both"}));
  app.add_option("--seed", flags.seed, "Monte Carlo oracle seed")->check(CLI::NonNegativeNumber);
  bool show_schema = false;
  app.add_flag("--config-schema", show_schema, "print the config file keys and exit");

  auto *wigner = app.add_subcommand("wigner", "Wigner rotation angle for a factor list");
  std::string factor_text;
  double theta = 0.0, phi = 0.0;
  wigner->add_option("--factors", factor_text, "e.g. rot_y:0.3,boost_z:0.5 (rightmost acts first)")
      ->required();
  wigner->add_option("--theta", theta, "photon polar angle")->check(CLI::Range(0.0, kPi));
  wigner->add_option("--phi", phi, "photon azimuth");

  auto *unambiguous = app.add_subcommand("unambiguous", "optimal unambiguous success table");
  int theta_steps = -1, v_steps = -1;
  double v_min = std::nan(""), v_max = std::nan("");
  unambiguous->add_option("--theta-steps", theta_steps)->check(CLI::PositiveNumber);
  unambiguous->add_option("--v-steps", v_steps)->check(CLI::PositiveNumber);
  unambiguous->add_option("--v-min", v_min);
  unambiguous->add_option("--v-max", v_max);

  auto *minerror = app.add_subcommand("minerror", "Helstrom error vs detector speed");
  std::vector<double> widths;
  minerror->add_option("--v-steps", v_steps)->check(CLI::PositiveNumber);
  minerror->add_option("--v-min", v_min);
  minerror->add_option("--v-max", v_max);
  minerror->add_option("--widths", widths, "packet widths W")->delimiter(',');

  auto *critical = app.add_subcommand("critical", "critical detector speed vs packet width");
  critical->add_option("--widths", widths, "packet widths W")->delimiter(',');

  auto *holevo = app.add_subcommand("holevo", "Holevo bound tables");
  int figure = 4, cos_steps = -1;
  holevo->add_option("--figure", figure, "4: monochromatic pair, 5: wave packets")
      ->check(CLI::IsMember({4, 5}));
  holevo->add_option("--cos-steps", cos_steps)->check(CLI::PositiveNumber);
  holevo->add_option("--v-steps", v_steps)->check(CLI::PositiveNumber);
  holevo->add_option("--widths", widths, "packet widths W (figure 5)")->delimiter(',');

  auto *selftest = app.add_subcommand("selftest", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  if (show_schema) {
    std::cout << config_schema();
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << "a subcommand is required\n" << app.help();
    return 2;
  }

  try {
    RunConfig config;
    if (!flags.config_path.empty())
      config = load_config(flags.config_path);
    if (!flags.out.empty())
      config.out = flags.out;
    if (!flags.format.empty())
      config.format = flags.format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (!flags.basis_mode.empty())
      config.basis = parse_basis_selection(flags.basis_mode);
    if (flags.seed >= 0)
      config.seed = static_cast<std::uint64_t>(flags.seed);
    if (theta_steps > 0)
      config.theta.steps = theta_steps;
    if (v_steps > 0)
      config.v.steps = v_steps;
    if (!std::isnan(v_min))
      config.v.min = v_min;
    if (!std::isnan(v_max))
      config.v.max = v_max;
    if (cos_steps > 0)
      config.cos_theta_prime.steps = cos_steps;
    config.validate();

    if (*wigner) {
      emit("wigner", config, render_wigner(parse_factor_list(factor_text), theta, phi, config.format));
    } else if (*unambiguous) {
      const auto rows = sweep_unambiguous(config.theta.values(), config.v.values());
      emit("unambiguous", config, render(rows, config.format));
    } else if (*minerror) {
      if (!widths.empty())
        config.widths = widths;
      config.validate();
      const auto rows = sweep_min_error(config.widths, config.v.values(), config);
      emit("minerror", config, render(rows, config.format));
    } else if (*critical) {
      if (!widths.empty())
        config.critical_widths = widths;
      config.validate();
      const auto rows = sweep_critical(config.critical_widths, config);
      emit("critical", config, render(rows, config.format));
    } else if (*holevo) {
      if (figure == 4) {
        const auto rows = sweep_holevo_pure(config.cos_theta_prime.values());
        emit("holevo", config, render(rows, config.format));
      } else {
        if (!widths.empty())
          config.fig5_widths = widths;
        config.validate();
        const auto rows = sweep_holevo_mixed(config.fig5_widths, config.v.values(), config);
        emit("holevo", config, render(rows, config.format));
      }
    } else if (*selftest) {
      std::ostringstream report;
      const bool ok = run_selftest(report, config);
      emit("selftest", config, report.str());
      return ok ? 0 : 1;
    }
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError &e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const IntegrationError &e) {
    std::cerr << "integration error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
