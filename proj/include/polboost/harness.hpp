#pragma once

#include "polboost/wavepacket.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polboost {

enum class Scenario { fig1, fig2, fig3, fig4, fig5 };

std::string to_string(Scenario s);

/// One record of a parameter sweep. Columns keep their insertion order so
/// serialized output is stable.
struct SweepRow {
  Scenario scenario{Scenario::fig1};
  std::optional<BasisMode> basis_mode;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<std::pair<std::string, double>> outputs;

  double input(std::string_view name) const;
  double output(std::string_view name) const;
};

/// Inclusive evenly spaced grid.
struct Range {
  double min{0.0};
  double max{1.0};
  int steps{2};

  std::vector<double> values() const;
};

enum class BasisSelection { boosted, literal, both };

std::vector<BasisMode> modes_of(BasisSelection selection);
BasisSelection parse_basis_selection(const std::string &text);
std::string to_string(BasisSelection selection);

enum class OutputFormat { csv, json };

struct RunConfig {
  Range theta{0.0, 3.14159265358979323846, 61};
  Range v{-0.95, 0.95, 39};
  Range cos_theta_prime{-1.0, 1.0, 81};
  std::vector<double> widths{0.01, 0.5, 1.0};            ///< minerror
  std::vector<double> fig5_widths{0.5, 1.0};             ///< holevo --figure 5
  std::vector<double> critical_widths{0.25, 0.5, 0.75, 1.0};
  double k0{1.0};
  QuadratureGrid grid{};
  BasisSelection basis{BasisSelection::boosted};
  OutputFormat format{OutputFormat::csv};
  std::string out;                    ///< empty: stdout
  double critical_step{0.02};         ///< coarse grid spacing on (0, 1)
  double critical_tolerance{1e-4};    ///< golden-section bracket width
  double critical_flat_tolerance{1e-12};
  std::uint64_t seed{20110501};
  std::size_t mc_samples{1000000};

  /// Throws ConfigError naming the offending field.
  void validate() const;
  PacketSpec packet(double width) const { return PacketSpec::from_width(width, k0); }
};

/// key = value lines, '#' comments, lists comma separated. Unknown keys and
/// bad values raise ConfigError with "source:line: field" context.
RunConfig parse_config(std::istream &in, const std::string &source, RunConfig base = {});
RunConfig load_config(const std::filesystem::path &path, RunConfig base = {});

/// Documented schema of the config file, one key per line.
std::string config_schema();

/// fig1: pipeline and closed-form P_opt for every (theta, v).
std::vector<SweepRow> sweep_unambiguous(std::span<const double> thetas, std::span<const double> vs);

double min_error_probability(double width, double v, const RunConfig &config, BasisMode mode);

/// fig2: Helstrom error for every (W, v) and configured basis mode.
std::vector<SweepRow> sweep_min_error(std::span<const double> widths, std::span<const double> vs,
                                      const RunConfig &config);

struct CriticalPoint {
  bool found{false};
  double v{0.0};
  double p_error{0.0};
};

/// Interior maximum of v -> P_E(W, v) on (0, 1): coarse grid then
/// golden-section refinement. `found` is false when the grid maximum sits
/// at either end of the coarse grid.
CriticalPoint find_critical_point(double width, const RunConfig &config,
                                  BasisMode mode = BasisMode::boosted_basis);

/// fig3 rows.
std::vector<SweepRow> sweep_critical(std::span<const double> widths, const RunConfig &config);

/// fig4 rows: (cos theta', chi, p_opt) for the monochromatic pair.
std::vector<SweepRow> sweep_holevo_pure(std::span<const double> cos_values);

/// fig5 rows: (W, v, chi(rho+, rho-), 1 - P_E).
std::vector<SweepRow> sweep_holevo_mixed(std::span<const double> widths,
                                         std::span<const double> vs, const RunConfig &config);

void write_csv(std::ostream &os, std::span<const SweepRow> rows);
void write_json(std::ostream &os, std::span<const SweepRow> rows);
void write_rows(std::ostream &os, std::span<const SweepRow> rows, OutputFormat format);

/// Grid, quadrature and unit metadata for a run, as a JSON document.
std::string run_metadata(const std::string &command, const RunConfig &config);

/// Shortest decimal representation that round-trips; "nan" for NaN.
std::string format_real(double x);

/// Quick invariant suite. Prints one PASS/FAIL line per check and returns
/// true when everything passes.
bool run_selftest(std::ostream &os, const RunConfig &config);

} // namespace polboost
