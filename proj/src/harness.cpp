#include "polboost/harness.hpp"

#include "polboost/discrimination.hpp"
#include "polboost/errors.hpp"
#include "polboost/information.hpp"
#include "polboost/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

namespace polboost {

namespace {

// Runs body(i) for every cell in parallel. Results go to caller-owned slots,
// so row order never depends on scheduling. The lowest failing index wins.
template <class Body> void for_each_cell(std::size_t n, Body &&body) {
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

std::string cell_label(std::initializer_list<std::pair<const char *, double>> values) {
  std::ostringstream os;
  bool first = true;
  for (const auto &[name, x] : values) {
    os << (first ? "" : ", ") << name << "=" << format_real(x);
    first = false;
  }
  return os.str();
}

// Re-throw with the sweep cell attached, keeping the exception category.
[[noreturn]] void rethrow_with_cell(const std::string &cell) {
  try {
    throw;
  } catch (const IntegrationError &e) {
    throw IntegrationError("cell (" + cell + "): " + e.what());
  } catch (const DomainError &e) {
    throw DomainError("cell (" + cell + "): " + e.what());
  }
}

struct HelicityPair {
  PolDensityMatrix plus, minus;
};

HelicityPair helicity_pair(double width, double v, const RunConfig &config, BasisMode mode) {
  const PacketSpec spec = config.packet(width);
  return {effective_density_matrix(+1, v, spec, config.grid, mode),
          effective_density_matrix(-1, v, spec, config.grid, mode)};
}

} // namespace

std::string to_string(Scenario s) {
  switch (s) {
  case Scenario::fig1:
    return "fig1";
  case Scenario::fig2:
    return "fig2";
  case Scenario::fig3:
    return "fig3";
  case Scenario::fig4:
    return "fig4";
  case Scenario::fig5:
    return "fig5";
  }
  return "unknown";
}

double SweepRow::input(std::string_view name) const {
  for (const auto &[key, value] : inputs)
    if (key == name)
      return value;
  throw std::out_of_range("no input column '" + std::string(name) + "'");
}

double SweepRow::output(std::string_view name) const {
  for (const auto &[key, value] : outputs)
    if (key == name)
      return value;
  throw std::out_of_range("no output column '" + std::string(name) + "'");
}

std::vector<double> Range::values() const {
  std::vector<double> out(steps);
  if (steps == 1) {
    out[0] = min;
    return out;
  }
  for (int i = 0; i < steps; ++i)
    out[i] = i == steps - 1 ? max : min + (max - min) * i / (steps - 1);
  return out;
}

std::vector<BasisMode> modes_of(BasisSelection selection) {
  switch (selection) {
  case BasisSelection::boosted:
    return {BasisMode::boosted_basis};
  case BasisSelection::literal:
    return {BasisMode::literal};
  case BasisSelection::both:
    return {BasisMode::boosted_basis, BasisMode::literal};
  }
  return {};
}

BasisSelection parse_basis_selection(const std::string &text) {
  if (text == "boosted")
    return BasisSelection::boosted;
  if (text == "literal")
    return BasisSelection::literal;
  if (text == "both")
    return BasisSelection::both;
  throw ConfigError("basis mode must be boosted, literal or both (got '" + text + "')");
}

std::string to_string(BasisSelection selection) {
  switch (selection) {
  case BasisSelection::boosted:
    return "boosted";
  case BasisSelection::literal:
    return "literal";
  case BasisSelection::both:
    return "both";
  }
  return "unknown";
}

std::vector<SweepRow> sweep_unambiguous(std::span<const double> thetas, std::span<const double> vs) {
  if (thetas.empty() || vs.empty())
    throw DomainError("unambiguous sweep needs nonempty grids");
  std::vector<SweepRow> rows(thetas.size() * vs.size());
  for_each_cell(rows.size(), [&](std::size_t idx) {
    const double theta = thetas[idx / vs.size()], v = vs[idx % vs.size()];
    try {
      SweepRow row;
      row.scenario = Scenario::fig1;
      row.inputs = {{"theta", theta}, {"v", v}};
      row.outputs = {{"p_opt", p_opt_pipeline(theta, v)},
                     {"p_opt_closed_form", p_opt_closed_form(theta, v)}};
      rows[idx] = std::move(row);
    } catch (...) {
      rethrow_with_cell(cell_label({{"theta", theta}, {"v", v}}));
    }
  });
  return rows;
}

double min_error_probability(double width, double v, const RunConfig &config, BasisMode mode) {
  const auto pair = helicity_pair(width, v, config, mode);
  return helstrom(pair.plus, pair.minus).p_error;
}

std::vector<SweepRow> sweep_min_error(std::span<const double> widths, std::span<const double> vs,
                                      const RunConfig &config) {
  const auto modes = modes_of(config.basis);
  const std::size_t per_mode = widths.size() * vs.size();
  std::vector<SweepRow> rows(modes.size() * per_mode);
  for_each_cell(rows.size(), [&](std::size_t idx) {
    const BasisMode mode = modes[idx / per_mode];
    const std::size_t cell = idx % per_mode;
    const double w = widths[cell / vs.size()], v = vs[cell % vs.size()];
    try {
      SweepRow row;
      row.scenario = Scenario::fig2;
      row.basis_mode = mode;
      row.inputs = {{"W", w}, {"v", v}};
      row.outputs = {{"p_error", min_error_probability(w, v, config, mode)}};
      rows[idx] = std::move(row);
    } catch (...) {
      rethrow_with_cell(cell_label({{"W", w}, {"v", v}}) + ", " + to_string(mode));
    }
  });
  return rows;
}

CriticalPoint find_critical_point(double width, const RunConfig &config, BasisMode mode) {
  if (!(width > 0.0))
    throw DomainError("packet width must be positive");
  const double step = config.critical_step;
  std::vector<double> grid;
  for (int i = 1; i * step < 1.0 - 1e-12; ++i)
    grid.push_back(i * step);
  if (grid.size() < 3)
    throw DomainError("critical-point grid needs at least three interior points");

  std::vector<double> pe(grid.size());
  for_each_cell(grid.size(), [&](std::size_t i) {
    try {
      pe[i] = min_error_probability(width, grid[i], config, mode);
    } catch (...) {
      rethrow_with_cell(cell_label({{"W", width}, {"v", grid[i]}}));
    }
  });

  const auto best = std::max_element(pe.begin(), pe.end()) - pe.begin();
  const double spread = *std::max_element(pe.begin(), pe.end()) -
                        *std::min_element(pe.begin(), pe.end());
  CriticalPoint cp;
  if (best == 0 || best == static_cast<std::ptrdiff_t>(grid.size()) - 1 ||
      spread <= config.critical_flat_tolerance) {
    cp.found = false;
    cp.v = std::numeric_limits<double>::quiet_NaN();
    cp.p_error = pe[best];
    return cp;
  }

  const auto refined = golden_section_maximize(
      [&](double v) { return min_error_probability(width, v, config, mode); }, grid[best - 1],
      grid[best + 1], config.critical_tolerance);
  cp.found = true;
  if (refined.value >= pe[best]) {
    cp.v = refined.x;
    cp.p_error = refined.value;
  } else {
    cp.v = grid[best];
    cp.p_error = pe[best];
  }
  return cp;
}

std::vector<SweepRow> sweep_critical(std::span<const double> widths, const RunConfig &config) {
  std::vector<SweepRow> rows;
  for (const BasisMode mode : modes_of(config.basis)) {
    for (const double w : widths) {
      const CriticalPoint cp = find_critical_point(w, config, mode);
      SweepRow row;
      row.scenario = Scenario::fig3;
      row.basis_mode = mode;
      row.inputs = {{"W", w}};
      row.outputs = {{"found", cp.found ? 1.0 : 0.0}, {"v_critical", cp.v}, {"p_error", cp.p_error}};
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<SweepRow> sweep_holevo_pure(std::span<const double> cos_values) {
  std::vector<SweepRow> rows;
  rows.reserve(cos_values.size());
  for (const double c : cos_values) {
    if (!(c >= -1.0 && c <= 1.0))
      throw DomainError("cell (cos_theta_prime=" + format_real(c) + "): outside [-1, 1]");
    SweepRow row;
    row.scenario = Scenario::fig4;
    row.inputs = {{"cos_theta_prime", c}};
    row.outputs = {{"chi", holevo_pure_closed_form(c)}, {"p_opt", (1.0 + c) / 2.0}};
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> sweep_holevo_mixed(std::span<const double> widths,
                                         std::span<const double> vs, const RunConfig &config) {
  const auto modes = modes_of(config.basis);
  const std::size_t per_mode = widths.size() * vs.size();
  std::vector<SweepRow> rows(modes.size() * per_mode);
  for_each_cell(rows.size(), [&](std::size_t idx) {
    const BasisMode mode = modes[idx / per_mode];
    const std::size_t cell = idx % per_mode;
    const double w = widths[cell / vs.size()], v = vs[cell % vs.size()];
    try {
      const auto pair = helicity_pair(w, v, config, mode);
      Ensemble ensemble;
      ensemble.members = {{0.5, pair.plus}, {0.5, pair.minus}};
      SweepRow row;
      row.scenario = Scenario::fig5;
      row.basis_mode = mode;
      row.inputs = {{"W", w}, {"v", v}};
      row.outputs = {{"chi", holevo_bound(ensemble)},
                     {"p_correct", 1.0 - helstrom(pair.plus, pair.minus).p_error}};
      rows[idx] = std::move(row);
    } catch (...) {
      rethrow_with_cell(cell_label({{"W", w}, {"v", v}}) + ", " + to_string(mode));
    }
  });
  return rows;
}

} // namespace polboost
