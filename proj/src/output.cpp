#include "polboost/harness.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>

namespace polboost {

std::string format_real(double x) {
  if (std::isnan(x))
    return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_csv(std::ostream &os, std::span<const SweepRow> rows) {
  if (rows.empty())
    return;
  const SweepRow &first = rows.front();
  os << "scenario";
  if (first.basis_mode)
    os << ",basis_mode";
  for (const auto &[name, value] : first.inputs)
    os << ',' << name;
  for (const auto &[name, value] : first.outputs)
    os << ',' << name;
  os << '\n';
  for (const auto &row : rows) {
    os << to_string(row.scenario);
    if (row.basis_mode)
      os << ',' << to_string(*row.basis_mode);
    for (const auto &[name, value] : row.inputs)
      os << ',' << format_real(value);
    for (const auto &[name, value] : row.outputs)
      os << ',' << format_real(value);
    os << '\n';
  }
}

void write_json(std::ostream &os, std::span<const SweepRow> rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto &row : rows) {
    nlohmann::ordered_json obj;
    obj["scenario"] = to_string(row.scenario);
    if (row.basis_mode)
      obj["basis_mode"] = to_string(*row.basis_mode);
    for (const auto &[name, value] : row.inputs)
      obj[name] = value;
    for (const auto &[name, value] : row.outputs) {
      if (std::isnan(value))
        obj[name] = nullptr;
      else
        obj[name] = value;
    }
    doc.push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

void write_rows(std::ostream &os, std::span<const SweepRow> rows, OutputFormat format) {
  if (format == OutputFormat::json)
    write_json(os, rows);
  else
    write_csv(os, rows);
}

std::string run_metadata(const std::string &command, const RunConfig &config) {
  const auto range = [](const Range &r) {
    return nlohmann::ordered_json{{"min", r.min}, {"max", r.max}, {"steps", r.steps}};
  };
  nlohmann::ordered_json meta;
  meta["command"] = command;
  meta["entropy_log_base"] = 2;
  meta["theta_grid"] = range(config.theta);
  meta["v_grid"] = range(config.v);
  meta["cos_theta_prime_grid"] = range(config.cos_theta_prime);
  meta["widths"] = config.widths;
  meta["fig5_widths"] = config.fig5_widths;
  meta["critical_widths"] = config.critical_widths;
  meta["k0"] = config.k0;
  meta["quadrature"] = {{"n_radial", config.grid.n_radial},
                        {"n_azimuthal", config.grid.n_azimuthal},
                        {"radial_cutoff_sigma", config.grid.radial_cutoff},
                        {"radial_rule", "gauss-legendre"},
                        {"azimuthal_rule", "uniform periodic"}};
  meta["basis_mode"] = to_string(config.basis);
  meta["critical_search"] = {{"range", "(0, 1)"},
                             {"coarse_step", config.critical_step},
                             {"tolerance", config.critical_tolerance}};
  meta["grid_note"] = "v and W grids are tool defaults";
  return meta.dump(2) + "\n";
}

} // namespace polboost
