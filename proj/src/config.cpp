#include "polboost/errors.hpp"
#include "polboost/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace polboost {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_real(const std::string &text) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(x))
    throw ConfigError("expected a real number, got '" + text + "'");
  return x;
}

long long to_integer(const std::string &text) {
  long long x = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("expected an integer, got '" + text + "'");
  return x;
}

std::vector<double> to_real_list(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(to_real(trim(item)));
  if (out.empty())
    throw ConfigError("expected a comma-separated list of reals");
  return out;
}

using Setter = std::function<void(RunConfig &, const std::string &)>;

struct Field {
  Setter set;
  const char *doc;
};

const std::map<std::string, Field> &fields() {
  static const std::map<std::string, Field> table = {
      {"theta_min", {[](RunConfig &c, const std::string &s) { c.theta.min = to_real(s); },
                     "real, radians; first theta of the unambiguous sweep"}},
      {"theta_max", {[](RunConfig &c, const std::string &s) { c.theta.max = to_real(s); },
                     "real, radians <= pi; last theta"}},
      {"theta_steps", {[](RunConfig &c, const std::string &s) { c.theta.steps = int(to_integer(s)); },
                       "integer >= 1; theta grid points"}},
      {"v_min", {[](RunConfig &c, const std::string &s) { c.v.min = to_real(s); },
                 "real in (-1, 1); first detector speed"}},
      {"v_max", {[](RunConfig &c, const std::string &s) { c.v.max = to_real(s); },
                 "real in (-1, 1); last detector speed"}},
      {"v_steps", {[](RunConfig &c, const std::string &s) { c.v.steps = int(to_integer(s)); },
                   "integer >= 1; velocity grid points"}},
      {"cos_min", {[](RunConfig &c, const std::string &s) { c.cos_theta_prime.min = to_real(s); },
                   "real in [-1, 1]; first cos(theta') of the Holevo table"}},
      {"cos_max", {[](RunConfig &c, const std::string &s) { c.cos_theta_prime.max = to_real(s); },
                   "real in [-1, 1]; last cos(theta')"}},
      {"cos_steps",
       {[](RunConfig &c, const std::string &s) { c.cos_theta_prime.steps = int(to_integer(s)); },
        "integer >= 1; cos(theta') grid points"}},
      {"widths", {[](RunConfig &c, const std::string &s) { c.widths = to_real_list(s); },
                  "list of W = sigma/k0 > 0 for the minimum-error sweep"}},
      {"fig5_widths", {[](RunConfig &c, const std::string &s) { c.fig5_widths = to_real_list(s); },
                       "list of W > 0 for the mixed-state Holevo sweep"}},
      {"critical_widths",
       {[](RunConfig &c, const std::string &s) { c.critical_widths = to_real_list(s); },
        "list of W > 0 for the critical-point search"}},
      {"k0", {[](RunConfig &c, const std::string &s) { c.k0 = to_real(s); },
              "real > 0; central longitudinal momentum"}},
      {"n_radial", {[](RunConfig &c, const std::string &s) { c.grid.n_radial = int(to_integer(s)); },
                    "integer >= 8; Gauss-Legendre nodes in k_r"}},
      {"n_azimuthal",
       {[](RunConfig &c, const std::string &s) { c.grid.n_azimuthal = int(to_integer(s)); },
        "integer >= 8; uniform nodes in phi"}},
      {"radial_cutoff", {[](RunConfig &c, const std::string &s) { c.grid.radial_cutoff = to_real(s); },
                         "real > 0; radial range in units of sigma"}},
      {"basis_mode", {[](RunConfig &c, const std::string &s) { c.basis = parse_basis_selection(s); },
                      "boosted | literal | both"}},
      {"format",
       {[](RunConfig &c, const std::string &s) {
          if (s == "csv")
            c.format = OutputFormat::csv;
          else if (s == "json")
            c.format = OutputFormat::json;
          else
            throw ConfigError("format must be csv or json");
        },
        "csv | json"}},
      {"out", {[](RunConfig &c, const std::string &s) { c.out = s; },
               "output path; empty writes to stdout"}},
      {"critical_step", {[](RunConfig &c, const std::string &s) { c.critical_step = to_real(s); },
                         "real in (0, 0.5); coarse grid spacing of the critical search"}},
      {"critical_tolerance",
       {[](RunConfig &c, const std::string &s) { c.critical_tolerance = to_real(s); },
        "real > 0; golden-section bracket width"}},
      {"seed", {[](RunConfig &c, const std::string &s) {
                  const auto x = to_integer(s);
                  if (x < 0)
                    throw ConfigError("seed must be non-negative");
                  c.seed = static_cast<std::uint64_t>(x);
                },
                "integer >= 0; Monte Carlo oracle seed"}},
      {"mc_samples", {[](RunConfig &c, const std::string &s) {
                        const auto x = to_integer(s);
                        if (x < 2)
                          throw ConfigError("mc_samples must be at least 2");
                        c.mc_samples = static_cast<std::size_t>(x);
                      },
                      "integer >= 2; Monte Carlo oracle sample count"}},
  };
  return table;
}

void check_range(const Range &r, const char *name, double lo, double hi, bool open) {
  const auto inside = [&](double x) { return open ? (x > lo && x < hi) : (x >= lo && x <= hi); };
  if (r.steps < 1)
    throw ConfigError(std::string(name) + "_steps must be at least 1");
  if (!inside(r.min) || !inside(r.max))
    throw ConfigError(std::string(name) + " range outside its domain");
  if (r.max < r.min)
    throw ConfigError(std::string(name) + "_max is below " + name + "_min");
}

void check_widths(const std::vector<double> &ws, const char *name) {
  if (ws.empty())
    throw ConfigError(std::string(name) + " must not be empty");
  for (double w : ws)
    if (!(w > 0.0))
      throw ConfigError(std::string(name) + " entries must be positive");
}

} // namespace

void RunConfig::validate() const {
  check_range(theta, "theta", 0.0, 3.14159265358979323846, false);
  check_range(v, "v", -1.0, 1.0, true);
  check_range(cos_theta_prime, "cos", -1.0, 1.0, false);
  check_widths(widths, "widths");
  check_widths(fig5_widths, "fig5_widths");
  check_widths(critical_widths, "critical_widths");
  if (!(k0 > 0.0))
    throw ConfigError("k0 must be positive");
  if (grid.n_radial < 8 || grid.n_azimuthal < 8)
    throw ConfigError("n_radial and n_azimuthal must be at least 8");
  if (!(grid.radial_cutoff > 0.0))
    throw ConfigError("radial_cutoff must be positive");
  if (!(critical_step > 0.0 && critical_step < 0.5))
    throw ConfigError("critical_step must lie in (0, 0.5)");
  if (!(critical_tolerance > 0.0))
    throw ConfigError("critical_tolerance must be positive");
  if (mc_samples < 2)
    throw ConfigError("mc_samples must be at least 2");
}

RunConfig parse_config(std::istream &in, const std::string &source, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    const std::string body = trim(line);
    if (body.empty())
      continue;
    const auto where = source + ":" + std::to_string(lineno) + ": ";
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(where + "expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    const auto it = fields().find(key);
    if (it == fields().end())
      throw ConfigError(where + "unknown key '" + key + "'");
    try {
      it->second.set(base, value);
    } catch (const ConfigError &e) {
      throw ConfigError(where + key + ": " + e.what());
    }
  }
  try {
    base.validate();
  } catch (const ConfigError &e) {
    throw ConfigError(source + ": " + e.what());
  }
  return base;
}

RunConfig load_config(const std::filesystem::path &path, RunConfig base) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path.string() + "'");
  return parse_config(in, path.string(), std::move(base));
}

std::string config_schema() {
  std::ostringstream os;
  for (const auto &[key, field] : fields())
    os << key << " = <" << field.doc << ">\n";
  return os.str();
}

} // namespace polboost
