// Acceptance checks. One PASS/FAIL line per criterion; a criterion passes only
// if its check holds and it finishes inside its time budget.
//
//   polboost_acceptance [path/to/polboost]
//
// The CLI path is needed for the determinism criterion; without it that
// criterion reports FAIL.

#include "polboost/discrimination.hpp"
#include "polboost/harness.hpp"
#include "polboost/information.hpp"
#include "polboost/monte_carlo.hpp"

#include <Eigen/SVD>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace polboost;

namespace {

struct Outcome {
  bool ok{true};
  std::string detail;
};

struct Criterion {
  int id;
  const char *name;
  double budget_s; ///< <= 0: no time limit
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Tracks the worst value of a quantity against a bound.
struct Worst {
  double value{0.0};
  void see(double x) { value = std::max(value, x); }
};

PolarizationVector random_state(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  CVec3 c;
  for (int i = 0; i < 3; ++i)
    c[i] = {g(rng), g(rng)};
  return {c.normalized()};
}

CMat3 random_density(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  CMat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      a(i, j) = {g(rng), g(rng)};
  const CMat3 m = a * a.adjoint();
  return m / m.trace().real();
}

FactorList random_factors(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> count(1, 4), kind(0, 2);
  std::uniform_real_distribution<double> angle(-kPi, kPi), speed(-0.95, 0.95);
  FactorList out;
  for (int i = count(rng); i > 0; --i) {
    const int k = kind(rng);
    if (k == 0)
      out.push_back({TransformKind::boost_z, speed(rng)});
    else
      out.push_back({k == 1 ? TransformKind::rot_y : TransformKind::rot_z, angle(rng)});
  }
  return out;
}

double min_eigenvalue(const CMat3 &m) { return hermitian_eigensystem(m).values[0]; }

Outcome closed_form_reproduction() {
  Worst d;
  for (int i = 0; i < 50; ++i)
    for (int j = 0; j < 50; ++j) {
      const double theta = kPi * i / 49.0, v = -0.98 + 1.96 * j / 49.0;
      d.see(std::abs(p_opt_pipeline(theta, v) - p_opt_closed_form(theta, v)));
    }
  return {d.value < 1e-12, "max |pipeline - closed form| = " + fmt(d.value)};
}

Outcome boundary_limits() {
  Worst forward;
  for (int j = 0; j <= 200; ++j)
    forward.see(std::abs(p_opt_pipeline(0.0, -0.999 + 1.998 * j / 200.0) - 1.0));
  double worst_p = 1.0, worst_theta = 0.0;
  for (int i = 0; i <= 300; ++i) {
    const double theta = 0.75 * kPi * i / 300.0;
    const double p = p_opt_pipeline(theta, -0.999);
    if (p < worst_p) {
      worst_p = p;
      worst_theta = theta;
    }
  }
  const bool forward_ok = forward.value < 1e-12;
  const bool fast_ok = worst_p > 0.999 - 1e-3;
  return {forward_ok && fast_ok, "max |P(0,v) - 1| = " + fmt(forward.value) +
                                     "; min P(theta<=3pi/4, v=-0.999) = " + fmt(worst_p) +
                                     " at theta = " + fmt(worst_theta) + " (needs > 0.999)"};
}

Outcome povm_validity() {
  std::mt19937_64 rng(101);
  Worst psd, complete, no_error;
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_state(rng), b = random_state(rng);
    const auto p = unambiguous_povm(a, b);
    for (const CMat3 *m : {&p.pi0, &p.pi1, &p.pi2})
      psd.see(-min_eigenvalue(*m));
    complete.see((p.pi0 + p.pi1 + p.pi2 - CMat3::Identity()).cwiseAbs().maxCoeff());
    no_error.see(std::max((p.pi1 * b.c).norm(), (p.pi2 * a.c).norm()));
  }
  const double t = std::acos(0.5);
  const PolarizationVector a{CVec3(1, 0, 0)}, b{CVec3(std::cos(t), std::sin(t), 0)};
  const double coeff_err = std::abs(unambiguous_povm(a, b).coefficient - 2.0 / 3.0);
  const bool ok = psd.value <= 1e-10 && complete.value <= 1e-10 && no_error.value <= 1e-10 &&
                  coeff_err <= 1e-12;
  return {ok, "neg eig " + fmt(psd.value) + ", completeness " + fmt(complete.value) +
                  ", no-error " + fmt(no_error.value) + ", |c - 2/3| " + fmt(coeff_err)};
}

Outcome helstrom_oracle() {
  std::mt19937_64 rng(202);
  Worst pure, mixed;
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_state(rng), b = random_state(rng);
    const double s = std::abs(overlap(a, b));
    const auto r = helstrom(PolDensityMatrix::pure(a), PolDensityMatrix::pure(b));
    pure.see(std::abs(r.p_error - 0.5 * (1.0 - std::sqrt(1.0 - s * s))));
  }
  for (int i = 0; i < 100; ++i) {
    const PolDensityMatrix p{random_density(rng)}, m{random_density(rng)};
    const CMat3 diff = p.matrix() - m.matrix();
    const double trace_norm = Eigen::JacobiSVD<CMat3>(diff).singularValues().sum();
    const double from_norm = 0.5 - 0.25 * trace_norm;
    const auto r = helstrom(p, m);
    mixed.see(std::abs(from_norm - r.p_error_from_projectors(p, m)));
  }
  return {pure.value < 1e-10 && mixed.value < 1e-10,
          "pure oracle " + fmt(pure.value) + ", trace-norm vs projectors " + fmt(mixed.value)};
}

Outcome density_integrity() {
  Worst herm, trace, neg, axial, conv;
  const Mat3 rz = rotation_z(0.9).spatial_block();
  for (double v : {-0.9, -0.5, 0.0, 0.5, 0.9})
    for (double w : {0.01, 0.5, 1.0})
      for (int h : {+1, -1}) {
        const auto spec = PacketSpec::from_width(w);
        const CMat3 rho = effective_density_matrix(h, v, spec).matrix();
        const auto d = PolDensityMatrix::diagnose(rho);
        herm.see(d.hermiticity_defect);
        trace.see(d.trace_defect);
        neg.see(-d.min_eigenvalue);
        axial.see((rz.cast<Complex>() * rho * rz.transpose().cast<Complex>() - rho)
                      .cwiseAbs()
                      .maxCoeff());
        const CMat3 fine =
            effective_density_matrix(h, v, spec, QuadratureGrid{}.doubled()).matrix();
        conv.see((fine - rho).cwiseAbs().maxCoeff());
      }
  const bool ok = herm.value <= 1e-10 && trace.value <= 1e-8 && neg.value <= 1e-9 &&
                  axial.value <= 1e-8 && conv.value < 1e-8;
  return {ok, "hermitian " + fmt(herm.value) + ", trace " + fmt(trace.value) + ", neg eig " +
                  fmt(neg.value) + ", axial " + fmt(axial.value) + ", doubling " + fmt(conv.value)};
}

Outcome monte_carlo_equivalence() {
  const auto spec = PacketSpec::from_width(0.5);
  const CMat3 rho = effective_density_matrix(+1, 0.5, spec).matrix();
  const auto mc = oracle::monte_carlo_density(+1, 0.5, spec, 1000000, 20110501);
  const double z = mc.max_standard_score(rho);
  return {z <= 3.0, "max standard score " + fmt(z) + " over 18 real components"};
}

Outcome monochromatic_limit() {
  const auto spec = PacketSpec::from_width(1e-3);
  Worst dist, err;
  for (double v : {-0.5, 0.0, 0.5}) {
    const auto plus = effective_density_matrix(+1, v, spec);
    const auto minus = effective_density_matrix(-1, v, spec);
    // rho_mn = <eps|b_m><b_n|eps>, i.e. the conjugate of eps eps^dagger
    const auto e = helicity_vector({0, 0}, +1);
    const CMat3 projector = (e.c * e.c.adjoint()).conjugate();
    dist.see((plus.matrix() - projector).cwiseAbs().maxCoeff());
    err.see(helstrom(plus, minus).p_error);
  }
  return {dist.value < 1e-4 && err.value < 1e-4,
          "max-norm distance " + fmt(dist.value) + ", p_error " + fmt(err.value)};
}

Outcome critical_point() {
  const RunConfig config;
  std::ostringstream detail;
  bool ok = true;
  double previous = 2.0;
  for (double w : {0.25, 0.5, 0.75, 1.0}) {
    const auto cp = find_critical_point(w, config, BasisMode::boosted_basis);
    detail << "W=" << w << ": v*=" << (cp.found ? fmt(cp.v) : std::string("none")) << "; ";
    if (!cp.found || !(cp.v > 0.0 && cp.v < 1.0) || !(cp.v < previous))
      ok = false;
    previous = cp.found ? cp.v : previous;
  }
  detail << "boosted basis";
  return {ok, detail.str()};
}

Outcome holevo_closed_form() {
  const bool ends = holevo_pure_closed_form(1.0) == 1.0 && holevo_pure_closed_form(-1.0) == 0.0;
  Worst d;
  for (int i = 0; i <= 80; ++i) {
    const double c = -1.0 + 2.0 * i / 80.0;
    const auto prep = opposite_helicity_pair(std::acos(c));
    Ensemble e;
    e.members = {{0.5, PolDensityMatrix::pure(prep.pol1)}, {0.5, PolDensityMatrix::pure(prep.pol2)}};
    d.see(std::abs(holevo_bound(e) - holevo_pure_closed_form(c)));
  }
  return {ends && d.value < 1e-10,
          std::string(ends ? "endpoints exact" : "endpoints off") + ", max defect " + fmt(d.value)};
}

Outcome joint_monotonicity() {
  const RunConfig config;
  const std::vector<double> widths{0.5, 1.0};
  const auto vs = config.v.values();
  const auto rows = sweep_holevo_mixed(widths, vs, config);
  int compared = 0, violations = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].input("W") != rows[i - 1].input("W"))
      continue;
    const double dchi = rows[i].output("chi") - rows[i - 1].output("chi");
    const double dp = rows[i].output("p_correct") - rows[i - 1].output("p_correct");
    if (std::abs(dchi) > 1e-9 && std::abs(dp) > 1e-9) {
      ++compared;
      if ((dchi > 0) != (dp > 0))
        ++violations;
    }
  }
  return {violations == 0 && compared > 0, std::to_string(compared) + " steps compared, " +
                                               std::to_string(violations) +
                                               " sign disagreements (boosted basis, " +
                                               std::to_string(vs.size()) + " v-points)"};
}

Outcome wigner_composition() {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u(-1.0, 1.0), phi(0.0, kTwoPi), e(0.2, 5.0);
  Worst d;
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_factors(rng), b = random_factors(rng);
    const auto k = photon_momentum({std::acos(u(rng)), phi(rng)}, e(rng));
    FactorList ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    const double rhs = wigner_angle(a, compose(b).apply(k)) + wigner_angle(b, k);
    d.see(std::abs(wrap_angle(wigner_angle(ab, k) - rhs)));
  }
  return {d.value < 1e-9, "max additivity defect " + fmt(d.value)};
}

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int shell(const std::string &cmd) { return std::system(cmd.c_str()); }

Outcome determinism(const std::string &cli) {
  if (cli.empty() || !std::filesystem::exists(cli))
    return {false, "CLI binary not given"};
  const auto dir = std::filesystem::temp_directory_path() / "polboost_acceptance";
  std::filesystem::create_directories(dir);
  const std::array<std::string, 8> commands = {
      "wigner --factors rot_y:0.3,boost_z:0.5,rot_z:1.1 --theta 0.4 --phi 1.0",
      "unambiguous",
      "minerror --basis-mode both",
      "critical --basis-mode both",
      "holevo --figure 4",
      "holevo --figure 5 --basis-mode both",
      "selftest",
      "--format json minerror --v-steps 9"};
  int differing = 0;
  std::string detail;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      // different thread counts per run: output must not depend on scheduling
      const auto file = dir / ("run" + std::to_string(i) + "_" + std::to_string(run) + ".out");
      const std::string threads = run == 0 ? "1" : "3";
      const int rc = shell("OMP_NUM_THREADS=" + threads + " '" + cli + "' --out '" +
                           file.string() + "' " + commands[i] + " > /dev/null 2>&1");
      outputs[run] = slurp(file) + slurp(file.string() + ".meta.json");
      if (rc != 0 || outputs[run].empty()) {
        ++differing;
        detail += " [" + commands[i] + ": exit " + std::to_string(rc) + "]";
      }
    }
    if (outputs[0] != outputs[1]) {
      ++differing;
      detail += " [" + commands[i] + ": outputs differ]";
    }
  }
  std::filesystem::remove_all(dir);
  return {differing == 0,
          std::to_string(commands.size()) + " invocations run twice" + (detail.empty() ? "" : ";") +
              detail};
}

} // namespace

int main(int argc, char **argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {1, "closed-form reproduction", 5, closed_form_reproduction},
      {2, "boundary limits", 1, boundary_limits},
      {3, "POVM validity sweep", 5, povm_validity},
      {4, "Helstrom oracle", 5, helstrom_oracle},
      {5, "density-matrix integrity", 60, density_integrity},
      {6, "Monte Carlo equivalence", 60, monte_carlo_equivalence},
      {7, "monochromatic limit", 0, monochromatic_limit},
      {8, "critical-point phenomenology", 300, critical_point},
      {9, "Holevo closed form", 5, holevo_closed_form},
      {10, "joint monotonicity", 300, joint_monotonicity},
      {11, "Wigner composition", 2, wigner_composition},
      {12, "determinism", 0, [&cli] { return determinism(cli); }},
  };

  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception &e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_s <= 0 || seconds < c.budget_s;
    const bool pass = out.ok && in_time;
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " ("
              << fmt(seconds) << " s" << (in_time ? "" : ", over budget") << "): " << out.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
