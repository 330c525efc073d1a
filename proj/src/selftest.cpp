#include "polboost/discrimination.hpp"
#include "polboost/harness.hpp"
#include "polboost/information.hpp"
#include "polboost/monte_carlo.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

namespace polboost {

namespace {

struct Check {
  const char *name;
  std::function<std::string()> run; ///< empty string on success
};

FactorList random_factors(std::mt19937_64 &rng, int count) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> angle(-kPi, kPi), speed(-0.95, 0.95);
  FactorList out;
  for (int i = 0; i < count; ++i) {
    switch (kind(rng)) {
    case 0:
      out.push_back({TransformKind::boost_z, speed(rng)});
      break;
    case 1:
      out.push_back({TransformKind::rot_y, angle(rng)});
      break;
    default:
      out.push_back({TransformKind::rot_z, angle(rng)});
      break;
    }
  }
  return out;
}

UnitDirection random_direction(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), phi(0.0, kTwoPi);
  return {std::acos(u(rng)), phi(rng)};
}

PolarizationVector random_state(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  CVec3 c;
  for (int i = 0; i < 3; ++i)
    c[i] = {g(rng), g(rng)};
  return {c / c.norm()};
}

std::string fail(const char *what, double value) {
  std::ostringstream os;
  os << what << " " << value;
  return os.str();
}

} // namespace

bool run_selftest(std::ostream &os, const RunConfig &config) {
  const std::uint64_t seed = config.seed;
  const std::vector<Check> checks = {
      {"lorentz metric and null preservation",
       [seed] {
         std::mt19937_64 rng(seed);
         for (int i = 0; i < 200; ++i) {
           const auto t = compose(random_factors(rng, 4));
           if (t.metric_defect() > 1e-10)
             return fail("metric defect", t.metric_defect());
           const auto k = t.apply(photon_momentum(random_direction(rng)));
           if (std::abs(k.minkowski_norm2()) > 1e-10 * k.t * k.t)
             return fail("null defect", k.minkowski_norm2());
         }
         return std::string{};
       }},
      {"wigner angle table matches little-group matrix",
       [seed] {
         std::mt19937_64 rng(seed + 1);
         for (int i = 0; i < 200; ++i) {
           const auto f = random_factors(rng, 3);
           const auto k = photon_momentum(random_direction(rng));
           const double d = wrap_angle(wigner_angle(f, k) - wigner_angle_from_matrix(compose(f), k));
           if (std::abs(d) > 1e-9)
             return fail("angle mismatch", d);
         }
         return std::string{};
       }},
      {"helicity covariance of the polarization transform",
       [seed] {
         std::mt19937_64 rng(seed + 2);
         for (int i = 0; i < 200; ++i) {
           const auto f = random_factors(rng, 3);
           const auto dir = random_direction(rng);
           for (int sigma : {+1, -1}) {
             const auto moved = transform_polarization(f, dir, helicity_vector(dir, sigma));
             const double theta = wigner_angle(f, photon_momentum(dir));
             const CVec3 expect = std::polar(1.0, -sigma * theta) *
                                  helicity_vector(moved.dir, sigma).c;
             const double err = (moved.pol.c - expect).cwiseAbs().maxCoeff();
             if (err > 1e-10)
               return fail("covariance defect", err);
           }
         }
         return std::string{};
       }},
      {"unambiguous pipeline equals closed form",
       [] {
         for (int i = 0; i < 20; ++i) {
           for (int j = 0; j < 20; ++j) {
             const double theta = kPi * i / 19.0, v = -0.95 + 1.9 * j / 19.0;
             const double d = std::abs(p_opt_pipeline(theta, v) - p_opt_closed_form(theta, v));
             if (d > 1e-12)
               return fail("difference", d);
           }
         }
         return std::string{};
       }},
      {"unambiguous POVM validity",
       [seed] {
         std::mt19937_64 rng(seed + 3);
         for (int i = 0; i < 200; ++i) {
           const auto a1 = random_state(rng), a2 = random_state(rng);
           const auto povm = unambiguous_povm(a1, a2);
           for (const CMat3 *p : {&povm.pi0, &povm.pi1, &povm.pi2})
             if (hermitian_eigensystem(*p).values[0] < -1e-10)
               return fail("negative POVM eigenvalue", hermitian_eigensystem(*p).values[0]);
           const double no_error =
               std::max((povm.pi1 * a2.c).norm(), (povm.pi2 * a1.c).norm());
           if (no_error > 1e-10)
             return fail("no-error defect", no_error);
           const double d = std::abs(povm.success_probability(a1, a2) - p_opt_unambiguous(a1, a2));
           if (d > 1e-12)
             return fail("success probability defect", d);
         }
         return std::string{};
       }},
      {"helstrom pure-state oracle",
       [seed] {
         std::mt19937_64 rng(seed + 4);
         for (int i = 0; i < 200; ++i) {
           const auto a = random_state(rng), b = random_state(rng);
           const double s = std::abs(overlap(a, b));
           const auto r = helstrom(PolDensityMatrix::pure(a), PolDensityMatrix::pure(b));
           const double d = std::abs(r.p_error - 0.5 * (1.0 - std::sqrt(1.0 - s * s)));
           if (d > 1e-10)
             return fail("p_error defect", d);
         }
         return std::string{};
       }},
      {"effective density matrix invariants",
       [&config] {
         for (double w : {0.01, 0.5, 1.0}) {
           for (double v : {-0.9, 0.0, 0.9}) {
             const auto rho = effective_density_matrix(+1, v, config.packet(w), config.grid);
             const Mat3 rz = rotation_z(0.7).spatial_block();
             const double axial =
                 (rz.cast<Complex>() * rho.matrix() * rz.transpose().cast<Complex>() - rho.matrix())
                     .cwiseAbs()
                     .maxCoeff();
             if (axial > 1e-8)
               return fail("axial asymmetry", axial);
           }
         }
         return std::string{};
       }},
      {"quadrature agrees with Monte Carlo oracle",
       [&config] {
         const PacketSpec spec = config.packet(0.5);
         const auto rho = effective_density_matrix(+1, 0.5, spec, config.grid);
         const auto mc = oracle::monte_carlo_density(+1, 0.5, spec, config.mc_samples, config.seed);
         const double z = mc.max_standard_score(rho.matrix());
         return z <= 4.0 ? std::string{} : fail("max standard score", z);
       }},
      {"holevo closed form matches numerical bound",
       [] {
         for (int i = 0; i <= 40; ++i) {
           const double c = -1.0 + 2.0 * i / 40.0;
           const auto prep = opposite_helicity_pair(std::acos(c));
           Ensemble e;
           e.members = {{0.5, PolDensityMatrix::pure(prep.pol1)},
                        {0.5, PolDensityMatrix::pure(prep.pol2)}};
           const double d = std::abs(holevo_bound(e) - holevo_pure_closed_form(c));
           if (d > 1e-10)
             return fail("chi defect", d);
         }
         return std::string{};
       }},
  };

  bool all = true;
  for (const auto &check : checks) {
    std::string problem;
    try {
      problem = check.run();
    } catch (const std::exception &e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      os << "PASS " << check.name << '\n';
    } else {
      os << "FAIL " << check.name << ": " << problem << '\n';
      all = false;
    }
  }
  return all;
}

} // namespace polboost
