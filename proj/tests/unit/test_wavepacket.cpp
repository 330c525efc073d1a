#include "polboost/errors.hpp"
#include "polboost/monte_carlo.hpp"
#include "polboost/quadrature.hpp"
#include "polboost/wavepacket.hpp"

#include <doctest.h>

#include <omp.h>

using namespace polboost;

namespace {

double max_abs(const CMat3 &m) { return m.cwiseAbs().maxCoeff(); }

// rho_mn = <eps|b_m><b_n|eps> for eps = (1, i, 0)/sqrt(2)
CMat3 plus_projector() {
  const Complex i{0.0, 1.0};
  CMat3 m = CMat3::Zero();
  m << 1.0, i, 0.0, -i, 1.0, 0.0, 0.0, 0.0, 0.0;
  return 0.5 * m;
}

} // namespace

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  const auto rule = gauss_legendre(10, -1.0, 2.0);
  double s0 = 0, s5 = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s0 += rule.weights[i];
    s5 += rule.weights[i] * std::pow(rule.nodes[i], 19);
  }
  CHECK(s0 == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(s5 == doctest::Approx((std::pow(2.0, 20) - 1.0) / 20.0).epsilon(1e-13));
  CHECK_THROWS(gauss_legendre(0, 0, 1));
}

TEST_CASE("transverse basis") {
  auto b = transverse_basis({0, 0});
  CHECK((b[0] - Vec3::UnitX()).norm() < 1e-15);
  CHECK((b[1] - Vec3::UnitY()).norm() < 1e-15);
  CHECK(b[2].norm() < 1e-15);
  b = transverse_basis({kPi / 2, 0});
  CHECK(b[0].norm() < 1e-15);
  const double t = 0.8, p = 2.1;
  b = transverse_basis({t, p});
  const double sx = std::sin(t) * std::cos(p);
  CHECK(b[0].squaredNorm() == doctest::Approx(1 - sx * sx).epsilon(1e-14));
  const Vec3 k = UnitDirection{t, p}.unit_vector();
  for (const auto &v : b)
    CHECK(std::abs(v.dot(k)) < 1e-15);
}

TEST_CASE("packet weight") {
  const PacketSpec spec{1.0, 0.5};
  CHECK(packet_weight(0.0, spec) == 0.0);
  for (double k : {1e-3, 0.3, 2.0, 4.0})
    CHECK(packet_weight(k, spec) > 0.0);
}

TEST_CASE("packet and grid validation") {
  CHECK_THROWS_AS(PacketSpec({1.0, 0.0}).validate(), DomainError);
  CHECK_THROWS_AS(PacketSpec({-1.0, 0.5}).validate(), DomainError);
  CHECK_THROWS_AS(effective_density_matrix(+1, 1.0, {}), DomainError);
  CHECK_THROWS_AS(effective_density_matrix(2, 0.1, {}), DomainError);
  CHECK_THROWS(effective_density_matrix(+1, 0.1, {}, QuadratureGrid{4, 64, 8.0}));
  CHECK(PacketSpec::from_width(0.25, 2.0).sigma == 0.5);
}

TEST_CASE("under-resolved radial rule is reported") {
  // a handful of nodes over 40 sigma misses the Gaussian moment
  CHECK_THROWS_AS(effective_density_matrix(+1, 0.2, {}, QuadratureGrid{8, 8, 40.0}),
                  IntegrationError);
}

TEST_CASE("narrow packets approach the monochromatic projector") {
  for (double v : {-0.5, 0.0, 0.5}) {
    const auto rho = effective_density_matrix(+1, v, PacketSpec::from_width(1e-3));
    CHECK(max_abs(rho.matrix() - plus_projector()) < 1e-4);
  }
}

TEST_CASE("helicity flip conjugates the density matrix") {
  for (auto mode : {BasisMode::boosted_basis, BasisMode::literal}) {
    for (double v : {-0.6, 0.3}) {
      const auto p = effective_density_matrix(+1, v, PacketSpec::from_width(0.7), {}, mode);
      const auto m = effective_density_matrix(-1, v, PacketSpec::from_width(0.7), {}, mode);
      CHECK(max_abs(m.matrix() - p.matrix().conjugate()) < 1e-12);
    }
  }
}

TEST_CASE("density matrix invariants and convergence") {
  const Mat3 rz = rotation_z(1.1).spatial_block();
  for (auto mode : {BasisMode::boosted_basis, BasisMode::literal}) {
    for (double w : {0.01, 0.5, 1.0}) {
      for (double v : {-0.9, 0.0, 0.9}) {
        const auto spec = PacketSpec::from_width(w);
        const auto rho = effective_density_matrix(+1, v, spec, {}, mode);
        const auto d = PolDensityMatrix::diagnose(rho.matrix());
        CHECK(d.ok());
        const CMat3 rotated = rz.cast<Complex>() * rho.matrix() * rz.transpose().cast<Complex>();
        CHECK(max_abs(rotated - rho.matrix()) < 1e-8);
        const auto fine = effective_density_matrix(+1, v, spec, QuadratureGrid{}.doubled(), mode);
        CHECK(max_abs(fine.matrix() - rho.matrix()) < 1e-8);
      }
    }
  }
}

TEST_CASE("parallel kernel matches the serial reference") {
  for (auto mode : {BasisMode::boosted_basis, BasisMode::literal}) {
    for (double v : {-0.7, 0.0, 0.8}) {
      const auto spec = PacketSpec::from_width(0.6);
      const auto fast = effective_density_matrix(-1, v, spec, {}, mode);
      const auto slow = reference::effective_density_matrix(-1, v, spec, {}, mode);
      CHECK(max_abs(fast.matrix() - slow.matrix()) < 1e-13);
    }
  }
}

TEST_CASE("kernel output does not depend on thread count") {
  const auto spec = PacketSpec::from_width(0.5);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = effective_density_matrix(+1, 0.4, spec);
  omp_set_num_threads(3);
  const auto three = effective_density_matrix(+1, 0.4, spec);
  omp_set_num_threads(saved);
  CHECK(one.matrix() == three.matrix());
}

TEST_CASE("quadrature agrees with the Monte Carlo oracle") {
  const auto spec = PacketSpec::from_width(0.5);
  for (double v : {0.0, 0.5}) {
    const auto rho = effective_density_matrix(+1, v, spec);
    const auto mc = oracle::monte_carlo_density(+1, v, spec, 200000, 99);
    CHECK(mc.max_standard_score(rho.matrix()) < 4.0);
  }
}

TEST_CASE("density matrix construction rejects invalid matrices") {
  CMat3 m = CMat3::Zero();
  m(0, 0) = 1.0;
  CHECK_NOTHROW(PolDensityMatrix{m});
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(PolDensityMatrix{m}, DomainError);
  m = CMat3::Identity();
  CHECK_THROWS_AS(PolDensityMatrix{m}, DomainError);
  m = CMat3::Zero();
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  CHECK_THROWS_AS(PolDensityMatrix{m}, DomainError);
}
