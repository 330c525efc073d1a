#include "polboost/errors.hpp"
#include "polboost/polarization.hpp"

#include <doctest.h>

#include <random>

using namespace polboost;

namespace {

const Complex I{0.0, 1.0};

double dist(const CVec3 &a, const CVec3 &b) { return (a - b).cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("helicity vectors") {
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(dist(helicity_vector({0, 0}, +1).c, CVec3(r, I * r, 0)) < 1e-15);
  const double t = 0.9;
  CHECK(dist(helicity_vector({t, 0}, -1).c, CVec3(std::cos(t) * r, -I * r, -std::sin(t) * r)) <
        1e-15);
  CHECK(std::abs(overlap(helicity_vector({0, 0}, +1), helicity_vector({0, 0}, -1))) < 1e-15);
  CHECK(std::abs(overlap(helicity_vector({0, 0}, +1), helicity_vector({0, 0}, +1)) - 1.0) < 1e-15);
  CHECK_THROWS_AS(helicity_vector({0, 0}, 0), DomainError);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> th(0, kPi), ph(0, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const UnitDirection d{th(rng), ph(rng)};
    for (int s : {-1, 1}) {
      const auto e = helicity_vector(d, s);
      CHECK(std::abs(e.norm2() - 1.0) < 1e-12);
      CHECK(e.longitudinal(d) < 1e-10);
    }
  }
}

TEST_CASE("transform_polarization examples") {
  const auto plus = helicity_vector({0, 0}, +1);
  const FactorList boost{{TransformKind::boost_z, 0.7}};
  const auto moved = transform_polarization(boost, {0, 0}, plus);
  CHECK(moved.dir.theta == doctest::Approx(0.0));
  CHECK(std::abs(std::abs(overlap(moved.pol, plus)) - 1.0) < 1e-12);

  const double t = 1.3, v = 0.4, tp = aberrate(t, v);
  const auto m2 = transform_polarization(FactorList{{TransformKind::boost_z, v}}, {t, 0}, helicity_vector({t, 0}, -1));
  CHECK(m2.dir.theta == doctest::Approx(tp).epsilon(1e-13));
  const double r = 1.0 / std::sqrt(2.0);
  const CVec3 expect(std::cos(tp) * r, -I * r, -std::sin(tp) * r);
  CHECK(std::abs(std::abs(m2.pol.c.dot(expect)) - 1.0) < 1e-12);

  const auto same = transform_polarization({}, {t, 0.4}, plus);
  CHECK(same.pol.c == plus.c);
  CHECK(same.dir.theta == t);
}

TEST_CASE("transformed pair overlap") {
  for (double t : {0.0, 0.5, 2.0, 3.0}) {
    for (double v : {-0.8, 0.0, 0.6}) {
      const FactorList f{{TransformKind::boost_z, v}};
      const auto p = transform_preparation(f, opposite_helicity_pair(t));
      const double c = std::cos(aberrate(t, v));
      CHECK(std::abs(std::abs(overlap(p.pol1, p.pol2)) - std::abs(c - 1.0) / 2.0) < 1e-12);
      p.validate();
    }
  }
}

TEST_CASE("shared transforms keep the overlap of co-moving states") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> a(-kPi, kPi), sp(-0.9, 0.9);
  for (int i = 0; i < 100; ++i) {
    const UnitDirection d{std::abs(a(rng)), a(rng) + kPi};
    const auto e1 = helicity_vector(d, 1), e2 = helicity_vector(d, -1);
    const Complex c1(g(rng), g(rng)), c2(g(rng), g(rng));
    PolarizationVector p{(c1 * e1.c + c2 * e2.c).normalized()};
    PolarizationVector q{e1.c};
    const FactorList f{{TransformKind::rot_y, a(rng)}, {TransformKind::boost_z, sp(rng)},
                       {TransformKind::rot_z, a(rng)}};
    const auto pm = transform_polarization(f, d, p), qm = transform_polarization(f, d, q);
    CHECK(std::abs(std::abs(overlap(pm.pol, qm.pol)) - std::abs(overlap(p, q))) < 1e-12);
    CHECK(std::abs(pm.pol.norm2() - 1.0) < 1e-12);
  }
}

TEST_CASE("preparation validation") {
  auto prep = opposite_helicity_pair(1.0);
  prep.validate();
  prep.prior1 = 0.7;
  CHECK_THROWS_AS(prep.validate(), DomainError);
  prep = opposite_helicity_pair(1.0);
  prep.pol2 = helicity_vector({0, 0}, -1);
  CHECK_THROWS_AS(prep.validate(), DomainError);
}
