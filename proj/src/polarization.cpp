#include "polboost/polarization.hpp"

#include "polboost/errors.hpp"

#include <cmath>

namespace polboost {

double PolarizationVector::longitudinal(const UnitDirection &dir) const {
  return std::abs(c.dot(dir.unit_vector().cast<Complex>()));
}

void MonochromaticPreparation::validate() const {
  if (prior1 < 0.0 || prior2 < 0.0 || std::abs(prior1 + prior2 - 1.0) > 1e-12)
    throw DomainError("priors must be non-negative and sum to 1");
  if (pol1.longitudinal(dir1) > 1e-10 || pol2.longitudinal(dir2) > 1e-10)
    throw DomainError("polarization is not transverse to its momentum");
}

PolarizationVector helicity_vector(const UnitDirection &dir, int sigma) {
  if (sigma != 1 && sigma != -1)
    throw DomainError("helicity must be +1 or -1");
  const CVec3 standard = CVec3(Complex(1.0, 0.0), Complex(0.0, sigma), Complex(0.0, 0.0)) /
                         std::sqrt(2.0);
  const Mat3 r = standard_rotation(dir).spatial_block();
  return {r.cast<Complex>() * standard};
}

TransformedPolarization transform_polarization(std::span<const LorentzFactor> factors,
                                               const UnitDirection &dir,
                                               const PolarizationVector &pol) {
  if (factors.empty())
    return {dir, pol};

  const FourVector k = photon_momentum(dir);
  const FourVector image = compose(factors).apply(k);
  // R(k) must use the same azimuth convention as the Wigner angle, which
  // sees only the momentum (phi = 0 on the z axis).
  const UnitDirection old_dir = UnitDirection::from_vector(k.spatial());
  const UnitDirection new_dir = UnitDirection::from_vector(image.spatial());
  const double theta = wigner_angle(factors, k);

  const Mat3 d = standard_rotation(new_dir).spatial_block() *
                 rotation_z(theta).spatial_block() *
                 standard_rotation(old_dir).spatial_block().transpose();
  return {new_dir, {d.cast<Complex>() * pol.c}};
}

Complex overlap(const PolarizationVector &a, const PolarizationVector &b) {
  return a.c.dot(b.c); // Eigen's dot conjugates the left operand
}

MonochromaticPreparation opposite_helicity_pair(double theta) {
  MonochromaticPreparation prep;
  prep.dir1 = {0.0, 0.0};
  prep.dir2 = {theta, 0.0};
  prep.pol1 = helicity_vector(prep.dir1, +1);
  prep.pol2 = helicity_vector(prep.dir2, -1);
  return prep;
}

MonochromaticPreparation transform_preparation(std::span<const LorentzFactor> factors,
                                               const MonochromaticPreparation &prep) {
  MonochromaticPreparation out = prep;
  auto first = transform_polarization(factors, prep.dir1, prep.pol1);
  auto second = transform_polarization(factors, prep.dir2, prep.pol2);
  out.dir1 = first.dir;
  out.pol1 = first.pol;
  out.dir2 = second.dir;
  out.pol2 = second.pol;
  return out;
}

} // namespace polboost
