#pragma once

#include "polboost/kinematics.hpp"

#include <complex>
#include <span>

namespace polboost {

using Complex = std::complex<double>;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;

/// Spatial part of a photon polarization four-vector (the time slot is
/// identically zero for every state built here).
struct PolarizationVector {
  CVec3 c{CVec3::Zero()};

  double norm2() const { return c.squaredNorm(); }
  /// |c . khat|, zero for a state transverse to khat.
  double longitudinal(const UnitDirection &dir) const;
};

/// Two monochromatic photons prepared along different directions.
struct MonochromaticPreparation {
  UnitDirection dir1, dir2;
  PolarizationVector pol1, pol2;
  double prior1{0.5}, prior2{0.5};

  /// Throws DomainError unless priors sum to 1 and each state is transverse.
  void validate() const;
};

/// R(k) applied to the standard helicity vector (1, +-i, 0)/sqrt(2).
PolarizationVector helicity_vector(const UnitDirection &dir, int sigma);

struct TransformedPolarization {
  UnitDirection dir;
  PolarizationVector pol;
};

/// Frame change D(L) = R(L k) R_z(Theta(L, k)) R(k)^-1 applied to a state
/// carried by a photon along `dir`.
TransformedPolarization transform_polarization(std::span<const LorentzFactor> factors,
                                               const UnitDirection &dir,
                                               const PolarizationVector &pol);

/// Hermitian inner product <a|b>, conjugate-linear in a.
Complex overlap(const PolarizationVector &a, const PolarizationVector &b);

/// Positive helicity along z and negative helicity along (theta, 0), equal
/// priors.
MonochromaticPreparation opposite_helicity_pair(double theta);

/// Both photons of a preparation seen through the same frame change.
MonochromaticPreparation transform_preparation(std::span<const LorentzFactor> factors,
                                               const MonochromaticPreparation &prep);

} // namespace polboost
