#pragma once

#include "polboost/linalg.hpp"
#include "polboost/wavepacket.hpp"

#include <array>

namespace polboost {

/// Unit vectors inside span{a1, a2} with <perp1|a2> = 0 and <perp2|a1> = 0.
struct ReciprocalBasis {
  PolarizationVector perp1, perp2;
  Complex t1, t2; ///< <perp_i|a_i>
};

/// Throws DegeneratePairError when the inputs are parallel.
ReciprocalBasis reciprocal_basis(const PolarizationVector &a1, const PolarizationVector &a2);

/// No-error POVM for two pure states at equal priors.
struct UnambiguousPovm {
  CMat3 pi1, pi2, pi0;
  Complex t1, t2;
  double coefficient{0.0}; ///< pi_i = coefficient |perp_i><perp_i|

  /// (1/2)<a1|pi1|a1> + (1/2)<a2|pi2|a2>
  double success_probability(const PolarizationVector &a1, const PolarizationVector &a2) const;
};

/// Optimal POVM with pi_i = |perp_i><perp_i| / (1 + |<a1|a2>|). The
/// coefficient is the largest that keeps pi0 positive; it is 2/3 at
/// |<a1|a2>| = 1/2.
UnambiguousPovm unambiguous_povm(const PolarizationVector &a1, const PolarizationVector &a2);

/// 1 - |<a1|a2>|
double p_opt_unambiguous(const PolarizationVector &a1, const PolarizationVector &a2);

/// (1 + cos theta)(1 - v) / (2 (1 - v cos theta)) for the opposite-helicity
/// pair seen by a detector moving at v along the first photon.
double p_opt_closed_form(double theta, double v);

/// Same quantity through helicity vectors, the frame transform and the
/// overlap.
double p_opt_pipeline(double theta, double v);

struct MinErrorResult {
  double p_error{0.5};
  CMat3 projector_plus{CMat3::Zero()};  ///< guess "+" outcome
  CMat3 projector_minus{CMat3::Identity()};
  std::array<double, 3> omega{};        ///< eigenvalues of rho_minus - rho_plus, ascending

  /// (1/2)Tr(rho+ pi-) + (1/2)Tr(rho- pi+)
  double p_error_from_projectors(const PolDensityMatrix &rho_plus,
                                 const PolDensityMatrix &rho_minus) const;
};

/// Minimum-error measurement between two states at equal priors.
MinErrorResult helstrom(const PolDensityMatrix &rho_plus, const PolDensityMatrix &rho_minus);

} // namespace polboost
