#pragma once

#include "polboost/wavepacket.hpp"

#include <cstdint>

namespace polboost::oracle {

/// Self-normalized Monte Carlo estimate of the effective density matrix,
/// with delta-method standard errors for the real and imaginary parts of
/// every entry.
struct MonteCarloEstimate {
  CMat3 mean{CMat3::Zero()};
  Mat3 stderr_real{Mat3::Zero()};
  Mat3 stderr_imag{Mat3::Zero()};
  std::size_t samples{0};

  /// Largest |entry - mean| / stderr over all real and imaginary parts.
  /// Entries whose standard error is below `floor` are compared absolutely
  /// against `floor`.
  double max_standard_score(const CMat3 &other, double floor = 1e-12) const;
};

/// Samples the transverse momentum directly from the Gaussian and weights
/// each draw by 1/(2 k^0). Polarizations come from the explicit
/// (e_theta + i sigma e_phi)/sqrt(2) form at the boosted direction; no
/// quadrature or rotation-matrix code is shared with the main path.
MonteCarloEstimate monte_carlo_density(int helicity, double v, const PacketSpec &spec,
                                       std::size_t samples, std::uint64_t seed,
                                       BasisMode mode = BasisMode::boosted_basis);

} // namespace polboost::oracle
