#pragma once

#include "polboost/quadrature.hpp"
#include "polboost/wavepacket.hpp"

namespace polboost::detail {

/// Radial rule with the packet weight folded into the weights. Throws
/// IntegrationError when the rule cannot integrate the bare Gaussian
/// moment to 1e-10 relative accuracy.
QuadratureRule weighted_radial_rule(const PacketSpec &spec, const QuadratureGrid &grid);

/// Contribution of one node: amplitudes <alpha'|b_m> for m = x, y, z.
CMat3 node_term(const CVec3 &amplitudes);

/// Divide by the accumulated normalization and enforce the density-matrix
/// invariants, reporting failures as IntegrationError.
PolDensityMatrix finalize(const CMat3 &sum, double norm, double trace_sum, BasisMode mode,
                          int helicity, double v, const PacketSpec &spec,
                          const QuadratureGrid &grid);

void validate_inputs(int helicity, double v, const PacketSpec &spec, const QuadratureGrid &grid);

} // namespace polboost::detail
