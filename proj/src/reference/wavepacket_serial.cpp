#include "polboost/wavepacket.hpp"

#include "../wavepacket_detail.hpp"

#include <cmath>

namespace polboost::reference {

PolDensityMatrix effective_density_matrix(int helicity, double v, const PacketSpec &spec,
                                          const QuadratureGrid &grid, BasisMode mode) {
  detail::validate_inputs(helicity, v, spec, grid);
  const QuadratureRule radial = detail::weighted_radial_rule(spec, grid);
  const FactorList boost{{TransformKind::boost_z, v}};

  CMat3 sum = CMat3::Zero();
  double norm = 0.0, trace_sum = 0.0;
  for (int i = 0; i < grid.n_radial; ++i) {
    const double w = radial.weights[i] / grid.n_azimuthal;
    const double theta = std::atan2(radial.nodes[i], spec.k0);
    for (int j = 0; j < grid.n_azimuthal; ++j) {
      const UnitDirection dir{theta, kTwoPi * j / grid.n_azimuthal};
      const auto moved = transform_polarization(boost, dir, helicity_vector(dir, helicity));
      const auto b = transverse_basis(mode == BasisMode::boosted_basis ? moved.dir : dir);
      CVec3 amp;
      for (int m = 0; m < 3; ++m)
        amp[m] = moved.pol.c.dot(b[m].cast<Complex>());
      sum += w * detail::node_term(amp);
      norm += w;
      trace_sum += w * amp.squaredNorm();
    }
  }
  return detail::finalize(sum, norm, trace_sum, mode, helicity, v, spec, grid);
}

} // namespace polboost::reference
