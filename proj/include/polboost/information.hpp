#pragma once

#include "polboost/wavepacket.hpp"

#include <utility>
#include <vector>

namespace polboost {

/// Entropies and the Holevo quantity are in bits.
struct Ensemble {
  std::vector<std::pair<double, PolDensityMatrix>> members;

  void validate() const;
  PolDensityMatrix average() const;
};

/// -Tr rho log2 rho, with eigenvalues in [-1e-9, 0) clamped to zero.
double von_neumann_entropy(const PolDensityMatrix &rho);

/// S(sum p_i rho_i) - sum p_i S(rho_i), never below zero.
double holevo_bound(const Ensemble &ensemble);

/// Holevo quantity of the equal-prior opposite-helicity pair at aberrated
/// angle theta', as a function of cos theta'.
double holevo_pure_closed_form(double cos_theta_prime);

} // namespace polboost
