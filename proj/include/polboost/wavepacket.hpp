#pragma once

#include "polboost/polarization.hpp"

#include <array>
#include <string>

namespace polboost {

/// Gaussian transverse momentum distribution at fixed longitudinal momentum
/// k0: |f(k)|^2 ~ exp(-k_r^2 / 2 sigma^2) delta(k_z - k0).
struct PacketSpec {
  double k0{1.0};
  double sigma{0.5};

  /// Dimensionless width sigma / k0.
  double width() const { return sigma / k0; }
  static PacketSpec from_width(double w, double k0 = 1.0) { return {k0, w * k0}; }
  void validate() const;
};

/// Tensor rule: Gauss-Legendre in k_r on [0, cutoff * sigma], uniform
/// (periodic trapezoid) in phi.
struct QuadratureGrid {
  int n_radial{64};
  int n_azimuthal{64};
  double radial_cutoff{8.0};

  void validate() const;
  QuadratureGrid doubled() const { return {2 * n_radial, 2 * n_azimuthal, radial_cutoff}; }
};

/// Where the transverse basis b_m is evaluated in the boosted frame:
/// at the boosted photon direction (physical detector axes), or at the
/// source-frame direction as the formula is usually printed.
enum class BasisMode { boosted_basis, literal };

std::string to_string(BasisMode mode);
BasisMode parse_basis_mode(const std::string &text);

struct DensityDiagnostics {
  double hermiticity_defect{0.0};
  double trace_defect{0.0}; ///< |Tr rho - 1|
  double min_eigenvalue{0.0};

  bool ok() const;
  std::string describe() const;
};

/// Effective 3x3 polarization density matrix, rows/columns ordered (x, y, z).
class PolDensityMatrix {
public:
  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kTraceTol = 1e-8;
  static constexpr double kEigenTol = -1e-9;

  /// Validates the invariants; throws DomainError with diagnostics.
  explicit PolDensityMatrix(const CMat3 &m);

  /// Pure state |a><a| (a normalized by the caller).
  static PolDensityMatrix pure(const PolarizationVector &a);

  const CMat3 &matrix() const { return m_; }
  static DensityDiagnostics diagnose(const CMat3 &m);

private:
  CMat3 m_;
};

/// Transverse projections b_m = e_m - (e_m . k) k of the Cartesian axes.
std::array<Vec3, 3> transverse_basis(const UnitDirection &dir);

/// Radial integrand weight k_r exp(-k_r^2/2 sigma^2) / (2 sqrt(k_r^2 + k0^2)):
/// Gaussian profile, invariant-measure factor 1/(2 k^0) and polar Jacobian.
double packet_weight(double k_r, const PacketSpec &spec);

/// Integrated matrix element <alpha'|b_m><b_n|alpha'> over the packet for a
/// photon of helicity `helicity`, seen by a detector moving with speed v
/// along z. Parallel over radial nodes; bit-identical for any thread count.
PolDensityMatrix effective_density_matrix(int helicity, double v, const PacketSpec &spec,
                                          const QuadratureGrid &grid = {},
                                          BasisMode mode = BasisMode::boosted_basis);

namespace reference {

/// Serial version of effective_density_matrix that pushes every node through
/// the generic polarization transform. Kept for testing and benchmarks.
PolDensityMatrix effective_density_matrix(int helicity, double v, const PacketSpec &spec,
                                          const QuadratureGrid &grid = {},
                                          BasisMode mode = BasisMode::boosted_basis);

} // namespace reference

} // namespace polboost
