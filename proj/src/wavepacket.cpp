#include "polboost/wavepacket.hpp"

#include "polboost/errors.hpp"
#include "polboost/linalg.hpp"
#include "wavepacket_detail.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace polboost {

void PacketSpec::validate() const {
  if (!(k0 > 0.0))
    throw DomainError("packet k0 must be positive");
  if (!(sigma > 0.0))
    throw DomainError("packet sigma must be positive");
}

void QuadratureGrid::validate() const {
  if (n_radial < 8 || n_azimuthal < 8)
    throw DomainError("quadrature grid needs at least 8 nodes per dimension");
  if (!(radial_cutoff > 0.0))
    throw DomainError("radial cutoff must be positive");
}

std::string to_string(BasisMode mode) {
  return mode == BasisMode::boosted_basis ? "boosted" : "literal";
}

BasisMode parse_basis_mode(const std::string &text) {
  if (text == "boosted" || text == "boosted_basis")
    return BasisMode::boosted_basis;
  if (text == "literal" || text == "literal")
    return BasisMode::literal;
  throw DomainError("unknown basis mode '" + text + "'");
}

bool DensityDiagnostics::ok() const {
  return hermiticity_defect <= PolDensityMatrix::kHermitianTol &&
         trace_defect <= PolDensityMatrix::kTraceTol &&
         min_eigenvalue >= PolDensityMatrix::kEigenTol;
}

std::string DensityDiagnostics::describe() const {
  std::ostringstream os;
  os.precision(3);
  os << "hermiticity defect " << hermiticity_defect << ", trace defect " << trace_defect
     << ", min eigenvalue " << min_eigenvalue;
  return os.str();
}

DensityDiagnostics PolDensityMatrix::diagnose(const CMat3 &m) {
  DensityDiagnostics d;
  d.hermiticity_defect = hermiticity_defect(m);
  d.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
  const CMat3 sym = 0.5 * (m + m.adjoint());
  d.min_eigenvalue = hermitian_eigensystem(sym).values[0];
  return d;
}

PolDensityMatrix::PolDensityMatrix(const CMat3 &m) : m_(m) {
  const auto d = diagnose(m);
  if (!d.ok())
    throw DomainError("not a valid density matrix: " + d.describe());
}

PolDensityMatrix PolDensityMatrix::pure(const PolarizationVector &a) {
  return PolDensityMatrix(outer(a.c));
}

std::array<Vec3, 3> transverse_basis(const UnitDirection &dir) {
  const Vec3 k = dir.unit_vector();
  std::array<Vec3, 3> b;
  for (int m = 0; m < 3; ++m) {
    const Vec3 e = Vec3::Unit(m);
    b[m] = e - e.dot(k) * k;
  }
  return b;
}

double packet_weight(double k_r, const PacketSpec &spec) {
  if (k_r < 0.0)
    throw DomainError("radial momentum must be non-negative");
  const double s2 = spec.sigma * spec.sigma;
  return k_r * std::exp(-k_r * k_r / (2.0 * s2)) / (2.0 * std::hypot(k_r, spec.k0));
}

namespace detail {

void validate_inputs(int helicity, double v, const PacketSpec &spec, const QuadratureGrid &grid) {
  if (helicity != 1 && helicity != -1)
    throw DomainError("helicity must be +1 or -1");
  lorentz_factor(v);
  spec.validate();
  grid.validate();
}

QuadratureRule weighted_radial_rule(const PacketSpec &spec, const QuadratureGrid &grid) {
  const double r_max = grid.radial_cutoff * spec.sigma;
  QuadratureRule rule = gauss_legendre(grid.n_radial, 0.0, r_max);

  const double s2 = spec.sigma * spec.sigma;
  double moment = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    moment += rule.weights[i] * r * std::exp(-r * r / (2.0 * s2));
  }
  const double c = grid.radial_cutoff;
  const double exact = -s2 * std::expm1(-0.5 * c * c);
  const double rel = std::abs(moment - exact) / exact;
  if (rel > 1e-10) {
    std::ostringstream os;
    os << "radial rule with " << grid.n_radial << " nodes on [0, " << c
       << " sigma] misses the Gaussian moment by " << rel << " (relative); raise n_radial";
    throw IntegrationError(os.str());
  }

  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    rule.weights[i] *= packet_weight(rule.nodes[i], spec);
  return rule;
}

CMat3 node_term(const CVec3 &amplitudes) {
  // rho_mn accumulates <alpha|b_m><b_n|alpha>
  return amplitudes * amplitudes.adjoint();
}

PolDensityMatrix finalize(const CMat3 &sum, double norm, double trace_sum, BasisMode mode,
                          int helicity, double v, const PacketSpec &spec,
                          const QuadratureGrid &grid) {
  // The literal basis loses the part of alpha' along the source direction,
  // so it is renormalized by its own trace.
  const double denom = mode == BasisMode::boosted_basis ? norm : trace_sum;
  const CMat3 rho = sum / denom;
  const auto d = PolDensityMatrix::diagnose(rho);
  if (!d.ok()) {
    std::ostringstream os;
    os << "density matrix failed its invariants (helicity " << helicity << ", v " << v
       << ", W " << spec.width() << ", grid " << grid.n_radial << "x" << grid.n_azimuthal
       << ", " << to_string(mode) << "): " << d.describe();
    throw IntegrationError(os.str());
  }
  return PolDensityMatrix(rho);
}

} // namespace detail

PolDensityMatrix effective_density_matrix(int helicity, double v, const PacketSpec &spec,
                                          const QuadratureGrid &grid, BasisMode mode) {
  detail::validate_inputs(helicity, v, spec, grid);
  const QuadratureRule radial = detail::weighted_radial_rule(spec, grid);
  const int nr = grid.n_radial, na = grid.n_azimuthal;
  const double dphi = kTwoPi / na;

  std::vector<CMat3> partial(nr, CMat3::Zero());
  std::vector<double> partial_trace(nr, 0.0);

#pragma omp parallel for schedule(static)
  for (int i = 0; i < nr; ++i) {
    const double k_r = radial.nodes[i];
    const double theta = std::atan2(k_r, spec.k0);
    // For a z-boost the Wigner angle vanishes and R(k') R(k)^-1 eps_k = eps_k'.
    const double theta_boosted = aberrate(theta, v);
    CMat3 acc = CMat3::Zero();
    double trace = 0.0;
    for (int j = 0; j < na; ++j) {
      const double phi = j * dphi;
      const UnitDirection boosted{theta_boosted, phi};
      const CVec3 alpha = helicity_vector(boosted, helicity).c;
      const UnitDirection basis_dir = mode == BasisMode::boosted_basis
                                          ? boosted
                                          : UnitDirection{theta, phi};
      const auto b = transverse_basis(basis_dir);
      CVec3 amp;
      for (int m = 0; m < 3; ++m)
        amp[m] = alpha.dot(b[m].cast<Complex>());
      acc += detail::node_term(amp);
      trace += amp.squaredNorm();
    }
    partial[i] = radial.weights[i] * acc / double(na);
    partial_trace[i] = radial.weights[i] * trace / double(na);
  }

  // Fixed-order reduction keeps the result independent of the thread count.
  CMat3 sum = CMat3::Zero();
  double norm = 0.0, trace_sum = 0.0;
  for (int i = 0; i < nr; ++i) {
    sum += partial[i];
    norm += radial.weights[i];
    trace_sum += partial_trace[i];
  }
  return detail::finalize(sum, norm, trace_sum, mode, helicity, v, spec, grid);
}

} // namespace polboost
