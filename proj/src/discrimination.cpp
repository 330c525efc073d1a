#include "polboost/discrimination.hpp"

#include "polboost/errors.hpp"

#include <algorithm>
#include <cmath>

namespace polboost {

namespace {

// omega below this counts as negative; zero modes go to pi_minus.
constexpr double kNegativeEigenvalue = -1e-12;

PolarizationVector normalized(const PolarizationVector &a) {
  const double n = a.c.norm();
  if (!(n > 0.0))
    throw DomainError("zero polarization vector");
  return {a.c / n};
}

} // namespace

ReciprocalBasis reciprocal_basis(const PolarizationVector &a1, const PolarizationVector &a2) {
  const PolarizationVector u1 = normalized(a1), u2 = normalized(a2);
  const Complex s = overlap(u1, u2);
  if (std::abs(s) >= 1.0 - 1e-12)
    throw DegeneratePairError("parallel states cannot be discriminated unambiguously");

  // Gram-Schmidt within the span: strip the other state's component.
  const CVec3 p1 = u1.c - std::conj(s) * u2.c;
  const CVec3 p2 = u2.c - s * u1.c;
  ReciprocalBasis out;
  out.perp1 = {p1 / p1.norm()};
  out.perp2 = {p2 / p2.norm()};
  out.t1 = overlap(out.perp1, u1);
  out.t2 = overlap(out.perp2, u2);
  return out;
}

double UnambiguousPovm::success_probability(const PolarizationVector &a1,
                                            const PolarizationVector &a2) const {
  const double p1 = std::real(a1.c.dot(pi1 * a1.c));
  const double p2 = std::real(a2.c.dot(pi2 * a2.c));
  return 0.5 * p1 + 0.5 * p2;
}

UnambiguousPovm unambiguous_povm(const PolarizationVector &a1, const PolarizationVector &a2) {
  const ReciprocalBasis rb = reciprocal_basis(a1, a2);
  const double s = std::abs(overlap(normalized(a1), normalized(a2)));
  UnambiguousPovm povm;
  povm.coefficient = 1.0 / (1.0 + s);
  povm.pi1 = povm.coefficient * outer(rb.perp1.c);
  povm.pi2 = povm.coefficient * outer(rb.perp2.c);
  povm.pi0 = CMat3::Identity() - povm.pi1 - povm.pi2;
  povm.t1 = rb.t1;
  povm.t2 = rb.t2;
  return povm;
}

double p_opt_unambiguous(const PolarizationVector &a1, const PolarizationVector &a2) {
  const double s = std::abs(overlap(a1, a2));
  return std::clamp(1.0 - s, 0.0, 1.0);
}

double p_opt_closed_form(double theta, double v) {
  lorentz_factor(v);
  const double c = std::cos(theta);
  return (1.0 + c) * (1.0 - v) / (2.0 * (1.0 - v * c));
}

double p_opt_pipeline(double theta, double v) {
  const FactorList boost{{TransformKind::boost_z, v}};
  const auto seen = transform_preparation(boost, opposite_helicity_pair(theta));
  return p_opt_unambiguous(seen.pol1, seen.pol2);
}

double MinErrorResult::p_error_from_projectors(const PolDensityMatrix &rho_plus,
                                               const PolDensityMatrix &rho_minus) const {
  return 0.5 * std::real((rho_plus.matrix() * projector_minus).trace()) +
         0.5 * std::real((rho_minus.matrix() * projector_plus).trace());
}

MinErrorResult helstrom(const PolDensityMatrix &rho_plus, const PolDensityMatrix &rho_minus) {
  const CMat3 omega = rho_minus.matrix() - rho_plus.matrix();
  const Eigensystem3 es = hermitian_eigensystem(0.5 * (omega + omega.adjoint()));

  MinErrorResult out;
  out.projector_plus = CMat3::Zero();
  double trace_norm = 0.0;
  for (int k = 0; k < 3; ++k) {
    out.omega[k] = es.values[k];
    trace_norm += std::abs(es.values[k]);
    if (es.values[k] < kNegativeEigenvalue)
      out.projector_plus += outer(es.vectors[k]);
  }
  out.projector_minus = CMat3::Identity() - out.projector_plus;
  out.p_error = std::clamp(0.5 - 0.25 * trace_norm, 0.0, 0.5);
  return out;
}

} // namespace polboost
