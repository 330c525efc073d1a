#include "polboost/information.hpp"

#include "polboost/errors.hpp"
#include "polboost/linalg.hpp"

#include <cmath>

namespace polboost {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

} // namespace

void Ensemble::validate() const {
  if (members.empty())
    throw DomainError("empty ensemble");
  double total = 0.0;
  for (const auto &[p, rho] : members) {
    if (p < 0.0)
      throw DomainError("negative ensemble probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw DomainError("ensemble probabilities do not sum to 1");
}

PolDensityMatrix Ensemble::average() const {
  validate();
  CMat3 sum = CMat3::Zero();
  for (const auto &[p, rho] : members)
    sum += p * rho.matrix();
  return PolDensityMatrix(sum);
}

double von_neumann_entropy(const PolDensityMatrix &rho) {
  const auto es = hermitian_eigensystem(rho.matrix());
  double s = 0.0;
  for (double lambda : es.values) {
    if (lambda < PolDensityMatrix::kEigenTol)
      throw DomainError("density matrix has a negative eigenvalue");
    s -= xlog2x(std::max(lambda, 0.0));
  }
  return std::max(s, 0.0);
}

double holevo_bound(const Ensemble &ensemble) {
  double chi = von_neumann_entropy(ensemble.average());
  for (const auto &[p, rho] : ensemble.members)
    chi -= p * von_neumann_entropy(rho);
  if (chi < -1e-10)
    throw DomainError("Holevo quantity came out negative");
  return std::max(chi, 0.0);
}

double holevo_pure_closed_form(double cos_theta_prime) {
  if (!(cos_theta_prime >= -1.0 && cos_theta_prime <= 1.0))
    throw DomainError("cos(theta') outside [-1, 1]");
  const double a = (1.0 + cos_theta_prime) / 4.0;
  const double b = (3.0 - cos_theta_prime) / 4.0;
  return -xlog2x(a) - xlog2x(b);
}

} // namespace polboost
