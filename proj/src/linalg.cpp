#include "polboost/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace polboost {

Eigensystem3 hermitian_eigensystem(const CMat3 &m) {
  // Iterative QL; the closed-form 3x3 path loses accuracy on near-degenerate spectra.
  const Eigen::SelfAdjointEigenSolver<CMat3> solver(m, Eigen::ComputeEigenvectors);
  Eigensystem3 out;
  for (int i = 0; i < 3; ++i) {
    out.values[i] = solver.eigenvalues()[i];
    out.vectors[i] = solver.eigenvectors().col(i);
  }
  return out;
}

double hermiticity_defect(const CMat3 &m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

CMat3 outer(const CVec3 &v) { return v * v.adjoint(); }

} // namespace polboost
