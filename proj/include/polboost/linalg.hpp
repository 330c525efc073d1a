#pragma once

#include "polboost/polarization.hpp"

#include <array>

namespace polboost {

struct Eigensystem3 {
  std::array<double, 3> values; ///< ascending
  std::array<CVec3, 3> vectors; ///< orthonormal, vectors[i] belongs to values[i]
};

/// Eigendecomposition of a 3x3 Hermitian matrix. Only the lower triangle is
/// read; callers check Hermiticity first.
Eigensystem3 hermitian_eigensystem(const CMat3 &m);

/// max |m - m^dagger|
double hermiticity_defect(const CMat3 &m);

/// Projector |v><v|
CMat3 outer(const CVec3 &v);

} // namespace polboost
