#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

namespace polboost {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Contravariant momentum (t, x, y, z), natural units, metric (+,-,-,-).
struct FourVector {
  double t{0.0}, x{0.0}, y{0.0}, z{0.0};

  Vec3 spatial() const { return {x, y, z}; }
  double minkowski_norm2() const { return t * t - x * x - y * y - z * z; }
  bool is_null(double tol = 1e-12) const;

  Eigen::Vector4d as_vector() const { return {t, x, y, z}; }
  static FourVector from_vector(const Eigen::Vector4d &v) { return {v[0], v[1], v[2], v[3]}; }
};

/// Direction on the unit sphere in polar coordinates.
struct UnitDirection {
  double theta{0.0}; ///< polar angle in [0, pi]
  double phi{0.0};   ///< azimuth in [0, 2pi)

  Vec3 unit_vector() const;

  /// Direction of a nonzero spatial vector. The azimuth is atan2(y, x)
  /// wrapped into [0, 2pi), so the poles get phi = 0.
  static UnitDirection from_vector(const Vec3 &v);
};

/// Photon momentum with energy `energy` travelling along `dir`.
FourVector photon_momentum(const UnitDirection &dir, double energy = 1.0);

enum class TransformKind { boost_z, rot_y, rot_z, product };

std::string to_string(TransformKind kind);

/// Elementary generator of the Lorentz transforms handled here.
struct LorentzFactor {
  TransformKind kind{TransformKind::rot_z}; ///< boost_z, rot_y or rot_z
  double parameter{0.0};                    ///< speed for boost_z, angle otherwise
};

/// Ordered product F0 * F1 * ... * Fn-1; the last factor acts first.
using FactorList = std::vector<LorentzFactor>;

class LorentzTransform {
public:
  LorentzTransform() : m_(Mat4::Identity()), kind_(TransformKind::product) {}
  LorentzTransform(const Mat4 &m, TransformKind kind) : m_(m), kind_(kind) {}

  const Mat4 &matrix() const { return m_; }
  TransformKind kind() const { return kind_; }

  FourVector apply(const FourVector &k) const;
  /// Spatial 3x3 block; equals the full action for pure rotations.
  Mat3 spatial_block() const { return m_.block<3, 3>(1, 1); }

  LorentzTransform inverse() const;

  /// Largest entry of |M^T eta M - eta|.
  double metric_defect() const;

  friend LorentzTransform operator*(const LorentzTransform &a, const LorentzTransform &b) {
    return {a.m_ * b.m_, TransformKind::product};
  }

private:
  Mat4 m_;
  TransformKind kind_;
};

/// Lorentz factor (1 - v^2)^(-1/2). Throws DomainError for |v| >= 1.
double lorentz_factor(double v);

/// Transform into the frame of an observer moving with speed v along +z.
/// A photon travelling along +z is red-shifted by gamma (1 - v).
LorentzTransform boost_z(double v);
LorentzTransform rotation_y(double angle);
LorentzTransform rotation_z(double angle);

/// R(k) = R_z(phi) R_y(theta); maps z onto dir.
LorentzTransform standard_rotation(const UnitDirection &dir);

/// Pure z-boost taking (1,0,0,1) to (e,0,0,e).
LorentzTransform standard_boost(double energy);

/// L_k = R(k) L_z(k0); maps the standard momentum (1,0,0,1) onto k.
LorentzTransform standard_transform(const FourVector &k);

LorentzTransform to_transform(const LorentzFactor &f);
LorentzTransform compose(std::span<const LorentzFactor> factors);

/// Aberrated polar angle seen after a z-boost of speed v.
double aberrate(double theta, double v);

/// Relativistic sum of collinear speeds.
double add_velocities(double v1, double v2);

/// Reduce an angle into (-pi, pi].
double wrap_angle(double a);

/// Wigner rotation angle of a single elementary factor at momentum k.
double wigner_angle(const LorentzFactor &f, const FourVector &k);

/// Wigner rotation angle for the product transform. Factors are applied
/// right to left, each contributing its elementary angle at the momentum it
/// acts on. Result in (-pi, pi]; an empty list gives 0.
double wigner_angle(std::span<const LorentzFactor> factors, const FourVector &k);

/// Wigner angle from the little-group matrix L^-1_{Lk} L L_k directly.
/// Independent of the per-factor table; used for cross-checks.
double wigner_angle_from_matrix(const LorentzTransform &lambda, const FourVector &k);

/// Parse "boost_z:0.5,rot_y:0.3" (comma or semicolon separated) into a
/// factor list, leftmost factor first.
FactorList parse_factor_list(const std::string &text);
std::string format_factor_list(std::span<const LorentzFactor> factors);

} // namespace polboost
