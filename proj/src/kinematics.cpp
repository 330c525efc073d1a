#include "polboost/kinematics.hpp"

#include "polboost/errors.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace polboost {

namespace {

const Mat4 &minkowski_metric() {
  static const Mat4 eta = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return eta;
}

// Below this sin(theta) a direction is treated as lying on the z axis.
constexpr double kPoleTolerance = 1e-12;

bool along_positive_z(const Vec3 &khat) {
  return std::hypot(khat.x(), khat.y()) <= kPoleTolerance && khat.z() > 0.0;
}

void require_null(const FourVector &k) {
  if (!(k.t > 0.0))
    throw DomainError("momentum must have positive energy");
  const double scale = k.t * k.t;
  if (std::abs(k.minkowski_norm2()) > 1e-10 * scale)
    throw DomainError("momentum is not a null vector");
}

} // namespace

bool FourVector::is_null(double tol) const {
  return t > 0.0 && std::abs(minkowski_norm2()) <= tol * t * t;
}

Vec3 UnitDirection::unit_vector() const {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

UnitDirection UnitDirection::from_vector(const Vec3 &v) {
  const double rho = std::hypot(v.x(), v.y());
  double phi = std::atan2(v.y(), v.x());
  if (phi < 0.0)
    phi += kTwoPi;
  if (phi >= kTwoPi)
    phi = 0.0;
  return {std::atan2(rho, v.z()), phi};
}

FourVector photon_momentum(const UnitDirection &dir, double energy) {
  const Vec3 n = energy * dir.unit_vector();
  return {energy, n.x(), n.y(), n.z()};
}

std::string to_string(TransformKind kind) {
  switch (kind) {
  case TransformKind::boost_z:
    return "boost_z";
  case TransformKind::rot_y:
    return "rot_y";
  case TransformKind::rot_z:
    return "rot_z";
  case TransformKind::product:
    return "product";
  }
  return "unknown";
}

FourVector LorentzTransform::apply(const FourVector &k) const {
  return FourVector::from_vector(m_ * k.as_vector());
}

LorentzTransform LorentzTransform::inverse() const {
  // Lambda^-1 = eta Lambda^T eta
  const Mat4 &eta = minkowski_metric();
  return {eta * m_.transpose() * eta, kind_};
}

double LorentzTransform::metric_defect() const {
  const Mat4 &eta = minkowski_metric();
  return (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff();
}

double lorentz_factor(double v) {
  if (!(std::abs(v) < 1.0))
    throw DomainError("superluminal velocity");
  return 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
}

LorentzTransform boost_z(double v) {
  const double g = lorentz_factor(v);
  Mat4 m = Mat4::Identity();
  m(0, 0) = g;
  m(3, 3) = g;
  m(0, 3) = -g * v;
  m(3, 0) = -g * v;
  return {m, TransformKind::boost_z};
}

LorentzTransform rotation_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat4 m = Mat4::Identity();
  m(1, 1) = c;
  m(1, 3) = s;
  m(3, 1) = -s;
  m(3, 3) = c;
  return {m, TransformKind::rot_y};
}

LorentzTransform rotation_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat4 m = Mat4::Identity();
  m(1, 1) = c;
  m(1, 2) = -s;
  m(2, 1) = s;
  m(2, 2) = c;
  return {m, TransformKind::rot_z};
}

LorentzTransform standard_rotation(const UnitDirection &dir) {
  return rotation_z(dir.phi) * rotation_y(dir.theta);
}

LorentzTransform standard_boost(double energy) {
  if (!(energy > 0.0))
    throw DomainError("standard boost needs positive energy");
  // gamma (1 - v) = energy
  const double e2 = energy * energy;
  return boost_z((1.0 - e2) / (1.0 + e2));
}

LorentzTransform standard_transform(const FourVector &k) {
  require_null(k);
  return standard_rotation(UnitDirection::from_vector(k.spatial())) * standard_boost(k.t);
}

LorentzTransform to_transform(const LorentzFactor &f) {
  switch (f.kind) {
  case TransformKind::boost_z:
    return boost_z(f.parameter);
  case TransformKind::rot_y:
    return rotation_y(f.parameter);
  case TransformKind::rot_z:
    return rotation_z(f.parameter);
  case TransformKind::product:
    break;
  }
  throw DomainError("factor list entries must be elementary transforms");
}

LorentzTransform compose(std::span<const LorentzFactor> factors) {
  LorentzTransform out;
  for (const auto &f : factors)
    out = out * to_transform(f);
  return out;
}

double aberrate(double theta, double v) {
  if (!(std::abs(v) < 1.0))
    throw DomainError("superluminal velocity");
  if (theta < 0.0 || theta > kPi)
    throw DomainError("polar angle outside [0, pi]");
  const double c = std::cos(theta);
  const double cp = (c - v) / (1.0 - v * c);
  // The sine form stays accurate where the cosine saturates at +-1.
  const double sp = std::sin(theta) / (lorentz_factor(v) * (1.0 - v * c));
  return std::atan2(sp, cp);
}

double add_velocities(double v1, double v2) {
  if (!(std::abs(v1) < 1.0) || !(std::abs(v2) < 1.0))
    throw DomainError("superluminal velocity");
  return (v1 + v2) / (1.0 + v1 * v2);
}

double wrap_angle(double a) {
  double r = std::remainder(a, kTwoPi); // [-pi, pi]
  if (r <= -kPi)
    r += kTwoPi;
  return r;
}

double wigner_angle(const LorentzFactor &f, const FourVector &k) {
  require_null(k);
  switch (f.kind) {
  case TransformKind::boost_z:
    lorentz_factor(f.parameter);
    return 0.0;
  case TransformKind::rot_z:
    return along_positive_z(k.spatial().normalized()) ? wrap_angle(f.parameter) : 0.0;
  case TransformKind::rot_y: {
    const UnitDirection d = UnitDirection::from_vector(k.spatial());
    const double sg = std::sin(f.parameter), cg = std::cos(f.parameter);
    const double a = sg * std::sin(d.phi);
    const double b = sg * std::cos(d.theta) * std::cos(d.phi) + cg * std::sin(d.theta);
    if (a == 0.0 && b == 0.0)
      return 0.0;
    return std::atan2(a, b);
  }
  case TransformKind::product:
    break;
  }
  throw DomainError("factor list entries must be elementary transforms");
}

double wigner_angle(std::span<const LorentzFactor> factors, const FourVector &k) {
  require_null(k);
  // Only the direction matters; work at unit energy.
  FourVector current{1.0, k.x / k.t, k.y / k.t, k.z / k.t};
  double total = 0.0;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    total += wigner_angle(*it, current);
    current = to_transform(*it).apply(current);
    current = {1.0, current.x / current.t, current.y / current.t, current.z / current.t};
  }
  return wrap_angle(total);
}

double wigner_angle_from_matrix(const LorentzTransform &lambda, const FourVector &k) {
  require_null(k);
  const FourVector unit{1.0, k.x / k.t, k.y / k.t, k.z / k.t};
  const FourVector image = lambda.apply(unit);
  const Mat4 w = standard_transform(image).inverse().matrix() * lambda.matrix() *
                 standard_transform(unit).matrix();
  // Little-group elements of (1,0,0,1) carry their rotation in the x-y block.
  return wrap_angle(std::atan2(w(2, 1), w(1, 1)));
}

FactorList parse_factor_list(const std::string &text) {
  FactorList out;
  std::string normalized = text;
  for (char &c : normalized)
    if (c == ';')
      c = ',';
  std::stringstream ss(normalized);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first_char = item.find_first_not_of(" \t");
    if (first_char == std::string::npos)
      continue;
    item = item.substr(first_char, item.find_last_not_of(" \t") - first_char + 1);
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw DomainError("factor '" + item + "' is not of the form kind:value");
    const std::string name = item.substr(0, colon);
    const std::string value = item.substr(colon + 1);
    LorentzFactor f;
    if (name == "boost_z")
      f.kind = TransformKind::boost_z;
    else if (name == "rot_y")
      f.kind = TransformKind::rot_y;
    else if (name == "rot_z")
      f.kind = TransformKind::rot_z;
    else
      throw DomainError("unknown factor kind '" + name + "'");
    const auto *first = value.data();
    const auto *last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, f.parameter);
    if (ec != std::errc{} || ptr != last)
      throw DomainError("bad factor parameter '" + value + "'");
    if (f.kind == TransformKind::boost_z)
      lorentz_factor(f.parameter);
    out.push_back(f);
  }
  return out;
}

std::string format_factor_list(std::span<const LorentzFactor> factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i)
      out += ';';
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, factors[i].parameter);
    out += to_string(factors[i].kind) + ":" + std::string(buf, ptr);
  }
  return out;
}

} // namespace polboost
