#ifndef LSCALIB_GEOMETRY_HPP
#define LSCALIB_GEOMETRY_HPP

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "lscalib/errors.hpp"

namespace lscalib {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Mat3 = Eigen::Matrix3d;

/// Wraps an angle into the canonical range (-pi, pi].
inline double normalize_angle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  if (a > std::numbers::pi) a -= two_pi;
  return a;
}

/// Six extrinsic parameters: translation in meters, fixed-axis roll/pitch/yaw
/// in radians. The rotation composes as Rz(yaw) * Ry(pitch) * Rx(roll).
struct Pose6 {
  double tx = 0.0, ty = 0.0, tz = 0.0;
  double roll = 0.0;   // about x
  double pitch = 0.0;  // about y
  double yaw = 0.0;    // about z

  Pose6 normalized() const {
    return {tx, ty, tz, normalize_angle(roll), normalize_angle(pitch), normalize_angle(yaw)};
  }
};

/// Rigid transform p' = R p + t with orthonormal right-handed R.
struct RigidTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static RigidTransform identity() { return {}; }

  bool is_valid(double tol = 1e-9) const {
    const Mat3 err = rotation.transpose() * rotation - Mat3::Identity();
    return err.cwiseAbs().maxCoeff() <= tol && std::abs(rotation.determinant() - 1.0) <= tol;
  }
};

/// Unordered 3D point cloud with optional per-point ring and intensity
/// attributes (empty vector = attribute absent, -1 = not applicable).
struct PointCloud {
  std::vector<Vec3> points;
  std::vector<int> ring;
  std::vector<int> intensity;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

/// Axis-aligned crop box, min < max per axis.
struct PassthroughBounds {
  Vec3 min{-1e9, -1e9, -1e9};
  Vec3 max{1e9, 1e9, 1e9};

  bool contains(const Vec3& p) const {
    return p.x() >= min.x() && p.x() <= max.x() && p.y() >= min.y() && p.y() <= max.y() &&
           p.z() >= min.z() && p.z() <= max.z();
  }
};

inline Mat3 rotation_x(double a) {
  Mat3 r;
  r << 1, 0, 0, 0, std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a);
  return r;
}

inline Mat3 rotation_y(double a) {
  Mat3 r;
  r << std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a);
  return r;
}

inline Mat3 rotation_z(double a) {
  Mat3 r;
  r << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
  return r;
}

inline RigidTransform pose_to_transform(const Pose6& p) {
  RigidTransform t;
  t.rotation = rotation_z(p.yaw) * rotation_y(p.pitch) * rotation_x(p.roll);
  t.translation = Vec3(p.tx, p.ty, p.tz);
  return t;
}

/// Recovers the Pose6 whose recomposition matches T. Picks the pitch branch in
/// [-pi/2, pi/2]. At the gimbal-lock singularity |pitch| = pi/2 the roll is set
/// to zero and yaw absorbs the remaining rotation.
inline Pose6 transform_to_pose(const RigidTransform& t) {
  const Mat3& r = t.rotation;
  Pose6 p;
  p.tx = t.translation.x();
  p.ty = t.translation.y();
  p.tz = t.translation.z();

  const double s_pitch = -r(2, 0);
  if (std::abs(s_pitch) >= 1.0 - 1e-12) {
    p.pitch = std::copysign(std::numbers::pi / 2.0, s_pitch);
    p.roll = 0.0;
    // With pitch = +-pi/2, R depends only on (yaw -+ roll).
    p.yaw = std::atan2(-r(0, 1), r(1, 1));
  } else {
    p.pitch = std::asin(s_pitch);
    p.roll = std::atan2(r(2, 1), r(2, 2));
    p.yaw = std::atan2(r(1, 0), r(0, 0));
  }
  return p.normalized();
}

inline Vec3 apply(const RigidTransform& t, const Vec3& p) {
  return t.rotation * p + t.translation;
}

/// apply(compose(a, b), p) == apply(a, apply(b, p)).
inline RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
  RigidTransform out;
  out.rotation = a.rotation * b.rotation;
  out.translation = a.rotation * b.translation + a.translation;
  return out;
}

inline RigidTransform invert(const RigidTransform& t) {
  RigidTransform out;
  out.rotation = t.rotation.transpose();
  out.translation = -(out.rotation * t.translation);
  return out;
}

/// Geodesic rotation angle of an orthonormal matrix, in [0, pi].
inline double rotation_angle(const Mat3& r) {
  const double c = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

inline PointCloud transform_cloud(const RigidTransform& t, const PointCloud& in) {
  PointCloud out = in;
  for (auto& p : out.points) p = apply(t, p);
  return out;
}

}  // namespace lscalib

#endif  // LSCALIB_GEOMETRY_HPP
