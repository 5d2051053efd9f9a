#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace dexcloud {

/// Rigid transform: unit quaternion rotation plus translation (meters).
struct Pose {
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static Pose identity() { return Pose{}; }

  static Pose from_translation(const Eigen::Vector3d& t) {
    return Pose{Eigen::Quaterniond::Identity(), t};
  }

  /// Fixed-axis roll/pitch/yaw: R = Rz(yaw) * Ry(pitch) * Rx(roll).
  static Pose from_rpy(const Eigen::Vector3d& rpy, const Eigen::Vector3d& t) {
    Eigen::Quaterniond q = Eigen::AngleAxisd(rpy.z(), Eigen::Vector3d::UnitZ()) *
                           Eigen::AngleAxisd(rpy.y(), Eigen::Vector3d::UnitY()) *
                           Eigen::AngleAxisd(rpy.x(), Eigen::Vector3d::UnitX());
    return Pose{q.normalized(), t};
  }

  /// Rotation about `axis` (unit) by `angle` radians, zero translation.
  static Pose from_axis_angle(const Eigen::Vector3d& axis, double angle) {
    return Pose{Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis)).normalized(),
                Eigen::Vector3d::Zero()};
  }

  Pose operator*(const Pose& other) const {
    Pose out;
    out.rotation = (rotation * other.rotation).normalized();
    out.translation = translation + rotation * other.translation;
    return out;
  }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }

  Pose inverse() const {
    Pose out;
    out.rotation = rotation.conjugate();
    out.translation = -(out.rotation * translation);
    return out;
  }

  Eigen::Matrix3d matrix() const { return rotation.toRotationMatrix(); }

  /// Axis-angle vector of this pose's rotation (angle * unit axis).
  Eigen::Vector3d rotation_vector() const {
    Eigen::AngleAxisd aa(rotation);
    return aa.angle() * aa.axis();
  }
};

}  // namespace dexcloud
