#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dexcloud/pose.hpp"
#include "dexcloud/rng.hpp"

namespace dexcloud::geom {

enum class ShapeKind { kSphere, kBox, kCapsule, kCylinder };

/// Convex primitive, defined in its own local frame.
///
/// Conventions: sphere and box are centered at the origin; capsule and
/// cylinder run along local +z and are centered at the origin (half_length is
/// half the straight-segment length, so a capsule spans z in
/// [-half_length - radius, half_length + radius]).
struct Shape {
  ShapeKind kind = ShapeKind::kSphere;
  double radius = 0.0;                              // sphere, capsule, cylinder
  double half_length = 0.0;                         // capsule, cylinder
  Eigen::Vector3d half_extents = Eigen::Vector3d::Zero();  // box

  static Shape sphere(double r);
  static Shape box(const Eigen::Vector3d& half_extents);
  static Shape capsule(double r, double half_length);
  static Shape cylinder(double r, double half_length);

  /// Surface area, used for area-uniform sampling.
  double area() const;
  /// Radius of the bounding sphere centered at the local origin.
  double bounding_radius() const;
};

/// Exact signed distance from `point` (in the shape's local frame).
double signed_distance_local(const Shape& shape, const Eigen::Vector3d& point);

/// Exact signed distance from `point` (world) to the shape placed at `pose`.
/// Negative inside, positive outside, zero on the surface.
double signed_distance(const Shape& shape, const Pose& pose, const Eigen::Vector3d& point);

/// Outward unit surface normal direction at `point` (world), from the
/// signed-distance gradient (central differences, h = 1e-6).
Eigen::Vector3d sdf_normal(const Shape& shape, const Pose& pose, const Eigen::Vector3d& point);

/// Draws n points area-uniformly on the shape surface, placed at `pose`.
/// Sampling happens in the local frame and is then rigidly transformed, so
/// the pattern is pose-invariant for a fixed RNG stream.
std::vector<Eigen::Vector3d> sample_surface(const Shape& shape, const Pose& pose, int n, Rng& rng);

}  // namespace dexcloud::geom
