#include "dexcloud/shapes.hpp"

#include <cmath>
#include <stdexcept>

namespace dexcloud::geom {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string("shape dimension must be > 0: ") + what);
}
}  // namespace

Shape Shape::sphere(double r) {
  require_positive(r, "sphere radius");
  Shape s;
  s.kind = ShapeKind::kSphere;
  s.radius = r;
  return s;
}

Shape Shape::box(const Eigen::Vector3d& half_extents) {
  for (int i = 0; i < 3; ++i) require_positive(half_extents[i], "box half extent");
  Shape s;
  s.kind = ShapeKind::kBox;
  s.half_extents = half_extents;
  return s;
}

Shape Shape::capsule(double r, double half_length) {
  require_positive(r, "capsule radius");
  require_positive(half_length, "capsule half length");
  Shape s;
  s.kind = ShapeKind::kCapsule;
  s.radius = r;
  s.half_length = half_length;
  return s;
}

Shape Shape::cylinder(double r, double half_length) {
  require_positive(r, "cylinder radius");
  require_positive(half_length, "cylinder half length");
  Shape s;
  s.kind = ShapeKind::kCylinder;
  s.radius = r;
  s.half_length = half_length;
  return s;
}

double Shape::area() const {
  switch (kind) {
    case ShapeKind::kSphere:
      return 4.0 * kPi * radius * radius;
    case ShapeKind::kBox: {
      const Eigen::Vector3d& h = half_extents;
      return 8.0 * (h.x() * h.y() + h.y() * h.z() + h.x() * h.z());
    }
    case ShapeKind::kCapsule:
      return 2.0 * kPi * radius * (2.0 * half_length) + 4.0 * kPi * radius * radius;
    case ShapeKind::kCylinder:
      return 2.0 * kPi * radius * (2.0 * half_length) + 2.0 * kPi * radius * radius;
  }
  return 0.0;
}

double Shape::bounding_radius() const {
  switch (kind) {
    case ShapeKind::kSphere:
      return radius;
    case ShapeKind::kBox:
      return half_extents.norm();
    case ShapeKind::kCapsule:
      return half_length + radius;
    case ShapeKind::kCylinder:
      return std::sqrt(half_length * half_length + radius * radius);
  }
  return 0.0;
}

double signed_distance_local(const Shape& shape, const Eigen::Vector3d& p) {
  switch (shape.kind) {
    case ShapeKind::kSphere:
      return p.norm() - shape.radius;
    case ShapeKind::kBox: {
      const Eigen::Vector3d q = p.cwiseAbs() - shape.half_extents;
      const double outside = q.cwiseMax(0.0).norm();
      const double inside = std::min(q.maxCoeff(), 0.0);
      return outside + inside;
    }
    case ShapeKind::kCapsule: {
      const double z = std::clamp(p.z(), -shape.half_length, shape.half_length);
      return Eigen::Vector3d(p.x(), p.y(), p.z() - z).norm() - shape.radius;
    }
    case ShapeKind::kCylinder: {
      const double dr = std::hypot(p.x(), p.y()) - shape.radius;
      const double dz = std::abs(p.z()) - shape.half_length;
      const double outside = std::hypot(std::max(dr, 0.0), std::max(dz, 0.0));
      const double inside = std::min(std::max(dr, dz), 0.0);
      return outside + inside;
    }
  }
  return 0.0;
}

double signed_distance(const Shape& shape, const Pose& pose, const Eigen::Vector3d& point) {
  return signed_distance_local(shape, pose.inverse().apply(point));
}

Eigen::Vector3d sdf_normal(const Shape& shape, const Pose& pose, const Eigen::Vector3d& point) {
  const Pose inv = pose.inverse();
  const Eigen::Vector3d p = inv.apply(point);
  const double h = 1e-6;
  Eigen::Vector3d g;
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d lo = p, hi = p;
    lo[i] -= h;
    hi[i] += h;
    g[i] = signed_distance_local(shape, hi) - signed_distance_local(shape, lo);
  }
  const double n = g.norm();
  if (n < 1e-14) return pose.rotation * Eigen::Vector3d::UnitZ();
  return (pose.rotation * (g / n)).normalized();
}

namespace {

Eigen::Vector3d sample_unit_sphere(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double a = rng.uniform(0.0, 2.0 * kPi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(a), r * std::sin(a), z};
}

Eigen::Vector3d sample_sphere_local(const Shape& s, Rng& rng) {
  return s.radius * sample_unit_sphere(rng);
}

Eigen::Vector3d sample_box_local(const Shape& s, Rng& rng) {
  const Eigen::Vector3d& h = s.half_extents;
  // Face areas: +-x, +-y, +-z.
  const double ax = h.y() * h.z(), ay = h.x() * h.z(), az = h.x() * h.y();
  const double total = 2.0 * (ax + ay + az);
  double pick = rng.uniform(0.0, total);
  int axis;
  if (pick < 2.0 * ax) {
    axis = 0;
  } else if (pick < 2.0 * (ax + ay)) {
    axis = 1;
    pick -= 2.0 * ax;
  } else {
    axis = 2;
    pick -= 2.0 * (ax + ay);
  }
  const double face_area = (axis == 0) ? ax : (axis == 1) ? ay : az;
  const double sign = (pick < face_area) ? 1.0 : -1.0;
  Eigen::Vector3d p;
  p[axis] = sign * h[axis];
  const int u = (axis + 1) % 3, v = (axis + 2) % 3;
  p[u] = rng.uniform(-h[u], h[u]);
  p[v] = rng.uniform(-h[v], h[v]);
  return p;
}

Eigen::Vector3d sample_capsule_local(const Shape& s, Rng& rng) {
  const double side = 2.0 * kPi * s.radius * (2.0 * s.half_length);
  const double caps = 4.0 * kPi * s.radius * s.radius;
  if (rng.uniform(0.0, side + caps) < side) {
    const double a = rng.uniform(0.0, 2.0 * kPi);
    const double z = rng.uniform(-s.half_length, s.half_length);
    return {s.radius * std::cos(a), s.radius * std::sin(a), z};
  }
  Eigen::Vector3d d = sample_unit_sphere(rng);
  const double zc = (d.z() >= 0.0) ? s.half_length : -s.half_length;
  return {s.radius * d.x(), s.radius * d.y(), s.radius * d.z() + zc};
}

Eigen::Vector3d sample_cylinder_local(const Shape& s, Rng& rng) {
  const double side = 2.0 * kPi * s.radius * (2.0 * s.half_length);
  const double disks = 2.0 * kPi * s.radius * s.radius;
  if (rng.uniform(0.0, side + disks) < side) {
    const double a = rng.uniform(0.0, 2.0 * kPi);
    const double z = rng.uniform(-s.half_length, s.half_length);
    return {s.radius * std::cos(a), s.radius * std::sin(a), z};
  }
  const double z = (rng.uniform() < 0.5) ? s.half_length : -s.half_length;
  const double r = s.radius * std::sqrt(rng.uniform());
  const double a = rng.uniform(0.0, 2.0 * kPi);
  return {r * std::cos(a), r * std::sin(a), z};
}

}  // namespace

std::vector<Eigen::Vector3d> sample_surface(const Shape& shape, const Pose& pose, int n, Rng& rng) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(std::max(n, 0));
  for (int i = 0; i < n; ++i) {
    Eigen::Vector3d local;
    switch (shape.kind) {
      case ShapeKind::kSphere:
        local = sample_sphere_local(shape, rng);
        break;
      case ShapeKind::kBox:
        local = sample_box_local(shape, rng);
        break;
      case ShapeKind::kCapsule:
        local = sample_capsule_local(shape, rng);
        break;
      case ShapeKind::kCylinder:
        local = sample_cylinder_local(shape, rng);
        break;
    }
    out.push_back(pose.apply(local));
  }
  return out;
}

}  // namespace dexcloud::geom
