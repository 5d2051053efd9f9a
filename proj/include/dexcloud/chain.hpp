#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "dexcloud/pose.hpp"
#include "dexcloud/shapes.hpp"

namespace dexcloud::kin {

enum class JointType { kRevolute, kPrismatic, kFixed };

struct Joint {
  JointType type = JointType::kFixed;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();  // in the link's local frame
  double lo = 0.0;
  double hi = 0.0;
};

/// One rigid body of the chain. The link frame is placed by `origin` relative
/// to the parent frame and then moved by the link's own joint. The collision
/// primitive lives in the link frame; capsules extend from the frame origin
/// along local +z (their center sits at (0, 0, half_length)), spheres and
/// boxes are centered at the origin.
struct Link {
  std::string name;
  int parent = -1;  // -1 for the root
  Pose origin;
  Joint joint;
  int q_index = -1;  // index into JointConfig for actuated joints, else -1
  geom::Shape shape;
};

struct IkConfig {
  double damping = 0.05;
  double max_step_norm = 0.1;  // radians, L2 over the 6 arm joints
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("chain parse error at line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class TopologyError : public std::runtime_error {
 public:
  explicit TopologyError(const std::string& what)
      : std::runtime_error("chain topology error: " + what) {}
};

/// Tree of links and joints. Links are topologically sorted (parent index <
/// child index); joint order in the description file defines the JointConfig
/// layout. The bundled hand-arm has 6 arm joints followed by 16 finger
/// joints (thumb, index, middle, ring; 4 each).
class KinematicChain {
 public:
  static constexpr int kArmDof = 6;
  static constexpr int kHandDof = 16;

  /// Parses the line-oriented chain description format. Throws ParseError /
  /// TopologyError on malformed input.
  static KinematicChain parse(const std::string& text);

  /// Description text of the bundled simplified 22-DoF hand-arm.
  static const std::string& builtin_hand_arm_text();
  static const KinematicChain& builtin_hand_arm();

  int link_count() const { return static_cast<int>(links_.size()); }
  int dof() const { return dof_; }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(int i) const { return links_[i]; }
  int link_index(const std::string& name) const;  // -1 if absent

  /// Fingertip link indices, thumb first; empty unless the chain names
  /// thumb/index/middle/ring "_tip" links.
  const std::vector<int>& fingertip_links() const { return fingertip_links_; }
  int palm_link() const { return palm_link_; }

  /// True for the 22-DoF layout the environments require (6 arm + 16 hand
  /// joints, 4 fingertips, a palm).
  bool is_hand_arm() const;

  Eigen::VectorXd limits_lo() const { return lo_; }
  Eigen::VectorXd limits_hi() const { return hi_; }

  /// Joint positions clamped to limits.
  Eigen::VectorXd clamp_to_limits(const Eigen::VectorXd& q) const;

  /// Pose of every link in the base frame. q must have dof() entries and be
  /// finite.
  std::vector<Pose> forward_kinematics(const Eigen::VectorXd& q) const;

  /// 6 x dof() Jacobian of the given link: rows 0-2 linear velocity, rows
  /// 3-5 angular velocity, base frame. Columns of joints not on the
  /// root-to-link path are zero.
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& q, int link_index) const;

  /// World pose of a link's collision shape given the link pose (applies the
  /// +z anchoring offset for capsules/cylinders).
  Pose shape_world_pose(int link_index, const Pose& link_pose) const;

 private:
  std::vector<Link> links_;
  std::vector<int> fingertip_links_;
  int palm_link_ = -1;
  int dof_ = 0;
  Eigen::VectorXd lo_, hi_;

  void check_q(const Eigen::VectorXd& q) const;
};

/// One damped least-squares IK step for the 6 arm joints: solves
/// (J^T J + lambda^2 I) dq = J^T e on the 6x6 arm block of the end-effector
/// (palm) Jacobian, where e = target_delta (translation in meters, rotation
/// as an axis-angle vector in radians). The result is clamped to
/// cfg.max_step_norm.
Eigen::Matrix<double, 6, 1> damped_ls_ik_step(const KinematicChain& chain,
                                              const Eigen::VectorXd& q,
                                              const Eigen::Matrix<double, 6, 1>& target_delta,
                                              const IkConfig& cfg);

}  // namespace dexcloud::kin
