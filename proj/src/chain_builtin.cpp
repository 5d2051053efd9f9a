#include "dexcloud/chain.hpp"

namespace dexcloud::kin {

namespace {
// Simplified 22-DoF hand-arm: a 6-DoF arm (yaw/pitch/elbow + 3-axis wrist)
// carrying a 4-finger hand, 4 revolute joints per finger (abduction + 3
// flexion). The same text ships as assets/hand_arm.chain.
const char* kHandArmText = R"(# Simplified 22-DoF hand-arm chain.
# 6 arm joints, then 16 finger joints (thumb, index, middle, ring; 4 each).
# Capsules extend from the link frame origin along local +z.

link arm_base       parent=none           xyz=0 0 0        rpy=0 0 0                joint=fixed    axis=0 0 1  limits=0 0        shape=sphere  dims=0.05
link shoulder_yaw   parent=arm_base       xyz=0 0 0.35     rpy=0 0 0                joint=revolute axis=0 0 1  limits=-2.96 2.96 shape=sphere  dims=0.04
link shoulder_pitch parent=shoulder_yaw   xyz=0 0 0.05     rpy=0 0 0                joint=revolute axis=0 1 0  limits=-2.2 2.2   shape=sphere  dims=0.04
link elbow          parent=shoulder_pitch xyz=0.30 0 0     rpy=0 0 0                joint=revolute axis=0 1 0  limits=-2.6 2.6   shape=sphere  dims=0.035
link wrist_roll     parent=elbow          xyz=0.25 0 0     rpy=0 0 0                joint=revolute axis=1 0 0  limits=-3.0 3.0   shape=sphere  dims=0.03
link wrist_pitch    parent=wrist_roll     xyz=0.06 0 0     rpy=0 0 0                joint=revolute axis=0 1 0  limits=-1.9 1.9   shape=sphere  dims=0.03
link wrist_yaw      parent=wrist_pitch    xyz=0.05 0 0     rpy=0 0 0                joint=revolute axis=0 0 1  limits=-2.96 2.96 shape=sphere  dims=0.03
link palm           parent=wrist_yaw      xyz=0.10 0 0     rpy=0 0 0                joint=fixed    axis=0 0 1  limits=0 0        shape=box     dims=0.05 0.04 0.012

# Thumb: mounted at the proximal palm edge, opposing the three fingers.
link thumb_knuckle  parent=palm           xyz=-0.05 0 -0.006      rpy=3.14159265358979 1.5707963267948966 0 joint=revolute axis=1 0 0 limits=-0.3 0.3 shape=sphere dims=0.009
link thumb_prox     parent=thumb_knuckle  xyz=0 0 0        rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.009 0.025
link thumb_mid      parent=thumb_prox     xyz=0 0 0.05     rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.0085 0.02
link thumb_dist     parent=thumb_mid      xyz=0 0 0.04     rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.008 0.015
link thumb_tip      parent=thumb_dist     xyz=0 0 0.03     rpy=0 0 0                joint=fixed    axis=0 0 1  limits=0 0        shape=sphere  dims=0.01

link index_knuckle  parent=palm           xyz=0.05 0.032 -0.006   rpy=0 1.5707963267948966 0 joint=revolute axis=1 0 0 limits=-0.3 0.3 shape=sphere dims=0.009
link index_prox     parent=index_knuckle  xyz=0 0 0        rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.009 0.0225
link index_mid      parent=index_prox     xyz=0 0 0.045    rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.0085 0.0175
link index_dist     parent=index_mid      xyz=0 0 0.035    rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.008 0.0125
link index_tip      parent=index_dist     xyz=0 0 0.025    rpy=0 0 0                joint=fixed    axis=0 0 1  limits=0 0        shape=sphere  dims=0.01

link middle_knuckle parent=palm           xyz=0.05 0 -0.006       rpy=0 1.5707963267948966 0 joint=revolute axis=1 0 0 limits=-0.3 0.3 shape=sphere dims=0.009
link middle_prox    parent=middle_knuckle xyz=0 0 0        rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.009 0.0225
link middle_mid     parent=middle_prox    xyz=0 0 0.045    rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.0085 0.0175
link middle_dist    parent=middle_mid     xyz=0 0 0.035    rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.008 0.0125
link middle_tip     parent=middle_dist    xyz=0 0 0.025    rpy=0 0 0                joint=fixed    axis=0 0 1  limits=0 0        shape=sphere  dims=0.01

link ring_knuckle   parent=palm           xyz=0.05 -0.032 -0.006  rpy=0 1.5707963267948966 0 joint=revolute axis=1 0 0 limits=-0.3 0.3 shape=sphere dims=0.009
link ring_prox      parent=ring_knuckle   xyz=0 0 0        rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.009 0.0225
link ring_mid       parent=ring_prox      xyz=0 0 0.045    rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.0085 0.0175
link ring_dist      parent=ring_mid       xyz=0 0 0.035    rpy=0 0 0                joint=revolute axis=0 1 0  limits=-0.4 1.0   shape=capsule dims=0.008 0.0125
link ring_tip       parent=ring_dist      xyz=0 0 0.025    rpy=0 0 0                joint=fixed    axis=0 0 1  limits=0 0        shape=sphere  dims=0.01
)";
}  // namespace

const std::string& KinematicChain::builtin_hand_arm_text() {
  static const std::string text(kHandArmText);
  return text;
}

const KinematicChain& KinematicChain::builtin_hand_arm() {
  static const KinematicChain chain = KinematicChain::parse(builtin_hand_arm_text());
  return chain;
}

}  // namespace dexcloud::kin
