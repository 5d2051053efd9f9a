#include "dexcloud/chain.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace dexcloud::kin {

namespace {

struct Tokenizer {
  std::vector<std::string> tokens;
  size_t pos = 0;
  int line;

  explicit Tokenizer(const std::string& text, int line_number) : line(line_number) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }

  bool done() const { return pos >= tokens.size(); }

  std::string next(const char* what) {
    if (done()) throw ParseError(line, std::string("missing ") + what);
    return tokens[pos++];
  }

  /// Consumes "key=v0" plus count-1 further bare tokens.
  std::vector<std::string> field(const std::string& key, int count) {
    std::string head = next(key.c_str());
    const std::string prefix = key + "=";
    if (head.rfind(prefix, 0) != 0)
      throw ParseError(line, "expected '" + key + "=', got '" + head + "'");
    std::vector<std::string> vals;
    vals.push_back(head.substr(prefix.size()));
    for (int i = 1; i < count; ++i) vals.push_back(next(key.c_str()));
    return vals;
  }

  double to_double(const std::string& s) {
    try {
      size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ParseError(line, "bad number '" + s + "'");
    }
  }
};

}  // namespace

KinematicChain KinematicChain::parse(const std::string& text) {
  KinematicChain chain;
  std::map<std::string, int> by_name;

  std::istringstream in(text);
  std::string raw;
  int line_number = 0;
  bool saw_any = false;
  while (std::getline(in, raw)) {
    ++line_number;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    Tokenizer tok(raw, line_number);
    if (tok.done()) continue;
    saw_any = true;

    if (tok.next("record type") != "link")
      throw ParseError(line_number, "record must start with 'link'");

    Link link;
    link.name = tok.next("link name");
    if (by_name.count(link.name))
      throw TopologyError("duplicate link name '" + link.name + "'");

    const std::string parent = tok.field("parent", 1)[0];
    if (parent == "none") {
      link.parent = -1;
      for (const Link& l : chain.links_)
        if (l.parent == -1)
          throw TopologyError("multiple root links ('" + l.name + "', '" + link.name + "')");
    } else if (parent == link.name) {
      throw TopologyError("link '" + link.name + "' is its own parent (cycle)");
    } else {
      auto it = by_name.find(parent);
      if (it == by_name.end())
        throw TopologyError("link '" + link.name + "' references undefined parent '" + parent +
                            "' (cycle or missing link)");
      link.parent = it->second;
    }

    auto xyz = tok.field("xyz", 3);
    auto rpy = tok.field("rpy", 3);
    Eigen::Vector3d t(tok.to_double(xyz[0]), tok.to_double(xyz[1]), tok.to_double(xyz[2]));
    Eigen::Vector3d r(tok.to_double(rpy[0]), tok.to_double(rpy[1]), tok.to_double(rpy[2]));
    link.origin = Pose::from_rpy(r, t);

    const std::string jtype = tok.field("joint", 1)[0];
    if (jtype == "revolute") {
      link.joint.type = JointType::kRevolute;
    } else if (jtype == "prismatic") {
      link.joint.type = JointType::kPrismatic;
    } else if (jtype == "fixed") {
      link.joint.type = JointType::kFixed;
    } else {
      throw ParseError(line_number, "unknown joint type '" + jtype + "'");
    }

    auto axis = tok.field("axis", 3);
    link.joint.axis = Eigen::Vector3d(tok.to_double(axis[0]), tok.to_double(axis[1]),
                                      tok.to_double(axis[2]));
    auto limits = tok.field("limits", 2);
    link.joint.lo = tok.to_double(limits[0]);
    link.joint.hi = tok.to_double(limits[1]);

    if (link.joint.type != JointType::kFixed) {
      if (std::abs(link.joint.axis.norm() - 1.0) > 1e-9)
        throw ParseError(line_number, "joint axis must be unit-norm");
      if (link.joint.lo > link.joint.hi)
        throw ParseError(line_number, "joint limits must satisfy lo <= hi");
      link.q_index = chain.dof_++;
    }

    const std::string skind = tok.field("shape", 1)[0];
    if (skind == "sphere") {
      auto d = tok.field("dims", 1);
      link.shape = geom::Shape::sphere(tok.to_double(d[0]));
    } else if (skind == "capsule") {
      auto d = tok.field("dims", 2);
      link.shape = geom::Shape::capsule(tok.to_double(d[0]), tok.to_double(d[1]));
    } else if (skind == "box") {
      auto d = tok.field("dims", 3);
      link.shape = geom::Shape::box(Eigen::Vector3d(tok.to_double(d[0]), tok.to_double(d[1]),
                                                    tok.to_double(d[2])));
    } else {
      throw ParseError(line_number, "unknown shape '" + skind + "'");
    }

    if (!tok.done())
      throw ParseError(line_number, "trailing tokens after link record");

    by_name[link.name] = static_cast<int>(chain.links_.size());
    chain.links_.push_back(std::move(link));
  }

  if (!saw_any) throw ParseError(line_number == 0 ? 1 : line_number, "empty chain description");
  if (chain.links_.empty()) throw ParseError(1, "no link records");

  chain.lo_.resize(chain.dof_);
  chain.hi_.resize(chain.dof_);
  for (const Link& l : chain.links_) {
    if (l.q_index >= 0) {
      chain.lo_[l.q_index] = l.joint.lo;
      chain.hi_[l.q_index] = l.joint.hi;
    }
  }

  const char* tip_names[] = {"thumb_tip", "index_tip", "middle_tip", "ring_tip"};
  bool all_tips = true;
  for (const char* n : tip_names) all_tips = all_tips && by_name.count(n);
  if (all_tips)
    for (const char* n : tip_names) chain.fingertip_links_.push_back(by_name[n]);
  if (auto it = by_name.find("palm"); it != by_name.end()) chain.palm_link_ = it->second;

  return chain;
}

int KinematicChain::link_index(const std::string& name) const {
  for (size_t i = 0; i < links_.size(); ++i)
    if (links_[i].name == name) return static_cast<int>(i);
  return -1;
}

bool KinematicChain::is_hand_arm() const {
  return dof_ == kArmDof + kHandDof && fingertip_links_.size() == 4 && palm_link_ >= 0;
}

Eigen::VectorXd KinematicChain::clamp_to_limits(const Eigen::VectorXd& q) const {
  check_q(q);
  return q.cwiseMax(lo_).cwiseMin(hi_);
}

void KinematicChain::check_q(const Eigen::VectorXd& q) const {
  if (q.size() != dof_)
    throw std::invalid_argument("joint configuration has dimension " + std::to_string(q.size()) +
                                ", chain expects " + std::to_string(dof_));
  if (!q.allFinite()) throw std::invalid_argument("joint configuration must be finite");
}

std::vector<Pose> KinematicChain::forward_kinematics(const Eigen::VectorXd& q) const {
  check_q(q);
  std::vector<Pose> poses(links_.size());
  for (size_t i = 0; i < links_.size(); ++i) {
    const Link& link = links_[i];
    const Pose anchor = (link.parent < 0) ? link.origin : poses[link.parent] * link.origin;
    switch (link.joint.type) {
      case JointType::kFixed:
        poses[i] = anchor;
        break;
      case JointType::kRevolute:
        poses[i] = anchor * Pose::from_axis_angle(link.joint.axis, q[link.q_index]);
        break;
      case JointType::kPrismatic:
        poses[i] = anchor * Pose::from_translation(link.joint.axis * q[link.q_index]);
        break;
    }
  }
  return poses;
}

Eigen::MatrixXd KinematicChain::jacobian(const Eigen::VectorXd& q, int link_index) const {
  check_q(q);
  if (link_index < 0 || link_index >= link_count())
    throw std::invalid_argument("jacobian: invalid link index");

  const std::vector<Pose> poses = forward_kinematics(q);
  const Eigen::Vector3d target = poses[link_index].translation;

  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(6, dof_);
  for (int i = link_index; i >= 0; i = links_[i].parent) {
    const Link& link = links_[i];
    if (link.q_index < 0) continue;
    // Joint anchor: the link frame before joint motion. Revolute motion
    // leaves the translation unchanged; prismatic shifts it, so recompute.
    const Pose anchor = (link.parent < 0) ? link.origin : poses[link.parent] * link.origin;
    const Eigen::Vector3d axis_w = anchor.rotation * link.joint.axis;
    if (link.joint.type == JointType::kRevolute) {
      jac.block<3, 1>(0, link.q_index) = axis_w.cross(target - anchor.translation);
      jac.block<3, 1>(3, link.q_index) = axis_w;
    } else {
      jac.block<3, 1>(0, link.q_index) = axis_w;
    }
  }
  return jac;
}

Pose KinematicChain::shape_world_pose(int link_index, const Pose& link_pose) const {
  const geom::Shape& s = links_[link_index].shape;
  if (s.kind == geom::ShapeKind::kCapsule || s.kind == geom::ShapeKind::kCylinder)
    return link_pose * Pose::from_translation(Eigen::Vector3d(0, 0, s.half_length));
  return link_pose;
}

Eigen::Matrix<double, 6, 1> damped_ls_ik_step(const KinematicChain& chain,
                                              const Eigen::VectorXd& q,
                                              const Eigen::Matrix<double, 6, 1>& target_delta,
                                              const IkConfig& cfg) {
  if (!target_delta.allFinite())
    throw std::invalid_argument("ik: target delta must be finite");
  if (!(cfg.damping > 0.0)) throw std::invalid_argument("ik: damping must be > 0");
  if (chain.palm_link() < 0) throw std::invalid_argument("ik: chain has no palm link");

  const Eigen::MatrixXd full = chain.jacobian(q, chain.palm_link());
  const Eigen::Matrix<double, 6, 6> jac = full.block<6, 6>(0, 0);

  const Eigen::Matrix<double, 6, 6> normal =
      jac.transpose() * jac +
      cfg.damping * cfg.damping * Eigen::Matrix<double, 6, 6>::Identity();
  Eigen::Matrix<double, 6, 1> dq = normal.ldlt().solve(jac.transpose() * target_delta);

  const double n = dq.norm();
  if (n > cfg.max_step_norm) dq *= cfg.max_step_norm / n;
  return dq;
}

}  // namespace dexcloud::kin
