// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "invenc/kinematics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace invenc {

double minkowski_dot(const Eigen::Vector4d& x, const Eigen::Vector4d& y) {
  return -x(0) * y(0) + x.tail<3>().dot(y.tail<3>());
}

Eigen::Matrix4d minkowski_metric() {
  Eigen::Matrix4d eta = Eigen::Matrix4d::Identity();
  eta(0, 0) = -1.0;
  return eta;
}

FourMomentum FourMomentum::massive(double m, const Eigen::Vector3d& spatial) {
  if (m <= 0.0) {
    throw std::invalid_argument("FourMomentum::massive: mass must be > 0");
  }
  FourMomentum p;
  p.mass = m;
  p.comps << std::sqrt(m * m + spatial.squaredNorm()), spatial;
  return p;
}

FourMomentum FourMomentum::massless(double energy,
                                    const Eigen::Vector3d& direction) {
  if (energy <= 0.0) {
    throw std::invalid_argument("FourMomentum::massless: energy must be > 0");
  }
  if (direction.norm() == 0.0) {
    throw std::invalid_argument("FourMomentum::massless: zero direction");
  }
  FourMomentum p;
  p.mass = 0.0;
  p.comps << energy, energy * direction.normalized();
  return p;
}

FourMomentum FourMomentum::from_components(const Eigen::Vector4d& comps) {
  FourMomentum p;
  p.comps = comps;
  const double m2 = -minkowski_dot(comps, comps);
  const double e2 = comps(0) * comps(0);
  p.mass = (std::abs(m2) <= 1e-9 * e2) ? 0.0 : std::sqrt(m2);
  p.validate();
  return p;
}

void FourMomentum::validate() const {
  const double e2 = comps(0) * comps(0);
  const double m2 = -minkowski_dot(comps, comps);
  if (comps(0) <= 0.0) {
    throw std::invalid_argument("FourMomentum: energy must be positive");
  }
  if (std::abs(m2 - mass * mass) > 1e-9 * e2) {
    std::ostringstream msg;
    msg << "FourMomentum: off mass shell, E^2-|p|^2 = " << m2
        << " but m^2 = " << mass * mass;
    throw std::invalid_argument(msg.str());
  }
}

LorentzTransform LorentzTransform::identity() { return LorentzTransform{}; }

LorentzTransform LorentzTransform::boost(double rapidity,
                                         const Eigen::Vector3d& axis) {
  if (axis.norm() == 0.0) {
    throw std::invalid_argument("LorentzTransform::boost: zero axis");
  }
  const Eigen::Vector3d n = axis.normalized();
  const double ch = std::cosh(rapidity);
  const double sh = std::sinh(rapidity);
  LorentzTransform t;
  t.mat.setIdentity();
  t.mat(0, 0) = ch;
  t.mat.block<1, 3>(0, 1) = sh * n.transpose();
  t.mat.block<3, 1>(1, 0) = sh * n;
  t.mat.block<3, 3>(1, 1) =
      Eigen::Matrix3d::Identity() + (ch - 1.0) * n * n.transpose();
  std::ostringstream rec;
  rec << "boost(chi=" << rapidity << ", axis=[" << n.transpose() << "])";
  t.built_from = rec.str();
  return t;
}

LorentzTransform LorentzTransform::rotation(double angle,
                                            const Eigen::Vector3d& axis) {
  if (axis.norm() == 0.0) {
    throw std::invalid_argument("LorentzTransform::rotation: zero axis");
  }
  LorentzTransform t;
  t.mat.setIdentity();
  t.mat.block<3, 3>(1, 1) =
      Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
  std::ostringstream rec;
  rec << "rotation(angle=" << angle << ", axis=["
      << axis.normalized().transpose() << "])";
  t.built_from = rec.str();
  return t;
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& rhs) const {
  LorentzTransform t;
  t.mat = mat * rhs.mat;
  t.built_from = "(" + built_from + ")*(" + rhs.built_from + ")";
  return t;
}

LorentzTransform LorentzTransform::inverse() const {
  // eta Lambda^T eta is the inverse for any Lorentz matrix; cheaper and
  // better conditioned than a general inverse.
  LorentzTransform t;
  const Eigen::Matrix4d eta = minkowski_metric();
  t.mat = eta * mat.transpose() * eta;
  t.built_from = "inv(" + built_from + ")";
  return t;
}

FourMomentum LorentzTransform::operator()(const FourMomentum& p) const {
  FourMomentum out;
  out.comps = mat * p.comps;
  out.mass = p.mass;
  return out;
}

void LorentzTransform::validate(double tol) const {
  const Eigen::Matrix4d eta = minkowski_metric();
  const double residual =
      (mat.transpose() * eta * mat - eta).cwiseAbs().maxCoeff();
  if (residual > tol) {
    throw std::invalid_argument(
        "LorentzTransform: metric not preserved, residual " +
        std::to_string(residual));
  }
  if (std::abs(mat.determinant() - 1.0) > 1e-8) {
    throw std::invalid_argument("LorentzTransform: det != +1");
  }
  if (mat(0, 0) < 1.0 - 1e-12) {
    throw std::invalid_argument("LorentzTransform: not orthochronous");
  }
}

}  // namespace invenc
