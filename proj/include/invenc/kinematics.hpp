// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>

#include <Eigen/Dense>

#include "invenc/tensor.hpp"

namespace invenc {

// Metric signature is (-,+,+,+) project-wide; four-vectors are stored as
// contravariant components (E, px, py, pz).

/// Minkowski inner product x.y = -x0 y0 + x.y with signature (-,+,+,+).
double minkowski_dot(const Eigen::Vector4d& x, const Eigen::Vector4d& y);

Eigen::Matrix4d minkowski_metric();

struct FourMomentum {
  Eigen::Vector4d comps;  // (E, px, py, pz)
  double mass = 0.0;      // 0 marks the massless class

  static FourMomentum massive(double m, const Eigen::Vector3d& spatial);
  static FourMomentum massless(double energy, const Eigen::Vector3d& direction);
  /// Classifies from raw components: mass is sqrt(max(E^2-|p|^2, 0)), with
  /// |E^2-|p|^2| <= 1e-9 E^2 treated as massless.
  static FourMomentum from_components(const Eigen::Vector4d& comps);

  bool is_massless() const { return mass == 0.0; }
  double energy() const { return comps(0); }
  Eigen::Vector3d spatial() const { return comps.tail<3>(); }

  /// Throws unless the mass-shell condition holds within 1e-9 * E^2.
  void validate() const;
};

/// Proper orthochronous Lorentz transformation acting on contravariant
/// components. Carries a human-readable record of how it was built.
struct LorentzTransform {
  Eigen::Matrix4d mat = Eigen::Matrix4d::Identity();
  std::string built_from = "identity";

  static LorentzTransform identity();
  /// Pure boost with rapidity chi >= 0 along a unit axis: maps (m,0,0,0)
  /// to (m cosh(chi), m sinh(chi) axis).
  static LorentzTransform boost(double rapidity, const Eigen::Vector3d& axis);
  /// Spatial rotation by angle about a unit axis (right-handed).
  static LorentzTransform rotation(double angle, const Eigen::Vector3d& axis);

  LorentzTransform operator*(const LorentzTransform& rhs) const;
  LorentzTransform inverse() const;
  FourMomentum operator()(const FourMomentum& p) const;

  /// Throws unless mat^T eta mat = eta within tol, det = +1 and
  /// mat(0,0) >= 1 (proper orthochronous).
  void validate(double tol = 1e-10) const;
};

}  // namespace invenc
