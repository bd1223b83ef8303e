// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <vector>

#include "invenc/kinematics.hpp"
#include "invenc/tensor.hpp"

namespace invenc {

/// Little-group element extracted from L(Lambda p)^-1 Lambda L(p).
/// The raw 4x4 matrix is retained for diagnostics and cocycle checks.
struct WignerElement {
  enum class Kind { MassiveRotation, MasslessPhase, PairwisePhase };
  Kind kind;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();  // massive only
  double angle = 0.0;  // rotation angle (massive) or z-phase (massless/pair)
  Eigen::Matrix4d raw = Eigen::Matrix4d::Identity();
};

/// Standard boost L(p) taking the rest momentum (m,0,0,0) to p.
LorentzTransform standard_boost_massive(const FourMomentum& p);

/// Standard transform R(phat) Bz(E) taking the reference null momentum
/// (1,0,0,1) to p. R(phat) rotates zhat to phat in the plane they span;
/// at phat = -zhat the convention is a rotation by pi about yhat.
LorentzTransform standard_transform_massless(const FourMomentum& p);

/// Canonical transform for a particle pair: maps the standard configuration
/// (centre-of-momentum frame, first-listed particle along +z) to (pa, pb).
LorentzTransform standard_transform_pair(const FourMomentum& pa,
                                         const FourMomentum& pb);

WignerElement wigner_rotation_massive(const LorentzTransform& lambda,
                                      const FourMomentum& p);
WignerElement wigner_phase_massless(const LorentzTransform& lambda,
                                    const FourMomentum& p);
WignerElement pairwise_phase(const LorentzTransform& lambda,
                             const FourMomentum& pa, const FourMomentum& pb);

/// Spin-s angular momentum generators, basis ordered m = s, s-1, ..., -s.
struct SpinRep {
  double s;
  Matrix jx, jy, jz;
};
SpinRep spin_rep(double s);

/// (2s+1)-dimensional rotation matrix exp(-i angle n.J) for a massive
/// Wigner element.
Matrix spin_rep_matrix(double s, const WignerElement& w);
Matrix spin_rotation(double s, const Eigen::Vector3d& axis, double angle);

/// exp(-i x.p) with the (-,+,+,+) metric, so x.p = -x0 E + xvec.pvec.
Complex translation_phase(const Eigen::Vector4d& x, const FourMomentum& p);

/// Product quadrature on the sphere: Gauss-Legendre in cos(theta) times a
/// uniform trapezoid in phi (exact for trigonometric polynomials of degree
/// < n_phi).
struct SphereQuadrature {
  std::vector<double> theta;     // nodes, from Gauss-Legendre in cos(theta)
  std::vector<double> w_theta;   // Gauss-Legendre weights
  std::vector<double> phi;       // n_phi uniform nodes on [0, 2pi)
  double w_phi;                  // 2pi / n_phi

  static SphereQuadrature build(int n_theta, int n_phi);
};

/// Two-particle total-spin coupling coefficients sampled on the grid,
/// normalized so that same-helicity-difference tables are orthonormal under
/// the quadrature inner product.
struct PartialWaveTable {
  double total_spin;      // J
  double total_helicity;  // Sigma_J
  int lambda1, lambda2;   // single-particle helicities, +-1
  Matrix values;          // n_theta x n_phi samples
};

PartialWaveTable two_particle_partial_wave(double total_spin,
                                           double total_helicity, int lambda1,
                                           int lambda2,
                                           const SphereQuadrature& grid);

Complex sphere_inner(const SphereQuadrature& grid, const Matrix& f,
                     const Matrix& g);

/// Wigner d-matrix exp(-i beta Jy) for spin j, basis m = j..-j.
Matrix wigner_small_d(double j, double beta);

}  // namespace invenc
