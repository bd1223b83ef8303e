// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "invenc/little_group.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace invenc {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_half_integer(double s) {
  return s >= 0.0 && std::abs(2.0 * s - std::round(2.0 * s)) < 1e-12;
}

/// Rotation taking zhat to dir, in the plane spanned by both.
/// Degenerate dir = -zhat: rotation by pi about yhat.
LorentzTransform rotation_z_to(const Eigen::Vector3d& dir) {
  const Eigen::Vector3d n = dir.normalized();
  const double cz = n(2);
  if (cz > 1.0 - 1e-14) {
    return LorentzTransform::identity();
  }
  if (cz < -1.0 + 1e-14) {
    return LorentzTransform::rotation(kPi, Eigen::Vector3d::UnitY());
  }
  const Eigen::Vector3d axis = Eigen::Vector3d::UnitZ().cross(n).normalized();
  return LorentzTransform::rotation(std::acos(std::clamp(cz, -1.0, 1.0)),
                                    axis);
}

Eigen::Matrix4d little_group_matrix(const LorentzTransform& lambda,
                                    const LorentzTransform& standard_before,
                                    const LorentzTransform& standard_after) {
  return (standard_after.inverse() * lambda * standard_before).mat;
}

Eigen::Matrix4d rot_z4(double angle) {
  return LorentzTransform::rotation(angle, Eigen::Vector3d::UnitZ()).mat;
}

}  // namespace

LorentzTransform standard_boost_massive(const FourMomentum& p) {
  if (p.is_massless()) {
    throw std::invalid_argument("standard_boost_massive: massless momentum");
  }
  p.validate();
  const Eigen::Vector3d sp = p.spatial();
  if (sp.norm() == 0.0) {
    return LorentzTransform::identity();
  }
  const double rapidity = std::asinh(sp.norm() / p.mass);
  return LorentzTransform::boost(rapidity, sp.normalized());
}

LorentzTransform standard_transform_massless(const FourMomentum& p) {
  if (!p.is_massless()) {
    throw std::invalid_argument("standard_transform_massless: massive momentum");
  }
  p.validate();
  // Reference momentum is (1,0,0,1): z-boost with rapidity ln(E) rescales
  // the energy, then the direction rotation aligns zhat with phat.
  const LorentzTransform bz =
      LorentzTransform::boost(std::log(p.energy()), Eigen::Vector3d::UnitZ());
  return rotation_z_to(p.spatial().normalized()) * bz;
}

LorentzTransform standard_transform_pair(const FourMomentum& pa,
                                         const FourMomentum& pb) {
  pa.validate();
  pb.validate();
  const Eigen::Vector4d total = pa.comps + pb.comps;
  const double s_mandelstam = -minkowski_dot(total, total);
  if (s_mandelstam <= 0.0) {
    throw std::invalid_argument(
        "standard_transform_pair: pair admits no centre-of-momentum frame");
  }
  const FourMomentum p_total =
      FourMomentum::massive(std::sqrt(s_mandelstam), total.tail<3>());
  const LorentzTransform to_cm = standard_boost_massive(p_total).inverse();
  const FourMomentum pa_cm = to_cm(pa);
  if (pa_cm.spatial().norm() < 1e-12 * pa_cm.energy()) {
    throw std::invalid_argument(
        "standard_transform_pair: vanishing relative momentum");
  }
  // Canonicalizer: boost to CM, rotate the first-listed momentum to +z.
  const LorentzTransform canon =
      rotation_z_to(pa_cm.spatial()).inverse() * to_cm;
  return canon.inverse();
}

WignerElement wigner_rotation_massive(const LorentzTransform& lambda,
                                      const FourMomentum& p) {
  if (p.is_massless()) {
    throw std::invalid_argument("wigner_rotation_massive: massless momentum");
  }
  WignerElement w;
  w.kind = WignerElement::Kind::MassiveRotation;
  w.raw = little_group_matrix(lambda, standard_boost_massive(p),
                              standard_boost_massive(lambda(p)));

  const double block_residual =
      std::max(std::abs(w.raw(0, 0) - 1.0),
               std::max(w.raw.block<1, 3>(0, 1).cwiseAbs().maxCoeff(),
                        w.raw.block<3, 1>(1, 0).cwiseAbs().maxCoeff()));
  Eigen::Matrix3d r = w.raw.block<3, 3>(1, 1);
  const double so3_residual =
      (r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  if (block_residual > 1e-8 || so3_residual > 1e-8) {
    std::ostringstream msg;
    msg << "wigner_rotation_massive: SO(3)-block residual " << block_residual
        << " / " << so3_residual << " exceeds 1e-8";
    throw std::runtime_error(msg.str());
  }
  // Re-orthogonalize before the axis-angle extraction.
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::AngleAxisd aa(Eigen::Matrix3d(svd.matrixU() *
                                       svd.matrixV().transpose()));
  w.axis = aa.axis();
  w.angle = aa.angle();
  return w;
}

WignerElement wigner_phase_massless(const LorentzTransform& lambda,
                                    const FourMomentum& p) {
  if (!p.is_massless()) {
    throw std::invalid_argument("wigner_phase_massless: massive momentum");
  }
  WignerElement w;
  w.kind = WignerElement::Kind::MasslessPhase;
  w.raw = little_group_matrix(lambda, standard_transform_massless(p),
                              standard_transform_massless(lambda(p)));

  // ISO(2) factorization W = S(alpha,beta) Rz(omega): the null-translation
  // parameters sit in the first column, the rotation in the x-y block.
  const double alpha = w.raw(1, 0);
  const double beta = w.raw(2, 0);
  const double omega = std::atan2(w.raw(2, 1), w.raw(1, 1));
  const double zeta = 0.5 * (alpha * alpha + beta * beta);

  Eigen::Matrix4d s;
  s << 1.0 + zeta, alpha, beta, -zeta,
       alpha, 1.0, 0.0, -alpha,
       beta, 0.0, 1.0, -beta,
       zeta, alpha, beta, 1.0 - zeta;
  const double residual = (w.raw - s * rot_z4(omega)).cwiseAbs().maxCoeff();
  if (residual > 1e-8) {
    throw std::runtime_error(
        "wigner_phase_massless: ISO(2) decomposition residual " +
        std::to_string(residual));
  }
  w.angle = omega;
  return w;
}

WignerElement pairwise_phase(const LorentzTransform& lambda,
                             const FourMomentum& pa, const FourMomentum& pb) {
  WignerElement w;
  w.kind = WignerElement::Kind::PairwisePhase;
  w.raw = little_group_matrix(lambda, standard_transform_pair(pa, pb),
                              standard_transform_pair(lambda(pa), lambda(pb)));
  const double phi = std::atan2(w.raw(2, 1), w.raw(1, 1));
  const double residual = (w.raw - rot_z4(phi)).cwiseAbs().maxCoeff();
  if (residual > 1e-8) {
    throw std::runtime_error(
        "pairwise_phase: little-group element is not a z-rotation, residual " +
        std::to_string(residual));
  }
  w.angle = phi;
  return w;
}

SpinRep spin_rep(double s) {
  if (!is_half_integer(s)) {
    throw std::invalid_argument("spin_rep: s must be a half-integer >= 0");
  }
  const int dim = static_cast<int>(std::round(2.0 * s)) + 1;
  Matrix jz = Matrix::Zero(dim, dim);
  Matrix jplus = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double m = s - i;
    jz(i, i) = m;
    if (i + 1 < dim) {
      // <m+1| J+ |m> with basis ordered m = s .. -s.
      const double mlow = m - 1.0;
      jplus(i, i + 1) = std::sqrt(s * (s + 1.0) - mlow * (mlow + 1.0));
    }
  }
  SpinRep rep;
  rep.s = s;
  rep.jz = jz;
  rep.jx = 0.5 * (jplus + jplus.adjoint());
  rep.jy = Complex(0.0, -0.5) * (jplus - jplus.adjoint());
  return rep;
}

Matrix spin_rotation(double s, const Eigen::Vector3d& axis, double angle) {
  const SpinRep rep = spin_rep(s);
  const Eigen::Vector3d n = axis.normalized();
  const Matrix h = n(0) * rep.jx + n(1) * rep.jy + n(2) * rep.jz;
  return expm_hermitian_generator(h, angle);
}

Matrix spin_rep_matrix(double s, const WignerElement& w) {
  if (w.kind != WignerElement::Kind::MassiveRotation) {
    throw std::invalid_argument(
        "spin_rep_matrix: expected a massive rotation element");
  }
  return spin_rotation(s, w.axis, w.angle);
}

Complex translation_phase(const Eigen::Vector4d& x, const FourMomentum& p) {
  return std::exp(Complex(0.0, -minkowski_dot(x, p.comps)));
}

SphereQuadrature SphereQuadrature::build(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) {
    throw std::invalid_argument("SphereQuadrature: node counts must be >= 1");
  }
  SphereQuadrature q;
  // Gauss-Legendre nodes on [-1,1] by Newton iteration on P_n.
  for (int i = 0; i < n_theta; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n_theta + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n_theta; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n_theta * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n_theta; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n_theta * (x * p1 - p0) / (x * x - 1.0);
    q.theta.push_back(std::acos(std::clamp(x, -1.0, 1.0)));
    q.w_theta.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  q.w_phi = 2.0 * kPi / n_phi;
  for (int i = 0; i < n_phi; ++i) q.phi.push_back(i * q.w_phi);
  return q;
}

Complex sphere_inner(const SphereQuadrature& grid, const Matrix& f,
                     const Matrix& g) {
  Complex acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    for (Eigen::Index j = 0; j < f.cols(); ++j) {
      acc += grid.w_theta[i] * grid.w_phi * std::conj(f(i, j)) * g(i, j);
    }
  }
  return acc;
}

Matrix wigner_small_d(double j, double beta) {
  return expm_hermitian_generator(spin_rep(j).jy, beta);
}

PartialWaveTable two_particle_partial_wave(double total_spin,
                                           double total_helicity, int lambda1,
                                           int lambda2,
                                           const SphereQuadrature& grid) {
  if (!is_half_integer(total_spin)) {
    throw std::invalid_argument("two_particle_partial_wave: bad total spin");
  }
  const double lam = lambda1 - lambda2;
  if (std::abs(lam) > total_spin + 1e-12) {
    throw std::invalid_argument(
        "two_particle_partial_wave: helicity difference exceeds total spin");
  }
  if (std::abs(total_helicity) > total_spin + 1e-12 ||
      std::abs(std::round(total_spin - total_helicity) -
               (total_spin - total_helicity)) > 1e-12 ||
      std::abs(std::round(total_spin - lam) - (total_spin - lam)) > 1e-12) {
    throw std::invalid_argument(
        "two_particle_partial_wave: invalid total helicity label");
  }
  const int row = static_cast<int>(std::round(total_spin - total_helicity));
  const int col = static_cast<int>(std::round(total_spin - lam));

  PartialWaveTable table;
  table.total_spin = total_spin;
  table.total_helicity = total_helicity;
  table.lambda1 = lambda1;
  table.lambda2 = lambda2;
  const double norm = std::sqrt((2.0 * total_spin + 1.0) / (4.0 * kPi));
  table.values.resize(static_cast<Eigen::Index>(grid.theta.size()),
                      static_cast<Eigen::Index>(grid.phi.size()));
  for (std::size_t i = 0; i < grid.theta.size(); ++i) {
    const Matrix d = wigner_small_d(total_spin, grid.theta[i]);
    for (std::size_t k = 0; k < grid.phi.size(); ++k) {
      // conj of D^J_{Sigma,lam}(phi, theta, 0) = e^{i Sigma phi} d(theta).
      table.values(i, k) =
          norm * std::exp(Complex(0.0, total_helicity * grid.phi[k])) *
          d(row, col);
    }
  }
  return table;
}

}  // namespace invenc
