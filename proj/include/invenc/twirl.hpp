// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invenc/encode.hpp"
#include "invenc/kinematics.hpp"
#include "invenc/little_group.hpp"
#include "invenc/tensor.hpp"

namespace invenc {

/// Normalized sampling recipe over the Lorentz group: a delta, an explicit
/// weighted list, or a seeded parametric sampler over rotation angles and
/// boost rapidities/axes. Realization is deterministic given the seed.
struct GroupMeasure {
  enum class Kind { Delta, Discrete, Sampler };
  enum class RapidityDist { None, HalfGaussian, HalfCauchy };

  Kind kind = Kind::Sampler;

  // Delta / Discrete.
  std::vector<LorentzTransform> elements;
  std::vector<double> weights;

  // Sampler.
  RapidityDist rapidity_dist = RapidityDist::HalfGaussian;
  double rapidity_scale = 1.0;
  // Half-Cauchy rapidities are truncated here; beyond ~6 the 4x4 Wigner
  // extraction loses digits to cancellation.
  double rapidity_cap = 6.0;
  bool include_rotations = true;
  std::optional<Eigen::Vector3d> boost_axis;     // fixed axis, else uniform
  std::optional<Eigen::Vector3d> rotation_axis;  // fixed axis, else uniform
  int samples = 500;
  std::uint64_t seed = 0;

  static GroupMeasure delta(const LorentzTransform& g);
  static GroupMeasure discrete(std::vector<LorentzTransform> elements,
                               std::vector<double> weights);

  /// Materializes the measure as a weighted element list. Throws when the
  /// normalization condition (weights sum to 1) is violated.
  std::vector<std::pair<LorentzTransform, double>> realize() const;
  std::string describe() const;
};

using GroupAction = std::function<Matrix(const LorentzTransform&)>;

/// Twirling channel: sum_k w_k U(g_k) rho U(g_k)^dagger. Each representation
/// image is checked for unitarity within 1e-10; accumulation uses pairwise
/// (tree) summation so results do not depend on evaluation order.
Matrix twirl(const Matrix& rho, const GroupAction& rep,
             const GroupMeasure& measure);

/// Collective spin-s action D(W(Lambda,p))^{tensor N} on N equal-momentum
/// massive particles.
GroupAction lorentz_rep_massive(int n_particles, double s,
                                const FourMomentum& p);
/// Diagonal helicity phases exp(i h(string) omega(Lambda,p)) on N
/// equal-momentum massless particles (product helicity basis, bit 0 = +1).
GroupAction lorentz_rep_massless(int n_particles, const FourMomentum& p);
/// Diagonal branch phases exp(i sum_q(branch) phi(Lambda)) on the which-way
/// branch space of a dyon encoding.
GroupAction lorentz_rep_dyon_branches(const DyonEncoding& encoding);
/// D^(J)(W(Lambda,P)) x identity(multiplicity) for a fixed-total-momentum
/// irrep label.
GroupAction lorentz_rep_total_momentum(const TotalMomentumLabel& label);
GroupAction lorentz_rep_for(const InvariantState& state);

struct BlockDeviation {
  double irrep_label;
  int dim_irrep;
  int dim_mult;
  double avg_deviation;    // mean over samples of the block-state deviation
  double worst_deviation;  // max over samples
  double coeff_deviation;  // decoded multiplicity-coefficient deviation
};

struct TwirlReport {
  std::string scheme;
  std::string measure;
  std::vector<BlockDeviation> per_block;
  double global_trace_distance = 0.0;  // twirled average vs. original
  double worst_case = 0.0;             // max per-sample full-state deviation
  double avg_case = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
};

/// Conjugates the state by every sampled group element and reports, per
/// irrep block, how far the block content and the decoded multiplicity
/// coefficients move. Invariant encodings stay put for every single element.
TwirlReport invariance_report(const InvariantState& state,
                              const GroupMeasure& measure);

/// Same per-sample bookkeeping for an arbitrary product-basis state under a
/// given Schur decomposition and group action.
TwirlReport invariance_report_generic(const Matrix& rho_product,
                                      const SchurBasis& basis,
                                      const GroupAction& rep,
                                      const GroupMeasure& measure,
                                      const std::string& scheme);

/// Dyon which-way check: twirls spin x branch product states and reports the
/// deviation of the reduced branch (pairwise-helicity) state.
TwirlReport dyon_invariance_report(const DyonEncoding& encoding,
                                   const GroupMeasure& measure);

/// Measure over SL(2,C) Cartan factors M = K A_n K': Haar-uniform SU(2)
/// pair, A = diag(a, 1/a) with log(a) Gaussian of width singular_scale,
/// normalized by the largest singular value.
struct SloccMeasure {
  int samples = 5000;
  std::uint64_t seed = 0;
  double singular_scale = 0.5;  // 0 reduces to a double Haar unitary twirl
};

struct SloccBlockFit {
  double irrep_label;
  Complex beta;          // fitted per-block rescaling
  double residual;       // max |out - beta * in| over block entries
  double residual_se;    // jackknife standard error at that entry
  // Largest elementwise |out - beta*in| / SE over the block; the
  // proportionality claim holds when this stays below the chosen sigma
  // tolerance (entries with vanishing SE contribute only if they deviate).
  double max_sigma;
};

struct SloccResult {
  Matrix output;                      // trace-non-increasing map output
  std::vector<SloccBlockFit> fits;    // per unitary-irrep block
};

/// Collective SLOCC twirl sum_k w_k M_k^{tensor N} rho (M_k^{tensor N})^dag
/// with per-block proportionality fits against the input.
SloccResult slocc_twirl(const Matrix& rho, int n_particles,
                        const SloccMeasure& measure);

}  // namespace invenc
