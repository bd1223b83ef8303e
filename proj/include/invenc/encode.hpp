// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "invenc/kinematics.hpp"
#include "invenc/schur.hpp"
#include "invenc/tensor.hpp"

namespace invenc {

enum class Scheme { Massive, Massless, Dyon, TotalMomentum };

const char* scheme_name(Scheme s);

/// A state whose discrete degrees of freedom are supported on multiplicity
/// spaces: block i carries a D_V^i x D_V^i coefficient matrix, the irrep
/// factor of each block is maximally mixed. Momentum labels are symbolic
/// (sharp values shared by all particles, or the fixed total momentum).
struct InvariantState {
  Scheme scheme;
  std::shared_ptr<const SchurBasis> basis;
  std::map<int, Matrix> blocks;        // irrep index -> coefficients
  std::vector<FourMomentum> momenta;   // per-particle labels, or {P}
  double mandelstam = 0.0;             // total-momentum scheme only
  double total_spin = 0.0;             // total-momentum scheme only

  /// Assembled density matrix on the discrete degrees of freedom, in the
  /// Schur basis: block i = (1/D_L^i) identity(D_L) x rho^i.
  Matrix density_schur() const;
  /// Same state expressed in the product basis.
  Matrix density_product() const;
};

/// Electric/magnetic charge assignment for a set of particles, with the
/// derived antisymmetric pairwise-helicity matrix q(a,b) = e_a g_b - e_b g_a.
struct DyonConfiguration {
  std::vector<int> electric;            // e_alpha per particle
  std::vector<int> magnetic;            // g_alpha per particle
  std::vector<FourMomentum> momenta;    // per-particle labels
  std::vector<double> spins;            // per-particle spin s

  int n_particles() const { return static_cast<int>(electric.size()); }
  int pairwise_helicity(int a, int b) const;  // q_ab
  /// Sum of q_ab over all pairs a > b.
  int total_pairwise_helicity() const;
  /// Sorted multiset of (e, g) charges, for superselection comparisons.
  std::vector<std::pair<int, int>> charge_multiset() const;
};

struct DyonCellParams {
  double mass_electric = 1.0;
  double mass_magnetic = 1.0;
  Eigen::Vector3d momentum_electric = Eigen::Vector3d::Zero();
  Eigen::Vector3d momentum_magnetic = Eigen::Vector3d::Zero();
  double spin = 0.5;
};

/// Four-particle cell built from two electric/monopole pairs: bit 1 gives
/// (q12, q34) = (+1, -1), bit 0 gives (-1, +1); the total pairwise helicity
/// vanishes either way.
DyonConfiguration build_dyon_cell(int bit, const DyonCellParams& params);

/// Which-way superposition over charge-configuration branches.
struct DyonEncoding {
  std::vector<DyonConfiguration> branches;
  StateVector amplitudes;              // over branches
  bool invariant = true;               // false when branch q-sums differ
  std::string flag;                    // non-invariant branch pair report
};

DyonEncoding encode_dyon_qubit(const DyonConfiguration& cell_a,
                               const DyonConfiguration& cell_b, Complex zeta,
                               Complex zeta_prime);

struct TotalMomentumLabel {
  double mandelstam = 1.0;             // s > 0
  double total_spin = 0.0;             // J
  FourMomentum total_momentum;         // P with P^2 = -s (mass sqrt(s))
  std::vector<std::vector<int>> multiplicity_labels;  // helicity sets
  int dim_irrep_restriction = 0;       // 0 means full 2J+1
};

InvariantState encode_massive_equal_momentum(
    std::shared_ptr<const SchurBasis> basis, const FourMomentum& p,
    const std::map<double, Matrix>& blocks_by_spin);

InvariantState encode_massless_helicity_sum(
    std::shared_ptr<const SchurBasis> basis, const FourMomentum& p,
    const std::map<int, Matrix>& blocks_by_helicity_sum);

InvariantState encode_total_momentum(const TotalMomentumLabel& label,
                                     const Matrix& block);

/// rho^i(mu1, mu2) = Tr(state Pi_i^{mu2 mu1}); the inverse of the assembly
/// above for states built by the encoders. `state` is in the Schur basis.
Matrix decode_multiplicity(const Matrix& state_schur, const SchurBasis& basis,
                           int irrep);

}  // namespace invenc
