// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>
#include <vector>

#include "invenc/tensor.hpp"

namespace invenc {

/// Decomposition of a product space into irrep blocks: for each irrep label
/// i the block holds dim_irrep[i] x dim_mult[i] basis vectors |i,r,mu>.
/// basis_matrix columns are the Schur vectors expressed in the product
/// basis, ordered column-wise within each block: for each irrep (ascending
/// label), r outer and mu inner, so block index = r * D_V + mu.
struct SchurBasis {
  enum class Group { SU2, U1, Abstract };
  Group group = Group::SU2;
  int n_sites = 0;
  std::vector<double> irrep_labels;  // total spin J, or helicity sum h
  std::vector<int> dim_irrep;        // D_L per irrep
  std::vector<int> dim_mult;         // D_V per irrep
  Matrix basis_matrix;               // unitary, product basis -> |i,r,mu>

  Eigen::Index total_dim() const { return basis_matrix.rows(); }
  Eigen::Index block_offset(int irrep) const;
  int find_irrep(double label) const;  // -1 when absent

  /// U^dagger M U: expresses a product-basis operator in the Schur basis.
  Matrix to_schur(const Matrix& product_op) const;
  Matrix to_product(const Matrix& schur_op) const;
};

/// Iterative Clebsch-Gordan coupling of N spin-1/2 sites (Condon-Shortley
/// phases). Multiplicity index enumerates coupling paths sorted
/// lexicographically by their intermediate-spin sequence.
SchurBasis build_schur_basis_su2(int n_sites);

/// Helicity strings (+-1 per site) grouped by their sum h; irreps are
/// one-dimensional so the basis matrix is a permutation.
SchurBasis build_schur_basis_u1(int n_sites);

/// Single abstract irrep block of dimension d_irrep x d_mult with the
/// identity basis matrix (used for total-momentum irrep labels).
SchurBasis make_abstract_basis(double label, int d_irrep, int d_mult);

struct PiOperator {
  enum class Kind { Multiplicity, IrrepSpace };
  int irrep = 0;
  Kind kind = Kind::Multiplicity;
  DenseOperator op;  // in the Schur basis
};

/// |i,r,mu1><i,r,mu2| summed over r (acts as identity x e^{mu1 mu2} on the
/// virtual factors of block i). Indices are 0-based.
PiOperator pi_multiplicity(const SchurBasis& basis, int irrep, int mu1,
                           int mu2);
/// Summed over mu instead (e^{r1 r2} x identity on block i).
PiOperator pi_irrep(const SchurBasis& basis, int irrep, int r1, int r2);

/// Conjugates u_single^{tensor N} into the Schur basis and extracts the
/// per-irrep factors d_i such that block i = d_i x identity(D_V).
/// Throws when the off-block or off-factor residual exceeds 1e-8.
std::vector<Matrix> decompose_collective_unitary(const SchurBasis& basis,
                                                 const Matrix& u_single);

/// Operator permuting tensor factors: site k is sent to position perm[k].
DenseOperator tensor_permutation_operator(int n_sites, int local_dim,
                                          const std::vector<int>& perm);

/// Total-spin Casimir Jx^2+Jy^2+Jz^2 of the collective SU(2) action on
/// n_sites qubits (product basis).
Matrix total_spin_casimir(int n_sites);

int binomial(int n, int k);
/// SU(2) multiplicity of total spin J for N qubits.
int su2_multiplicity(int n_sites, double total_spin);
/// U(1) multiplicity of helicity sum h for N sites.
int u1_multiplicity(int n_sites, int helicity_sum);

}  // namespace invenc
