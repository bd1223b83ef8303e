// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace invenc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Dense complex operator on a finite Hilbert space. The basis tag is an
/// opaque label identifying the basis convention (product / schur / irrep)
/// and is carried through tensor products and basis changes.
struct DenseOperator {
  Matrix mat;
  std::string basis_tag = "product";

  DenseOperator() = default;
  explicit DenseOperator(Matrix m, std::string tag = "product")
      : mat(std::move(m)), basis_tag(std::move(tag)) {}

  Eigen::Index dim() const { return mat.rows(); }

  bool is_hermitian(double tol = 1e-12) const;
  bool is_unitary(double tol = 1e-12) const;

  /// Throws if the matrix is not a density matrix: Hermitian, unit trace
  /// within trace_tol and minimum eigenvalue above eig_floor.
  void require_density_matrix(double trace_tol = 1e-12,
                              double eig_floor = -1e-10) const;
};

struct StateVector {
  CVector amps;
  std::string basis_tag = "product";

  Eigen::Index dim() const { return amps.size(); }
  bool is_normalized(double tol = 1e-12) const;
};

/// Kronecker product, leftmost factor most significant (row-major).
Matrix kron(const Matrix& a, const Matrix& b);
DenseOperator tensor(const DenseOperator& a, const DenseOperator& b);

/// Traces out all tensor factors not listed in `keep` (0-based factor
/// indices). The product of factor_dims must equal the operator dimension.
Matrix partial_trace(const Matrix& rho,
                     const std::vector<Eigen::Index>& factor_dims,
                     const std::vector<int>& keep);
DenseOperator partial_trace(const DenseOperator& rho,
                            const std::vector<Eigen::Index>& factor_dims,
                            const std::vector<int>& keep);

/// exp(-i t H) for Hermitian H, via eigendecomposition.
Matrix expm_hermitian_generator(const Matrix& h, double t);

double trace_distance(const Matrix& a, const Matrix& b);
double fidelity(const Matrix& a, const Matrix& b);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Small negative eigenvalues (float noise) are clipped to zero.
Matrix sqrt_psd(const Matrix& a);

}  // namespace invenc
