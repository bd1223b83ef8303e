// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "invenc/tensor.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace invenc {

bool DenseOperator::is_hermitian(double tol) const {
  return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool DenseOperator::is_unitary(double tol) const {
  Matrix delta = mat * mat.adjoint() - Matrix::Identity(dim(), dim());
  return delta.cwiseAbs().maxCoeff() <= tol;
}

void DenseOperator::require_density_matrix(double trace_tol,
                                           double eig_floor) const {
  if (!is_hermitian(1e-12)) {
    throw std::invalid_argument("density matrix check: not Hermitian");
  }
  if (std::abs(mat.trace() - Complex(1.0, 0.0)) > trace_tol) {
    throw std::invalid_argument("density matrix check: trace != 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < eig_floor) {
    throw std::invalid_argument("density matrix check: negative eigenvalue " +
                                std::to_string(es.eigenvalues().minCoeff()));
  }
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(amps.norm() - 1.0) <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b) {
  return DenseOperator(kron(a.mat, b.mat), a.basis_tag + "*" + b.basis_tag);
}

Matrix partial_trace(const Matrix& rho,
                     const std::vector<Eigen::Index>& factor_dims,
                     const std::vector<int>& keep) {
  const Eigen::Index total = std::accumulate(
      factor_dims.begin(), factor_dims.end(), Eigen::Index{1},
      std::multiplies<>());
  if (total != rho.rows() || rho.rows() != rho.cols()) {
    std::ostringstream msg;
    msg << "partial_trace: factor dims [";
    for (auto d : factor_dims) msg << d << " ";
    msg << "] give total " << total << " but operator has dim " << rho.rows();
    throw std::invalid_argument(msg.str());
  }
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set must be non-empty");
  }
  const int n = static_cast<int>(factor_dims.size());
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) {
      throw std::invalid_argument("partial_trace: keep index out of range");
    }
    kept[k] = true;
  }

  std::vector<int> keep_sorted, traced;
  for (int f = 0; f < n; ++f) (kept[f] ? keep_sorted : traced).push_back(f);

  Eigen::Index keep_dim = 1, trace_dim = 1;
  for (int f : keep_sorted) keep_dim *= factor_dims[f];
  for (int f : traced) trace_dim *= factor_dims[f];

  // Strides of each factor in the full row-major product index.
  std::vector<Eigen::Index> stride(n, 1);
  for (int f = n - 2; f >= 0; --f) stride[f] = stride[f + 1] * factor_dims[f + 1];

  auto full_index = [&](Eigen::Index kept_idx, Eigen::Index traced_idx) {
    Eigen::Index idx = 0;
    for (int f = static_cast<int>(keep_sorted.size()) - 1; f >= 0; --f) {
      const int fac = keep_sorted[f];
      idx += (kept_idx % factor_dims[fac]) * stride[fac];
      kept_idx /= factor_dims[fac];
    }
    for (int f = static_cast<int>(traced.size()) - 1; f >= 0; --f) {
      const int fac = traced[f];
      idx += (traced_idx % factor_dims[fac]) * stride[fac];
      traced_idx /= factor_dims[fac];
    }
    return idx;
  };

  Matrix out = Matrix::Zero(keep_dim, keep_dim);
  for (Eigen::Index i = 0; i < keep_dim; ++i) {
    for (Eigen::Index j = 0; j < keep_dim; ++j) {
      Complex acc(0.0, 0.0);
      for (Eigen::Index t = 0; t < trace_dim; ++t) {
        acc += rho(full_index(i, t), full_index(j, t));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

DenseOperator partial_trace(const DenseOperator& rho,
                            const std::vector<Eigen::Index>& factor_dims,
                            const std::vector<int>& keep) {
  return DenseOperator(partial_trace(rho.mat, factor_dims, keep),
                       rho.basis_tag);
}

Matrix expm_hermitian_generator(const Matrix& h, double t) {
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("expm_hermitian_generator: non-Hermitian input");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  CVector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    phases(k) = std::exp(Complex(0.0, -t * es.eigenvalues()(k)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Matrix sqrt_psd(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

double fidelity(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  Matrix ra = sqrt_psd(a);
  Matrix inner = sqrt_psd(ra * b * ra);
  double f = inner.trace().real();
  return f * f;
}

}  // namespace invenc
