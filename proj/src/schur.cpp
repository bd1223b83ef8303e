// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "invenc/schur.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "invenc/little_group.hpp"

namespace invenc {

namespace {

struct CouplingIrrep {
  double total_spin;
  std::vector<double> path;  // intermediate spins after each site
  std::vector<CVector> vectors;  // one per M = J..-J, in the product basis
};

}  // namespace

Eigen::Index SchurBasis::block_offset(int irrep) const {
  if (irrep < 0 || irrep >= static_cast<int>(irrep_labels.size())) {
    throw std::out_of_range("SchurBasis: irrep index out of range");
  }
  Eigen::Index off = 0;
  for (int i = 0; i < irrep; ++i) {
    off += static_cast<Eigen::Index>(dim_irrep[i]) * dim_mult[i];
  }
  return off;
}

int SchurBasis::find_irrep(double label) const {
  for (std::size_t i = 0; i < irrep_labels.size(); ++i) {
    if (std::abs(irrep_labels[i] - label) < 1e-9) return static_cast<int>(i);
  }
  return -1;
}

Matrix SchurBasis::to_schur(const Matrix& product_op) const {
  return basis_matrix.adjoint() * product_op * basis_matrix;
}

Matrix SchurBasis::to_product(const Matrix& schur_op) const {
  return basis_matrix * schur_op * basis_matrix.adjoint();
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long acc = 1;
  for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return static_cast<int>(acc);
}

int su2_multiplicity(int n_sites, double total_spin) {
  const double k_exact = n_sites / 2.0 - total_spin;
  const int k = static_cast<int>(std::round(k_exact));
  // Total spin must match the parity of N/2 and lie in [0, N/2].
  if (total_spin < 0.0 || std::abs(k_exact - k) > 1e-9 || k < 0 ||
      k > n_sites) {
    return 0;
  }
  return binomial(n_sites, k) - binomial(n_sites, k - 1);
}

int u1_multiplicity(int n_sites, int helicity_sum) {
  if ((n_sites + helicity_sum) % 2 != 0 || std::abs(helicity_sum) > n_sites) {
    return 0;
  }
  return binomial(n_sites, (n_sites + helicity_sum) / 2);
}

SchurBasis build_schur_basis_su2(int n_sites) {
  if (n_sites < 1 || n_sites > 10) {
    throw std::invalid_argument("build_schur_basis_su2: N must be in [1,10]");
  }
  // Seed: a single spin-1/2 with basis |up>, |down>.
  std::vector<CouplingIrrep> irreps;
  {
    CouplingIrrep seed;
    seed.total_spin = 0.5;
    seed.path = {0.5};
    CVector up = CVector::Zero(2), down = CVector::Zero(2);
    up(0) = 1.0;
    down(1) = 1.0;
    seed.vectors = {up, down};
    irreps.push_back(std::move(seed));
  }

  for (int site = 1; site < n_sites; ++site) {
    const Eigen::Index dim = Eigen::Index{1} << (site + 1);
    std::vector<CouplingIrrep> next;
    for (const CouplingIrrep& cur : irreps) {
      const double j1 = cur.total_spin;
      auto vec_at = [&](double m) -> const CVector& {
        // index 0 corresponds to M = j1, descending.
        return cur.vectors[static_cast<std::size_t>(std::round(j1 - m))];
      };
      auto kron_site = [&](const CVector& v, int local) {
        CVector out = CVector::Zero(dim);
        for (Eigen::Index i = 0; i < v.size(); ++i) out(2 * i + local) = v(i);
        return out;
      };
      // J = j1 + 1/2 branch.
      {
        CouplingIrrep up;
        up.total_spin = j1 + 0.5;
        up.path = cur.path;
        up.path.push_back(up.total_spin);
        for (double m = up.total_spin; m > -up.total_spin - 0.25; m -= 1.0) {
          const double c_up = std::sqrt((j1 + m + 0.5) / (2.0 * j1 + 1.0));
          const double c_dn = std::sqrt((j1 - m + 0.5) / (2.0 * j1 + 1.0));
          CVector v = CVector::Zero(dim);
          if (m - 0.5 >= -j1 - 0.25) v += c_up * kron_site(vec_at(m - 0.5), 0);
          if (m + 0.5 <= j1 + 0.25) v += c_dn * kron_site(vec_at(m + 0.5), 1);
          up.vectors.push_back(std::move(v));
        }
        next.push_back(std::move(up));
      }
      // J = j1 - 1/2 branch.
      if (j1 > 0.25) {
        CouplingIrrep down;
        down.total_spin = j1 - 0.5;
        down.path = cur.path;
        down.path.push_back(down.total_spin);
        for (double m = down.total_spin; m > -down.total_spin - 0.25;
             m -= 1.0) {
          const double c_up = -std::sqrt((j1 - m + 0.5) / (2.0 * j1 + 1.0));
          const double c_dn = std::sqrt((j1 + m + 0.5) / (2.0 * j1 + 1.0));
          CVector v = c_up * kron_site(vec_at(m - 0.5), 0) +
                      c_dn * kron_site(vec_at(m + 0.5), 1);
          down.vectors.push_back(std::move(v));
        }
        next.push_back(std::move(down));
      }
    }
    irreps = std::move(next);
  }

  // Group by total spin (ascending), paths sorted lexicographically.
  std::sort(irreps.begin(), irreps.end(),
            [](const CouplingIrrep& a, const CouplingIrrep& b) {
              if (a.total_spin != b.total_spin)
                return a.total_spin < b.total_spin;
              return a.path < b.path;
            });

  SchurBasis basis;
  basis.group = SchurBasis::Group::SU2;
  basis.n_sites = n_sites;
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  basis.basis_matrix.resize(dim, dim);

  Eigen::Index col = 0;
  std::size_t k = 0;
  while (k < irreps.size()) {
    const double j = irreps[k].total_spin;
    std::size_t end = k;
    while (end < irreps.size() && irreps[end].total_spin == j) ++end;
    const int d_irrep = static_cast<int>(std::round(2.0 * j)) + 1;
    const int d_mult = static_cast<int>(end - k);
    basis.irrep_labels.push_back(j);
    basis.dim_irrep.push_back(d_irrep);
    basis.dim_mult.push_back(d_mult);
    for (int r = 0; r < d_irrep; ++r) {
      for (int mu = 0; mu < d_mult; ++mu) {
        basis.basis_matrix.col(col++) = irreps[k + mu].vectors[r];
      }
    }
    k = end;
  }
  return basis;
}

SchurBasis build_schur_basis_u1(int n_sites) {
  if (n_sites < 1 || n_sites > 16) {
    throw std::invalid_argument("build_schur_basis_u1: N must be in [1,16]");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  SchurBasis basis;
  basis.group = SchurBasis::Group::U1;
  basis.n_sites = n_sites;
  basis.basis_matrix = Matrix::Zero(dim, dim);

  Eigen::Index col = 0;
  for (int h = -n_sites; h <= n_sites; h += 2) {
    const int d_mult = u1_multiplicity(n_sites, h);
    if (d_mult == 0) continue;
    basis.irrep_labels.push_back(h);
    basis.dim_irrep.push_back(1);
    basis.dim_mult.push_back(d_mult);
    // Bit 0 encodes helicity +1; h = N - 2 * popcount.
    for (Eigen::Index b = 0; b < dim; ++b) {
      const int ones = static_cast<int>(__builtin_popcountll(b));
      if (n_sites - 2 * ones == h) basis.basis_matrix(b, col++) = 1.0;
    }
  }
  return basis;
}

SchurBasis make_abstract_basis(double label, int d_irrep, int d_mult) {
  if (d_irrep < 1 || d_mult < 1) {
    throw std::invalid_argument("make_abstract_basis: dimensions must be >= 1");
  }
  SchurBasis basis;
  basis.group = SchurBasis::Group::Abstract;
  basis.n_sites = 0;
  basis.irrep_labels = {label};
  basis.dim_irrep = {d_irrep};
  basis.dim_mult = {d_mult};
  basis.basis_matrix = Matrix::Identity(static_cast<Eigen::Index>(d_irrep) * d_mult,
                                        static_cast<Eigen::Index>(d_irrep) * d_mult);
  return basis;
}

PiOperator pi_multiplicity(const SchurBasis& basis, int irrep, int mu1,
                           int mu2) {
  const int d_mult = basis.dim_mult.at(irrep);
  if (mu1 < 0 || mu1 >= d_mult || mu2 < 0 || mu2 >= d_mult) {
    throw std::out_of_range("pi_multiplicity: multiplicity index out of range");
  }
  const Eigen::Index off = basis.block_offset(irrep);
  Matrix m = Matrix::Zero(basis.total_dim(), basis.total_dim());
  for (int r = 0; r < basis.dim_irrep[irrep]; ++r) {
    m(off + static_cast<Eigen::Index>(r) * d_mult + mu1,
      off + static_cast<Eigen::Index>(r) * d_mult + mu2) = 1.0;
  }
  PiOperator pi;
  pi.irrep = irrep;
  pi.kind = PiOperator::Kind::Multiplicity;
  pi.op = DenseOperator(std::move(m), "schur");
  return pi;
}

PiOperator pi_irrep(const SchurBasis& basis, int irrep, int r1, int r2) {
  const int d_irrep = basis.dim_irrep.at(irrep);
  if (r1 < 0 || r1 >= d_irrep || r2 < 0 || r2 >= d_irrep) {
    throw std::out_of_range("pi_irrep: irrep-space index out of range");
  }
  const int d_mult = basis.dim_mult[irrep];
  const Eigen::Index off = basis.block_offset(irrep);
  Matrix m = Matrix::Zero(basis.total_dim(), basis.total_dim());
  for (int mu = 0; mu < d_mult; ++mu) {
    m(off + static_cast<Eigen::Index>(r1) * d_mult + mu,
      off + static_cast<Eigen::Index>(r2) * d_mult + mu) = 1.0;
  }
  PiOperator pi;
  pi.irrep = irrep;
  pi.kind = PiOperator::Kind::IrrepSpace;
  pi.op = DenseOperator(std::move(m), "schur");
  return pi;
}

std::vector<Matrix> decompose_collective_unitary(const SchurBasis& basis,
                                                 const Matrix& u_single) {
  if (u_single.rows() != 2 || u_single.cols() != 2 ||
      (u_single * u_single.adjoint() - Matrix::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() > 1e-10) {
    throw std::invalid_argument(
        "decompose_collective_unitary: expected a 2x2 unitary");
  }
  Matrix collective = Matrix::Identity(1, 1);
  for (int i = 0; i < basis.n_sites; ++i) collective = kron(collective, u_single);
  Matrix b = basis.to_schur(collective);

  std::vector<Matrix> blocks;
  Matrix reconstructed = Matrix::Zero(b.rows(), b.cols());
  for (std::size_t i = 0; i < basis.irrep_labels.size(); ++i) {
    const Eigen::Index off = basis.block_offset(static_cast<int>(i));
    const int dl = basis.dim_irrep[i];
    const int dv = basis.dim_mult[i];
    Matrix d = Matrix::Zero(dl, dl);
    for (int r1 = 0; r1 < dl; ++r1) {
      for (int r2 = 0; r2 < dl; ++r2) {
        Complex acc(0.0, 0.0);
        for (int mu = 0; mu < dv; ++mu) {
          acc += b(off + static_cast<Eigen::Index>(r1) * dv + mu,
                   off + static_cast<Eigen::Index>(r2) * dv + mu);
        }
        d(r1, r2) = acc / static_cast<double>(dv);
      }
    }
    reconstructed.block(off, off, static_cast<Eigen::Index>(dl) * dv,
                        static_cast<Eigen::Index>(dl) * dv) =
        kron(d, Matrix::Identity(dv, dv));
    blocks.push_back(std::move(d));
  }
  const double residual = (b - reconstructed).cwiseAbs().maxCoeff();
  if (residual > 1e-8) {
    throw std::runtime_error(
        "decompose_collective_unitary: off-block residual " +
        std::to_string(residual));
  }
  return blocks;
}

DenseOperator tensor_permutation_operator(int n_sites, int local_dim,
                                          const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n_sites) {
    throw std::invalid_argument("tensor_permutation_operator: bad permutation");
  }
  std::vector<bool> seen(n_sites, false);
  for (int target : perm) {
    if (target < 0 || target >= n_sites || seen[target]) {
      throw std::invalid_argument(
          "tensor_permutation_operator: bad permutation");
    }
    seen[target] = true;
  }
  Eigen::Index dim = 1;
  for (int i = 0; i < n_sites; ++i) dim *= local_dim;
  Matrix m = Matrix::Zero(dim, dim);
  std::vector<Eigen::Index> digits(n_sites);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    Eigen::Index rest = idx;
    for (int k = n_sites - 1; k >= 0; --k) {
      digits[k] = rest % local_dim;
      rest /= local_dim;
    }
    Eigen::Index target = 0;
    std::vector<Eigen::Index> moved(n_sites);
    for (int k = 0; k < n_sites; ++k) moved[perm[k]] = digits[k];
    for (int k = 0; k < n_sites; ++k) target = target * local_dim + moved[k];
    m(target, idx) = 1.0;
  }
  return DenseOperator(std::move(m), "product");
}

Matrix total_spin_casimir(int n_sites) {
  const SpinRep half = spin_rep(0.5);
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  Matrix jx = Matrix::Zero(dim, dim), jy = jx, jz = jx;
  for (int site = 0; site < n_sites; ++site) {
    Matrix gx = Matrix::Identity(1, 1), gy = gx, gz = gx;
    for (int k = 0; k < n_sites; ++k) {
      const bool here = (k == site);
      gx = kron(gx, here ? half.jx : Matrix::Identity(2, 2));
      gy = kron(gy, here ? half.jy : Matrix::Identity(2, 2));
      gz = kron(gz, here ? half.jz : Matrix::Identity(2, 2));
    }
    jx += gx;
    jy += gy;
    jz += gz;
  }
  return jx * jx + jy * jy + jz * jz;
}

}  // namespace invenc
