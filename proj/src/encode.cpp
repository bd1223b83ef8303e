// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "invenc/encode.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace invenc {

namespace {

void require_valid_block(const Matrix& block, int expected_dim,
                         const std::string& what) {
  if (block.rows() != expected_dim || block.cols() != expected_dim) {
    std::ostringstream msg;
    msg << what << ": block must be " << expected_dim << "x" << expected_dim
        << ", got " << block.rows() << "x" << block.cols();
    throw std::invalid_argument(msg.str());
  }
  if ((block - block.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument(what + ": block not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(block, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument(what + ": block not positive semidefinite");
  }
}

void require_trace_normalized(const std::map<int, Matrix>& blocks,
                              const std::string& what) {
  Complex total(0.0, 0.0);
  for (const auto& [i, b] : blocks) total += b.trace();
  if (std::abs(total - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument(what + ": blocks must be jointly trace-normalized");
  }
}

}  // namespace

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Massive: return "massive";
    case Scheme::Massless: return "massless";
    case Scheme::Dyon: return "dyon";
    case Scheme::TotalMomentum: return "total-momentum";
  }
  return "unknown";
}

Matrix InvariantState::density_schur() const {
  const Eigen::Index dim = basis->total_dim();
  Matrix rho = Matrix::Zero(dim, dim);
  for (const auto& [i, block] : blocks) {
    const int dl = basis->dim_irrep[i];
    const int dv = basis->dim_mult[i];
    const Eigen::Index off = basis->block_offset(i);
    rho.block(off, off, static_cast<Eigen::Index>(dl) * dv,
              static_cast<Eigen::Index>(dl) * dv) =
        (1.0 / dl) * kron(Matrix::Identity(dl, dl), block);
  }
  return rho;
}

Matrix InvariantState::density_product() const {
  return basis->to_product(density_schur());
}

int DyonConfiguration::pairwise_helicity(int a, int b) const {
  return electric.at(a) * magnetic.at(b) - electric.at(b) * magnetic.at(a);
}

int DyonConfiguration::total_pairwise_helicity() const {
  int total = 0;
  for (int a = 1; a < n_particles(); ++a) {
    for (int b = 0; b < a; ++b) total += pairwise_helicity(a, b);
  }
  return total;
}

std::vector<std::pair<int, int>> DyonConfiguration::charge_multiset() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_particles(); ++i) {
    out.emplace_back(electric[i], magnetic[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DyonConfiguration build_dyon_cell(int bit, const DyonCellParams& params) {
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("build_dyon_cell: bit must be 0 or 1");
  }
  const FourMomentum pe =
      FourMomentum::massive(params.mass_electric, params.momentum_electric);
  const FourMomentum pg =
      FourMomentum::massive(params.mass_magnetic, params.momentum_magnetic);
  DyonConfiguration cell;
  // Pair (1,2) carries the bit, pair (3,4) carries its complement, so the
  // cell's total pairwise helicity is zero for either value.
  const bool electric_first = (bit == 1);
  auto add = [&](bool is_electric) {
    cell.electric.push_back(is_electric ? 1 : 0);
    cell.magnetic.push_back(is_electric ? 0 : 1);
    cell.momenta.push_back(is_electric ? pe : pg);
    cell.spins.push_back(params.spin);
  };
  add(electric_first);
  add(!electric_first);
  add(!electric_first);
  add(electric_first);
  return cell;
}

DyonEncoding encode_dyon_qubit(const DyonConfiguration& cell_a,
                               const DyonConfiguration& cell_b, Complex zeta,
                               Complex zeta_prime) {
  const double norm =
      std::abs(zeta) * std::abs(zeta) + std::abs(zeta_prime) * std::abs(zeta_prime);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("encode_dyon_qubit: |zeta|^2+|zeta'|^2 != 1");
  }
  if (cell_a.charge_multiset() != cell_b.charge_multiset()) {
    throw std::invalid_argument(
        "encode_dyon_qubit: superselection violation, branches carry "
        "different total charge");
  }
  DyonEncoding enc;
  enc.branches = {cell_a, cell_b};
  enc.amplitudes.amps = CVector(2);
  enc.amplitudes.amps << zeta, zeta_prime;
  enc.amplitudes.basis_tag = "which-way";
  const int qa = cell_a.total_pairwise_helicity();
  const int qb = cell_b.total_pairwise_helicity();
  if (qa != qb) {
    enc.invariant = false;
    std::ostringstream msg;
    msg << "branch pairwise-helicity sums differ: " << qa << " vs " << qb
        << "; which-way coherence is not Lorentz invariant";
    enc.flag = msg.str();
  }
  return enc;
}

InvariantState encode_massive_equal_momentum(
    std::shared_ptr<const SchurBasis> basis, const FourMomentum& p,
    const std::map<double, Matrix>& blocks_by_spin) {
  if (p.is_massless()) {
    throw std::invalid_argument(
        "encode_massive_equal_momentum: momentum must be massive");
  }
  if (basis->group != SchurBasis::Group::SU2) {
    throw std::invalid_argument(
        "encode_massive_equal_momentum: expected an SU(2) Schur basis");
  }
  InvariantState state;
  state.scheme = Scheme::Massive;
  state.basis = basis;
  state.momenta.assign(basis->n_sites, p);
  for (const auto& [total_spin, block] : blocks_by_spin) {
    const int irrep = basis->find_irrep(total_spin);
    if (irrep < 0) {
      throw std::invalid_argument(
          "encode_massive_equal_momentum: no irrep with total spin " +
          std::to_string(total_spin));
    }
    require_valid_block(block, basis->dim_mult[irrep],
                        "encode_massive_equal_momentum");
    state.blocks[irrep] = block;
  }
  require_trace_normalized(state.blocks, "encode_massive_equal_momentum");
  return state;
}

InvariantState encode_massless_helicity_sum(
    std::shared_ptr<const SchurBasis> basis, const FourMomentum& p,
    const std::map<int, Matrix>& blocks_by_helicity_sum) {
  if (!p.is_massless()) {
    throw std::invalid_argument(
        "encode_massless_helicity_sum: momentum must be massless");
  }
  if (basis->group != SchurBasis::Group::U1) {
    throw std::invalid_argument(
        "encode_massless_helicity_sum: expected a U(1) Schur basis");
  }
  InvariantState state;
  state.scheme = Scheme::Massless;
  state.basis = basis;
  state.momenta.assign(basis->n_sites, p);
  for (const auto& [h, block] : blocks_by_helicity_sum) {
    const int irrep = basis->find_irrep(h);
    if (irrep < 0) {
      throw std::invalid_argument(
          "encode_massless_helicity_sum: no helicity-sum block h=" +
          std::to_string(h));
    }
    require_valid_block(block, basis->dim_mult[irrep],
                        "encode_massless_helicity_sum");
    state.blocks[irrep] = block;
  }
  require_trace_normalized(state.blocks, "encode_massless_helicity_sum");
  return state;
}

InvariantState encode_total_momentum(const TotalMomentumLabel& label,
                                     const Matrix& block) {
  if (label.mandelstam <= 0.0) {
    throw std::invalid_argument("encode_total_momentum: s must be positive");
  }
  label.total_momentum.validate();
  if (std::abs(label.total_momentum.mass * label.total_momentum.mass -
               label.mandelstam) >
      1e-9 * label.total_momentum.energy() * label.total_momentum.energy()) {
    throw std::invalid_argument(
        "encode_total_momentum: total momentum not on the sqrt(s) mass shell");
  }
  const int full_dim = static_cast<int>(std::round(2.0 * label.total_spin)) + 1;
  const int d_irrep = label.dim_irrep_restriction > 0
                          ? label.dim_irrep_restriction
                          : full_dim;
  if (d_irrep > full_dim) {
    throw std::invalid_argument(
        "encode_total_momentum: irrep restriction exceeds 2J+1");
  }
  const int d_mult = static_cast<int>(label.multiplicity_labels.size());
  if (d_mult < 1) {
    throw std::invalid_argument(
        "encode_total_momentum: need at least one multiplicity label");
  }
  require_valid_block(block, d_mult, "encode_total_momentum");
  if (std::abs(block.trace() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("encode_total_momentum: block trace != 1");
  }

  InvariantState state;
  state.scheme = Scheme::TotalMomentum;
  state.basis = std::make_shared<SchurBasis>(
      make_abstract_basis(label.total_spin, d_irrep, d_mult));
  state.blocks[0] = block;
  state.momenta = {label.total_momentum};
  state.mandelstam = label.mandelstam;
  state.total_spin = label.total_spin;
  return state;
}

Matrix decode_multiplicity(const Matrix& state_schur, const SchurBasis& basis,
                           int irrep) {
  const int dl = basis.dim_irrep.at(irrep);
  const int dv = basis.dim_mult.at(irrep);
  const Eigen::Index off = basis.block_offset(irrep);
  Matrix out = Matrix::Zero(dv, dv);
  for (int mu1 = 0; mu1 < dv; ++mu1) {
    for (int mu2 = 0; mu2 < dv; ++mu2) {
      Complex acc(0.0, 0.0);
      for (int r = 0; r < dl; ++r) {
        acc += state_schur(off + static_cast<Eigen::Index>(r) * dv + mu1,
                           off + static_cast<Eigen::Index>(r) * dv + mu2);
      }
      out(mu1, mu2) = acc;
    }
  }
  return out;
}

}  // namespace invenc
