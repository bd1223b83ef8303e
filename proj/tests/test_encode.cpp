// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <memory>
#include <random>

#include "invenc/encode.hpp"

using namespace invenc;

namespace {

Matrix random_block(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  Matrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("three-qubit spin encoding assembles and decodes exactly") {
  std::mt19937_64 rng(41);
  auto basis = std::make_shared<SchurBasis>(build_schur_basis_su2(3));
  const FourMomentum p = FourMomentum::massive(1.0, {0.0, 0.0, 1.0});

  // N=3 qubits: J=1/2 has two coupling paths, J=3/2 one.
  const Matrix logical = random_block(2, rng);
  const InvariantState state =
      encode_massive_equal_momentum(basis, p, {{0.5, logical}});

  const Matrix rho = state.density_product();
  DenseOperator(rho).require_density_matrix(1e-10);

  const Matrix rho_schur = state.basis->to_schur(rho);
  const int half = state.basis->find_irrep(0.5);
  CHECK((decode_multiplicity(rho_schur, *state.basis, half) - logical)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  const int three_half = state.basis->find_irrep(1.5);
  CHECK(decode_multiplicity(rho_schur, *state.basis, three_half)
            .cwiseAbs()
            .maxCoeff() < 1e-13);

  // The irrep factor of the populated block is maximally mixed: both
  // r-diagonal sub-blocks equal logical/2 and r-off-diagonal parts vanish.
  const Eigen::Index off = state.basis->block_offset(half);
  CHECK((rho_schur.block(off, off, 2, 2) - 0.5 * logical)
            .cwiseAbs()
            .maxCoeff() < 1e-13);
  CHECK((rho_schur.block(off + 2, off + 2, 2, 2) - 0.5 * logical)
            .cwiseAbs()
            .maxCoeff() < 1e-13);
  CHECK(rho_schur.block(off, off + 2, 2, 2).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("spin encoder rejects malformed inputs") {
  std::mt19937_64 rng(43);
  auto basis = std::make_shared<SchurBasis>(build_schur_basis_su2(3));
  const FourMomentum p = FourMomentum::massive(1.0, {0.0, 0.0, 1.0});

  // Wrong block dimension for the irrep.
  CHECK_THROWS_AS(
      encode_massive_equal_momentum(basis, p, {{0.5, random_block(3, rng)}}),
      std::invalid_argument);
  // Absent irrep label.
  CHECK_THROWS_AS(
      encode_massive_equal_momentum(basis, p, {{2.5, random_block(2, rng)}}),
      std::invalid_argument);
  // Not trace-normalized across blocks.
  CHECK_THROWS_AS(encode_massive_equal_momentum(
                      basis, p,
                      {{0.5, random_block(2, rng)},
                       {1.5, random_block(1, rng)}}),
                  std::invalid_argument);
  // Non-positive block.
  Matrix bad = Matrix::Zero(2, 2);
  bad.diagonal() << 1.5, -0.5;
  CHECK_THROWS_AS(encode_massive_equal_momentum(basis, p, {{0.5, bad}}),
                  std::invalid_argument);
  // Massless momentum with the massive scheme.
  CHECK_THROWS_AS(
      encode_massive_equal_momentum(basis, FourMomentum::massless(1.0, {0, 0, 1}),
                                    {{0.5, random_block(2, rng)}}),
      std::invalid_argument);
  // U(1) basis with the massive scheme.
  auto u1 = std::make_shared<SchurBasis>(build_schur_basis_u1(3));
  CHECK_THROWS_AS(
      encode_massive_equal_momentum(u1, p, {{0.5, random_block(2, rng)}}),
      std::invalid_argument);
}

TEST_CASE("helicity-sum encoding on three photons") {
  std::mt19937_64 rng(47);
  auto basis = std::make_shared<SchurBasis>(build_schur_basis_u1(3));
  const FourMomentum p = FourMomentum::massless(2.0, {0.0, 0.0, 1.0});
  const Matrix logical = random_block(3, rng);  // h=+1 sector has D_V=3
  const InvariantState state =
      encode_massless_helicity_sum(basis, p, {{1, logical}});
  const Matrix rho_schur = basis->to_schur(state.density_product());
  const int sector = basis->find_irrep(1.0);
  CHECK((decode_multiplicity(rho_schur, *basis, sector) - logical)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK_THROWS_AS(encode_massless_helicity_sum(basis, p, {{2, logical}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      encode_massless_helicity_sum(
          basis, FourMomentum::massive(1.0, {0, 0, 1}), {{1, logical}}),
      std::invalid_argument);
}

TEST_CASE("dyon cells carry opposite pair charges and zero total") {
  DyonCellParams params;
  params.momentum_electric = {0.0, 0.0, 0.3};
  params.momentum_magnetic = {0.0, 0.0, -0.3};
  const DyonConfiguration one = build_dyon_cell(1, params);
  const DyonConfiguration zero = build_dyon_cell(0, params);

  REQUIRE(one.n_particles() == 4);
  CHECK(one.pairwise_helicity(0, 1) == 1);
  CHECK(one.pairwise_helicity(2, 3) == -1);
  CHECK(zero.pairwise_helicity(0, 1) == -1);
  CHECK(zero.pairwise_helicity(2, 3) == 1);
  CHECK(one.total_pairwise_helicity() == 0);
  CHECK(zero.total_pairwise_helicity() == 0);
  CHECK(one.charge_multiset() == zero.charge_multiset());
  CHECK(one.pairwise_helicity(1, 0) == -one.pairwise_helicity(0, 1));

  CHECK_THROWS_AS(build_dyon_cell(2, params), std::invalid_argument);
}

TEST_CASE("dyon qubit encoding validates amplitudes and superselection") {
  DyonCellParams params;
  const DyonConfiguration a = build_dyon_cell(1, params);
  const DyonConfiguration b = build_dyon_cell(0, params);
  const double r = 1.0 / std::sqrt(2.0);

  const DyonEncoding enc = encode_dyon_qubit(a, b, Complex(r, 0), Complex(0, r));
  CHECK(enc.invariant);
  CHECK(enc.flag.empty());
  CHECK(enc.amplitudes.is_normalized());

  CHECK_THROWS_AS(encode_dyon_qubit(a, b, Complex(1, 0), Complex(1, 0)),
                  std::invalid_argument);

  // Different charge content is a superselection violation, not a warning.
  DyonConfiguration c = a;
  c.electric[0] = 2;
  CHECK_THROWS_AS(encode_dyon_qubit(a, c, Complex(r, 0), Complex(r, 0)),
                  std::invalid_argument);
}

TEST_CASE("branches with unequal pairwise-helicity sums are flagged") {
  DyonCellParams params;
  const DyonConfiguration a = build_dyon_cell(1, params);
  // Same charge multiset, alternating order: the q sums no longer cancel.
  DyonConfiguration b = a;
  b.electric = {1, 0, 1, 0};
  b.magnetic = {0, 1, 0, 1};
  REQUIRE(b.charge_multiset() == a.charge_multiset());
  REQUIRE(b.total_pairwise_helicity() == -2);

  const double r = 1.0 / std::sqrt(2.0);
  const DyonEncoding enc = encode_dyon_qubit(a, b, Complex(r, 0), Complex(r, 0));
  CHECK_FALSE(enc.invariant);
  CHECK(enc.flag.find("not Lorentz invariant") != std::string::npos);
}

TEST_CASE("total-momentum encoding validates the label") {
  std::mt19937_64 rng(53);
  TotalMomentumLabel label;
  label.mandelstam = 4.0;
  label.total_spin = 1.0;
  label.total_momentum = FourMomentum::massive(2.0, {0.0, 0.0, 1.0});
  label.multiplicity_labels = {{1, -1}, {-1, 1}, {1, 1}};

  const Matrix block = random_block(3, rng);
  const InvariantState state = encode_total_momentum(label, block);
  CHECK(state.basis->dim_irrep.front() == 3);
  CHECK(state.basis->dim_mult.front() == 3);
  CHECK(state.mandelstam == 4.0);
  const Matrix rho = state.density_schur();
  CHECK(std::abs(rho.trace() - Complex(1, 0)) < 1e-12);
  CHECK((decode_multiplicity(rho, *state.basis, 0) - block)
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  TotalMomentumLabel bad = label;
  bad.mandelstam = -1.0;
  CHECK_THROWS_AS(encode_total_momentum(bad, block), std::invalid_argument);

  bad = label;
  bad.total_momentum = FourMomentum::massive(1.0, {0.0, 0.0, 1.0});
  CHECK_THROWS_AS(encode_total_momentum(bad, block), std::invalid_argument);

  bad = label;
  bad.dim_irrep_restriction = 5;
  CHECK_THROWS_AS(encode_total_momentum(bad, block), std::invalid_argument);

  bad = label;
  bad.multiplicity_labels.clear();
  CHECK_THROWS_AS(encode_total_momentum(bad, block), std::invalid_argument);
}

TEST_CASE("maximally mixed logical blocks give the expected product state") {
  auto basis = std::make_shared<SchurBasis>(build_schur_basis_su2(2));
  const FourMomentum p = FourMomentum::massive(1.0, {0.0, 0.0, 0.5});
  // Weight blocks by D_L * D_V / 2^N: the result is maximally mixed overall.
  std::map<double, Matrix> blocks;
  blocks[0.0] = (1.0 / 4.0) * Matrix::Identity(1, 1);
  blocks[1.0] = (3.0 / 4.0) * Matrix::Identity(1, 1);
  const InvariantState state = encode_massive_equal_momentum(basis, p, blocks);
  CHECK((state.density_product() - 0.25 * Matrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-13);
}
