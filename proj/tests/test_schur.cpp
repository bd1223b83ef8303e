// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <map>
#include <random>

#include "invenc/little_group.hpp"
#include "invenc/schur.hpp"

using namespace invenc;

namespace {

// Independent multiplicity oracle: diagonalize the collective Casimir and
// count eigenvalues J(J+1), then divide by the irrep dimension 2J+1.
std::map<double, int> casimir_multiplicities(int n_sites) {
  const Matrix c2 = total_spin_casimir(n_sites);
  Eigen::SelfAdjointEigenSolver<Matrix> es(c2, Eigen::EigenvaluesOnly);
  std::map<double, int> counts;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    // Solve J(J+1) = ev for half-integer J.
    const double ev = es.eigenvalues()(k);
    const double j = 0.5 * (std::sqrt(1.0 + 4.0 * ev) - 1.0);
    const double j_rounded = std::round(2.0 * j) / 2.0;
    REQUIRE(std::abs(j - j_rounded) < 1e-8);
    counts[j_rounded] += 1;
  }
  std::map<double, int> mult;
  for (const auto& [j, eigenstates] : counts) {
    const int dim = static_cast<int>(std::round(2 * j)) + 1;
    REQUIRE(eigenstates % dim == 0);
    mult[j] = eigenstates / dim;
  }
  return mult;
}

Matrix random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Vector4d q(g(rng), g(rng), g(rng), g(rng));
  q.normalize();
  Matrix u(2, 2);
  u << Complex(q(0), q(1)), Complex(q(2), q(3)), Complex(-q(2), q(3)),
      Complex(q(0), -q(1));
  return u;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(4, 7) == 0);
}

TEST_CASE("closed-form multiplicities match the Casimir spectrum") {
  for (int n = 1; n <= 6; ++n) {
    const auto oracle = casimir_multiplicities(n);
    int total = 0;
    for (const auto& [j, mult] : oracle) {
      CHECK(su2_multiplicity(n, j) == mult);
      total += mult * (static_cast<int>(std::round(2 * j)) + 1);
    }
    CHECK(total == (1 << n));
  }
  CHECK(su2_multiplicity(4, 0.0) == 2);
  CHECK(su2_multiplicity(4, 1.0) == 3);
  CHECK(su2_multiplicity(4, 2.0) == 1);
  CHECK(su2_multiplicity(4, 0.5) == 0);
}

TEST_CASE("helicity-sum multiplicities count the strings") {
  for (int n = 1; n <= 12; ++n) {
    std::map<int, int> counts;
    for (int b = 0; b < (1 << n); ++b) {
      counts[n - 2 * __builtin_popcount(b)] += 1;
    }
    int total = 0;
    for (const auto& [h, mult] : counts) {
      CHECK(u1_multiplicity(n, h) == mult);
      total += mult;
    }
    CHECK(total == (1 << n));
    CHECK(u1_multiplicity(n, n + 2) == 0);
    CHECK(u1_multiplicity(n, n - 1) == 0);  // parity-forbidden
  }
}

TEST_CASE("two-site coupling produces the standard singlet and triplet") {
  const SchurBasis basis = build_schur_basis_su2(2);
  REQUIRE(basis.irrep_labels == std::vector<double>{0.0, 1.0});
  REQUIRE(basis.dim_irrep == std::vector<int>{1, 3});
  REQUIRE(basis.dim_mult == std::vector<int>{1, 1});

  // Singlet column: (|01> - |10>)/sqrt(2) with bit 0 = m=+1/2 on the left.
  CVector singlet = basis.basis_matrix.col(0);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(singlet(0)) < 1e-14);
  CHECK(std::abs(singlet(1) - Complex(r, 0)) < 1e-14);
  CHECK(std::abs(singlet(2) - Complex(-r, 0)) < 1e-14);
  CHECK(std::abs(singlet(3)) < 1e-14);

  // Triplet m=0 column is the symmetric combination.
  CVector triplet0 = basis.basis_matrix.col(2);
  CHECK(std::abs(triplet0(1) - Complex(r, 0)) < 1e-14);
  CHECK(std::abs(triplet0(2) - Complex(r, 0)) < 1e-14);
}

TEST_CASE("coupled basis is unitary and block-diagonalizes the Casimir") {
  for (int n = 2; n <= 5; ++n) {
    const SchurBasis basis = build_schur_basis_su2(n);
    const Eigen::Index dim = basis.total_dim();
    REQUIRE(dim == (1 << n));
    CHECK((basis.basis_matrix.adjoint() * basis.basis_matrix -
           Matrix::Identity(dim, dim))
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    const Matrix c2 = basis.to_schur(total_spin_casimir(n));
    for (std::size_t i = 0; i < basis.irrep_labels.size(); ++i) {
      const double j = basis.irrep_labels[i];
      const Eigen::Index off = basis.block_offset(static_cast<int>(i));
      const Eigen::Index sz =
          static_cast<Eigen::Index>(basis.dim_irrep[i]) * basis.dim_mult[i];
      const Matrix block = c2.block(off, off, sz, sz);
      CHECK((block - j * (j + 1.0) * Matrix::Identity(sz, sz))
                .cwiseAbs()
                .maxCoeff() < 1e-12);
    }
    // Everything off the diagonal blocks vanishes.
    Matrix expected = Matrix::Zero(dim, dim);
    for (std::size_t i = 0; i < basis.irrep_labels.size(); ++i) {
      const double j = basis.irrep_labels[i];
      const Eigen::Index off = basis.block_offset(static_cast<int>(i));
      const Eigen::Index sz =
          static_cast<Eigen::Index>(basis.dim_irrep[i]) * basis.dim_mult[i];
      expected.block(off, off, sz, sz) =
          j * (j + 1.0) * Matrix::Identity(sz, sz);
    }
    CHECK((c2 - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("collective unitaries decompose into irrep factors") {
  std::mt19937_64 rng(31);
  for (int n : {1, 2, 3, 4}) {
    const SchurBasis basis = build_schur_basis_su2(n);
    const Matrix u = random_su2(rng);
    const auto factors = decompose_collective_unitary(basis, u);
    REQUIRE(factors.size() == basis.irrep_labels.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      CHECK(factors[i].rows() == basis.dim_irrep[i]);
      CHECK((factors[i] * factors[i].adjoint() -
             Matrix::Identity(factors[i].rows(), factors[i].rows()))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
    }
    if (n == 1) {
      CHECK((factors[0] - u).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("helicity basis groups strings by their sum") {
  const SchurBasis basis = build_schur_basis_u1(3);
  REQUIRE(basis.irrep_labels == std::vector<double>{-3.0, -1.0, 1.0, 3.0});
  REQUIRE(basis.dim_mult == std::vector<int>{1, 3, 3, 1});
  REQUIRE(basis.dim_irrep == std::vector<int>{1, 1, 1, 1});

  // Collective helicity operator is diagonal with the block labels.
  const SpinRep half = spin_rep(0.5);
  Matrix hz = Matrix::Zero(8, 8);
  const Matrix sz = 2.0 * half.jz;  // single-site helicity +-1
  const Matrix id = Matrix::Identity(2, 2);
  hz = kron(kron(sz, id), id) + kron(kron(id, sz), id) + kron(kron(id, id), sz);
  const Matrix in_schur = basis.to_schur(hz);
  for (std::size_t i = 0; i < basis.irrep_labels.size(); ++i) {
    const Eigen::Index off = basis.block_offset(static_cast<int>(i));
    for (int mu = 0; mu < basis.dim_mult[i]; ++mu) {
      CHECK(std::abs(in_schur(off + mu, off + mu) - basis.irrep_labels[i]) <
            1e-13);
    }
  }
  CHECK((in_schur - Matrix(in_schur.diagonal().asDiagonal()))
            .cwiseAbs()
            .maxCoeff() < 1e-13);
}

TEST_CASE("projector families commute, multiply, and resolve the identity") {
  for (const SchurBasis& basis :
       {build_schur_basis_su2(3), build_schur_basis_u1(3)}) {
    const Eigen::Index dim = basis.total_dim();
    Matrix completeness = Matrix::Zero(dim, dim);
    for (int i = 0; i < static_cast<int>(basis.irrep_labels.size()); ++i) {
      const int dv = basis.dim_mult[i];
      const int dl = basis.dim_irrep[i];
      for (int mu = 0; mu < dv; ++mu) {
        completeness += pi_multiplicity(basis, i, mu, mu).op.mat;
      }
      // Matrix-unit algebra within one family.
      if (dv >= 2) {
        const Matrix p01 = pi_multiplicity(basis, i, 0, 1).op.mat;
        const Matrix p10 = pi_multiplicity(basis, i, 1, 0).op.mat;
        const Matrix p00 = pi_multiplicity(basis, i, 0, 0).op.mat;
        const Matrix p11 = pi_multiplicity(basis, i, 1, 1).op.mat;
        CHECK((p01 * p10 - p00).cwiseAbs().maxCoeff() < 1e-13);
        CHECK((p01 * p01).cwiseAbs().maxCoeff() < 1e-13);
        CHECK((p01.adjoint() - p10).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((p01 * p11 - p01).cwiseAbs().maxCoeff() < 1e-13);
      }
      // The two families commute elementwise.
      for (int mu1 = 0; mu1 < std::min(dv, 2); ++mu1) {
        for (int r1 = 0; r1 < std::min(dl, 2); ++r1) {
          const Matrix pm = pi_multiplicity(basis, i, mu1, 0).op.mat;
          const Matrix pr = pi_irrep(basis, i, r1, 0).op.mat;
          CHECK((pm * pr - pr * pm).cwiseAbs().maxCoeff() < 1e-13);
        }
      }
    }
    CHECK((completeness - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <
          1e-13);

    CHECK_THROWS_AS(pi_multiplicity(basis, 0, 0, 99), std::out_of_range);
    CHECK_THROWS_AS(pi_irrep(basis, 99, 0, 0), std::out_of_range);
  }
}

TEST_CASE("site permutations preserve every irrep block") {
  const SchurBasis basis = build_schur_basis_su2(3);
  const DenseOperator swap01 =
      tensor_permutation_operator(3, 2, {1, 0, 2});
  CHECK(swap01.mat.rows() == 8);
  // Permutations commute with the collective Casimir and with every
  // multiplicity-space projector family member's support projector.
  const Matrix c2 = total_spin_casimir(3);
  CHECK((swap01.mat * c2 - c2 * swap01.mat).cwiseAbs().maxCoeff() < 1e-13);
  for (int i = 0; i < static_cast<int>(basis.irrep_labels.size()); ++i) {
    Matrix support = Matrix::Zero(8, 8);
    for (int mu = 0; mu < basis.dim_mult[i]; ++mu) {
      support += basis.to_product(pi_multiplicity(basis, i, mu, mu).op.mat);
    }
    CHECK((swap01.mat * support - support * swap01.mat)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(tensor_permutation_operator(3, 2, {0, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("permutation operator sends site k to position perm[k]") {
  // Cycle 0 -> 1 -> 2 -> 0 on qubits: basis ket |abc> maps to |cab>.
  const DenseOperator cycle = tensor_permutation_operator(3, 2, {1, 2, 0});
  CVector in = CVector::Zero(8);
  in(0b011) = 1.0;  // a=0, b=1, c=1 reading left to right
  const CVector out = cycle.mat * in;
  CVector expected = CVector::Zero(8);
  expected(0b101) = 1.0;  // |cab> = |101>
  CHECK((out - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("abstract basis is a single identity block") {
  const SchurBasis basis = make_abstract_basis(1.0, 3, 2);
  CHECK(basis.total_dim() == 6);
  CHECK(basis.find_irrep(1.0) == 0);
  CHECK(basis.find_irrep(2.0) == -1);
  CHECK((basis.basis_matrix - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK_THROWS_AS(make_abstract_basis(0.0, 0, 1), std::invalid_argument);
}

TEST_CASE("basis builders reject out-of-range site counts") {
  CHECK_THROWS_AS(build_schur_basis_su2(0), std::invalid_argument);
  CHECK_THROWS_AS(build_schur_basis_su2(11), std::invalid_argument);
  CHECK_THROWS_AS(build_schur_basis_u1(17), std::invalid_argument);
}
