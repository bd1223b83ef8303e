// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <numbers>
#include <random>

#include "invenc/kinematics.hpp"

using namespace invenc;

namespace {

LorentzTransform random_proper(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  const Eigen::Vector3d axis_r =
      Eigen::Vector3d(g(rng), g(rng), g(rng)).normalized();
  const Eigen::Vector3d axis_b =
      Eigen::Vector3d(g(rng), g(rng), g(rng)).normalized();
  return LorentzTransform::boost(std::abs(g(rng)), axis_b) *
         LorentzTransform::rotation(u(rng), axis_r);
}

}  // namespace

TEST_CASE("minkowski dot uses the (-,+,+,+) signature") {
  Eigen::Vector4d x(2.0, 1.0, 0.0, 0.0);
  CHECK(minkowski_dot(x, x) == doctest::Approx(-3.0).epsilon(1e-15));
  Eigen::Vector4d t(1.0, 0.0, 0.0, 0.0), z(0.0, 0.0, 0.0, 1.0);
  CHECK(minkowski_dot(t, t) == doctest::Approx(-1.0));
  CHECK(minkowski_dot(z, z) == doctest::Approx(1.0));
  CHECK(minkowski_dot(t, z) == doctest::Approx(0.0));
}

TEST_CASE("boost maps the rest momentum to the hyperbolic parametrization") {
  const double m = 2.5, chi = 0.7;
  const FourMomentum rest = FourMomentum::massive(m, Eigen::Vector3d::Zero());
  const auto b = LorentzTransform::boost(chi, Eigen::Vector3d::UnitX());
  const FourMomentum out = b(rest);
  CHECK(out.energy() == doctest::Approx(m * std::cosh(chi)).epsilon(1e-14));
  CHECK(out.spatial()(0) ==
        doctest::Approx(m * std::sinh(chi)).epsilon(1e-14));
  CHECK(std::abs(out.spatial()(1)) < 1e-14);
  CHECK(out.mass == doctest::Approx(m));
}

TEST_CASE("rotation acts as SO(3) on the spatial part") {
  const auto r =
      LorentzTransform::rotation(std::numbers::pi / 2, Eigen::Vector3d::UnitZ());
  const FourMomentum p = FourMomentum::massive(1.0, {1.0, 0.0, 0.0});
  const FourMomentum q = r(p);
  CHECK(q.energy() == doctest::Approx(p.energy()));
  CHECK(q.spatial()(0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(q.spatial()(1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("inverse is the metric transpose and composes to the identity") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const LorentzTransform g = random_proper(rng);
    g.validate();
    const Eigen::Matrix4d prod = (g * g.inverse()).mat;
    CHECK((prod - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("validation rejects improper or non-orthochronous matrices") {
  LorentzTransform bad = LorentzTransform::identity();
  bad.mat(1, 1) = -1.0;  // parity flip in x: det = -1
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  LorentzTransform scaled = LorentzTransform::identity();
  scaled.mat *= 1.0 + 1e-6;
  CHECK_THROWS_AS(scaled.validate(), std::invalid_argument);
}

TEST_CASE("momentum classification from raw components") {
  const FourMomentum massless =
      FourMomentum::from_components({3.0, 0.0, 0.0, 3.0});
  CHECK(massless.is_massless());

  const FourMomentum massive =
      FourMomentum::from_components({2.0, 0.0, 0.0, 1.0});
  CHECK_FALSE(massive.is_massless());
  CHECK(massive.mass == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  FourMomentum off = FourMomentum::massive(1.0, {0.0, 0.0, 1.0});
  off.comps(0) += 1e-3;
  CHECK_THROWS_AS(off.validate(), std::invalid_argument);
}

TEST_CASE("massless constructor normalizes the direction") {
  const FourMomentum p = FourMomentum::massless(2.0, {0.0, 3.0, 4.0});
  CHECK(p.energy() == doctest::Approx(2.0));
  CHECK(p.spatial().norm() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("boosts along opposite axes invert each other") {
  const auto f = LorentzTransform::boost(1.3, Eigen::Vector3d::UnitZ());
  const auto b = LorentzTransform::boost(1.3, -Eigen::Vector3d::UnitZ());
  CHECK(((f * b).mat - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <
        1e-13);
}
