// Copyright 2026 The qbochner Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qbochner/bochner.hpp"
#include "qbochner/stone.hpp"
#include "test_util.hpp"
#include "throws_code.hpp"

namespace qbochner {
namespace {

using testing::Rng;
using testing::ThrowsCode;

constexpr double kPi = std::numbers::pi;

QMatrixd I1Matrix() { return QMatrixd::Constant(1, 1, Quaterniond::I1()); }

TEST(PhiFromGroup, Examples) {
  const UnitaryGroupFD zero(qzero<double>(3, 3));
  QVectord alpha(3);
  alpha << Quaterniond(1, 1, 0, 0), Quaterniond::I2(), Quaterniond(0, 0, 0, 2);
  for (double t : {-1.0, 0.0, 2.0}) EXPECT_LE((phi_from_group(zero, alpha, t) - Quaterniond(7.0)).norm(), 1e-14);

  const UnitaryGroupFD g(I1Matrix());
  const QVectord one = QVectord::Constant(1, Quaterniond(1.0));
  for (double t : {-2.0, 0.5, 3.0})
    EXPECT_LE((phi_from_group(g, one, t) - exp_imag(ImaginaryQuaterniond(t, 0, 0))).norm(), 1e-14);
}

TEST(UnitaryGroupFD, RejectsNonAntiSelfAdjoint) {
  EXPECT_TRUE(ThrowsCode([] { UnitaryGroupFD g(qidentity<double>(2)); }, ErrorCode::NotAntiSelfAdjoint));
}

TEST(StoneRoundtrip, Examples) {
  const QVectord one = QVectord::Constant(1, Quaterniond(1.0));
  const auto a = stone_roundtrip(I1Matrix(), one, TimeGrid{0.0, kPi / 2, kPi});
  EXPECT_LE(a.max_deviation, 1e-12);
  EXPECT_TRUE(a.within_bound);

  Rng rng(1);
  const auto b = stone_roundtrip(qzero<double>(3, 3), testing::random_qvector(rng, 3), TimeGrid{-1.0, 0.0, 4.0});
  EXPECT_LE(b.max_deviation, 1e-12);
  ASSERT_EQ(b.measure.atoms.size(), 1u);
  EXPECT_EQ(b.measure.atoms[0].r, 0.0);
}

TEST(StoneRoundtrip, RandomGenerators) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = testing::uniform_int(rng, 1, 8);
    const QMatrixd a = testing::random_asa(rng, n);
    const QVectord alpha = testing::random_qvector(rng, n);
    TimeGrid times;
    for (int k = 0; k < 20; ++k) times.push_back(testing::uniform(rng, -10, 10));
    const auto rep = stone_roundtrip(a, alpha, times);
    EXPECT_TRUE(rep.within_bound) << rep.max_deviation << " > " << rep.bound;
    EXPECT_EQ(rep.deviations.size(), times.size());
    EXPECT_TRUE(validate_slice(rep.measure, 0.0).ok);
  }
}

TEST(GroupLawAudit, Examples) {
  const auto z = group_law_audit(UnitaryGroupFD(qzero<double>(2, 2)), 10);
  EXPECT_EQ(z.max_group_deviation, 0.0);
  EXPECT_EQ(z.max_unitarity_deviation, 0.0);
  EXPECT_EQ(z.identity_deviation, 0.0);

  Rng rng(3);
  const auto r = group_law_audit(UnitaryGroupFD(testing::random_asa(rng, 4)), 50);
  EXPECT_EQ(r.trials, 50);
  EXPECT_LE(r.max_group_deviation, 1e-10);
  EXPECT_LE(r.max_unitarity_deviation, 1e-10);
  EXPECT_LE(r.identity_deviation, 1e-10);
}

TEST(GeneratorSkewDefect, VanishesAtFirstOrder) {
  Rng rng(4);
  double ratio_sum = 0.0;
  int count = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const UnitaryGroupFD g(testing::random_asa(rng, 3));
    const QVectord x = testing::random_qvector(rng, 3);
    const QVectord y = testing::random_qvector(rng, 3);
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
      const double d1 = generator_skew_defect(g, x, y, h);
      const double d2 = generator_skew_defect(g, x, y, h / 2);
      EXPECT_LE(d2, d1);
      ratio_sum += d1 / d2;
      ++count;
    }
  }
  const double mean = ratio_sum / count;
  EXPECT_GE(mean, 1.8);
  EXPECT_LE(mean, 2.2);
}

TEST(PhiFromGroup, IsPositiveDefiniteOnRandomGrids) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = testing::uniform_int(rng, 1, 6);
    const auto g = std::make_shared<UnitaryGroupFD>(testing::random_asa(rng, n));
    const QVectord alpha = testing::random_qvector(rng, n);
    const PhiFunction phi = [g, alpha](double t) { return phi_from_group(*g, alpha, t); };
    const auto rep = check_positive_definite(phi, random_grids(trial, 8, 12, 10.0));
    EXPECT_TRUE(rep.symmetric) << rep.symmetry_error;
    EXPECT_TRUE(rep.pass) << rep.min_eigenvalue;
  }
}

}  // namespace
}  // namespace qbochner
