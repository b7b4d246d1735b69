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

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

#include "qbochner/bochner.hpp"
#include "test_util.hpp"
#include "throws_code.hpp"

namespace qbochner {
namespace {

using testing::Rng;
using testing::ThrowsCode;

constexpr double kPi = std::numbers::pi;

SliceMeasure Mu(std::initializer_list<SliceAtom> atoms) { return SliceMeasure{atoms}; }

double OracleMinEigenvalue(const QMatrixd& g) {
  const Eigen::SelfAdjointEigenSolver<CMatrixd> es(chi(g), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

TEST(Synth, SliceExamples) {
  const auto c = Mu({{0.0, Quaterniond(2.5)}});
  for (double t : {-3.0, 0.0, 1.0, 7.5}) EXPECT_EQ(synth_from_slice(c, t), Quaterniond(2.5));

  const auto unit = Mu({{1.0, Quaterniond(1, 1, 0, 0)}});
  EXPECT_LE((synth_from_slice(unit, kPi / 2) - Quaterniond::I1()).norm(), 1e-15);

  const auto two = Mu({{1.0, Quaterniond(2.0)}, {2.0, Quaterniond(1, 0, 0, 1)}});
  EXPECT_LE((synth_from_slice(two, kPi) - Quaterniond(-1.0)).norm(), 1e-15);
}

TEST(Synth, GammaExamples) {
  const ImaginaryAtomicMeasure g{{{{1, 0, 0}, 1.0}}};
  for (double t : {-2.0, 0.3, 4.0})
    EXPECT_LE((synth_from_gamma(g, t) - Quaterniond(std::cos(t), std::sin(t), 0, 0)).norm(), 1e-15);
  const ImaginaryAtomicMeasure five{{{{0, 0, 0}, 5.0}}};
  EXPECT_EQ(synth_from_gamma(five, 12.0), Quaterniond(5.0));
}

TEST(Synth, RejectsConeViolations) {
  EXPECT_TRUE(ThrowsCode([] { synth_from_slice(Mu({{1.0, Quaterniond(1, 2, 0, 0)}}), 0.0); }, ErrorCode::ConeViolation));
  EXPECT_TRUE(ThrowsCode([] { PDFunctionSpec::FromSlice(Mu({{0.0, Quaterniond(-1.0)}, {1.0, Quaterniond(2.0)}})); },
                         ErrorCode::ConeViolation));
  EXPECT_TRUE(ThrowsCode([] { synth_from_gamma(ImaginaryAtomicMeasure{{{{1, 0, 0}, -1.0}}}, 0.0); },
                         ErrorCode::NegativeWeight));
}

TEST(Synth, TwoRouteIdentity) {
  Rng rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = testing::random_gamma(rng, 6);
    const auto mu = pushforward(g);
    const double t = testing::uniform(rng, -10, 10);
    EXPECT_LE((synth_from_gamma(g, t) - synth_from_slice(mu, t)).norm(), 1e-12);
  }
}

TEST(Synth, SymmetryValueAtZeroAndScaling) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto mu = testing::random_cone_measure(rng, 6);
    const auto phi = PDFunctionSpec::FromSlice(mu);
    const double t = testing::uniform(rng, -10, 10);
    EXPECT_LE((phi(-t) - phi(t).conj()).norm(), 1e-12);
    const Quaterniond p0 = phi(0.0);
    EXPECT_LE(p0.imagNorm(), 0.0);
    EXPECT_GE(p0.q0, 0.0);
    EXPECT_NEAR(p0.q0, phi.value_at_zero(), 1e-12);
    const double c = testing::uniform(rng, 0.1, 5.0);
    EXPECT_LE((synth_from_slice(c * mu, t) - c * phi(t)).norm(), 1e-12 * (1 + c * phi.value_at_zero()));
  }
}

TEST(Gram, Examples) {
  const PhiFunction one = [](double) { return Quaterniond(1.0); };
  const QMatrixd g1 = gram(one, TimeGrid{0.0, 3.0});
  EXPECT_EQ(max_abs<double>(g1 - QMatrixd::Constant(2, 2, Quaterniond(1.0))), 0.0);

  const PhiFunction e = [](double t) { return exp_imag(ImaginaryQuaterniond(t, 0, 0)); };
  const QMatrixd g2 = gram(e, TimeGrid{0.0, kPi / 2});
  EXPECT_LE((g2(0, 0) - Quaterniond(1.0)).norm(), 1e-15);
  EXPECT_LE((g2(0, 1) + Quaterniond::I1()).norm(), 1e-15);
  EXPECT_LE((g2(1, 0) - Quaterniond::I1()).norm(), 1e-15);
  EXPECT_LE((g2(1, 1) - Quaterniond(1.0)).norm(), 1e-15);

  const PhiFunction cosine = [](double t) { return Quaterniond(std::cos(t)); };
  const QMatrixd g3 = gram(cosine, TimeGrid{0.0, kPi});
  EXPECT_LE((g3(0, 1) + Quaterniond(1.0)).norm(), 1e-15);
  EXPECT_LE((g3(1, 1) - Quaterniond(1.0)).norm(), 1e-15);
}

TEST(Gram, RejectsBadGrids) {
  const PhiFunction one = [](double) { return Quaterniond(1.0); };
  EXPECT_TRUE(ThrowsCode([&] { gram(one, TimeGrid{1.0, 0.0}); }, ErrorCode::InvalidInput));
  EXPECT_TRUE(ThrowsCode([&] { gram(one, TimeGrid{0.0, INFINITY}); }, ErrorCode::NonFinite));
}

TEST(CheckPositiveDefinite, SufficiencyOnRandomMeasures) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto mu = testing::random_cone_measure(rng, 6);
    const auto phi = PDFunctionSpec::FromSlice(mu);
    const auto grids = random_grids(1000 + trial, 8, 12, 10.0);
    const auto report = check_positive_definite(phi, grids);
    EXPECT_TRUE(report.symmetric);
    EXPECT_TRUE(report.pass) << report.min_eigenvalue;
    ASSERT_EQ(report.grids.size(), 8u);
    for (std::size_t k = 0; k < grids.size(); ++k) {
      EXPECT_LE(grids[k].size(), 12u);
      EXPECT_NEAR(report.grids[k].min_eigenvalue, OracleMinEigenvalue(gram(phi, grids[k])), 1e-10 * (1 + phi.value_at_zero()));
    }
  }
}

TEST(CheckPositiveDefinite, NonPdCosineControl) {
  const PhiFunction f = [](double t) { return Quaterniond(2 * std::cos(t) - 1); };
  const auto report = check_positive_definite(f, {TimeGrid{0.0, kPi}});
  EXPECT_TRUE(report.symmetric);
  EXPECT_FALSE(report.pass);
  EXPECT_NEAR(report.min_eigenvalue, -2.0, 1e-12);
}

TEST(CheckPositiveDefinite, SineFailsSymmetry) {
  const PhiFunction f = [](double t) { return Quaterniond(std::sin(t)); };
  const auto report = check_positive_definite(f, {TimeGrid{0.0, 1.0, 2.0}});
  EXPECT_FALSE(report.symmetric);
  EXPECT_FALSE(report.pass);
  EXPECT_GT(report.symmetry_error, 1.0);
}

TEST(CheckPositiveDefinite, GammaSourceAlsoPasses) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto phi = PDFunctionSpec::FromGamma(testing::random_gamma(rng, 6));
    EXPECT_TRUE(check_positive_definite(phi, random_grids(trial, 4, 12, 10.0)).pass);
  }
}

TEST(RandomGrids, DeterministicAndWellFormed) {
  const auto a = random_grids(7, 8, 12, 10.0);
  const auto b = random_grids(7, 8, 12, 10.0);
  EXPECT_EQ(a, b);
  for (const auto& g : a) {
    EXPECT_GE(g.size(), 2u);
    EXPECT_LE(g.size(), 12u);
    EXPECT_NO_THROW(validate_grid(g));
    for (double t : g) EXPECT_LE(std::abs(t), 10.0);
  }
  EXPECT_NE(random_grids(8, 8, 12, 10.0), a);
}

TEST(UniquenessProbe, Examples) {
  const auto mu = Mu({{1.0, Quaterniond(1, 0.5, 0, 0)}});
  EXPECT_EQ(uniqueness_probe(mu, mu, TimeGrid{0.0, 1.0, 2.0}), 0.0);

  TimeGrid dense;
  for (int k = 0; k <= 200; ++k) dense.push_back(2 * kPi * k / 200);
  EXPECT_GE(uniqueness_probe(Mu({{1.0, Quaterniond(1.0)}}), Mu({{2.0, Quaterniond(1.0)}}), dense), 1.0);

  const double d = uniqueness_probe(Mu({{1.0, Quaterniond(1, 1, 0, 0)}}), Mu({{1.0, Quaterniond(1, 0, 1, 0)}}),
                                    TimeGrid{kPi / 2});
  EXPECT_NEAR(d, std::sqrt(2.0), 1e-15);
}

}  // namespace
}  // namespace qbochner
