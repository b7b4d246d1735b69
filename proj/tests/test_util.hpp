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

// Random instance generators shared by the test suites.

#ifndef QBOCHNER_TESTS_TEST_UTIL_HPP
#define QBOCHNER_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "qbochner/measures.hpp"
#include "qbochner/qlinalg.hpp"
#include "qbochner/quaternion.hpp"

namespace qbochner::testing {

using Rng = std::mt19937_64;

inline double normal(Rng& rng) { return std::normal_distribution<double>()(rng); }
inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Quaterniond random_quaternion(Rng& rng) {
  return Quaterniond(normal(rng), normal(rng), normal(rng), normal(rng));
}

inline ImaginaryQuaterniond random_imaginary(Rng& rng) {
  return ImaginaryQuaterniond(normal(rng), normal(rng), normal(rng));
}

inline QMatrixd random_qmatrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  QMatrixd a(rows, cols);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = random_quaternion(rng);
  return a;
}

inline QVectord random_qvector(Rng& rng, Eigen::Index n) {
  QVectord x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = random_quaternion(rng);
  return x;
}

inline QMatrixd random_asa(Rng& rng, Eigen::Index n) {
  const QMatrixd b = random_qmatrix(rng, n, n);
  QMatrixd a = b - adjoint(b);
  return a;
}

inline QMatrixd random_hermitian(Rng& rng, Eigen::Index n) {
  const QMatrixd b = random_qmatrix(rng, n, n);
  return b + adjoint(b);
}

/// Cone-valid slice measure with up to max_atoms atoms on distinct radii,
/// sometimes including a real atom at radius 0 and boundary atoms.
inline SliceMeasure random_cone_measure(Rng& rng, int max_atoms) {
  const int n = uniform_int(rng, 1, max_atoms);
  std::vector<double> radii;
  if (uniform(rng, 0, 1) < 0.3) radii.push_back(0.0);
  while (static_cast<int>(radii.size()) < n) radii.push_back(uniform(rng, 0.05, 5.0));
  std::sort(radii.begin(), radii.end());
  SliceMeasure mu;
  for (double r : radii) {
    const double a = uniform(rng, 0.0, 2.0);
    if (r == 0.0) {
      mu.atoms.push_back({r, Quaterniond(a)});
      continue;
    }
    ImaginaryQuaterniond dir = random_imaginary(rng).normalized();
    const double frac = uniform(rng, 0, 1) < 0.2 ? 1.0 : uniform(rng, 0.0, 1.0);
    mu.atoms.push_back({r, Quaterniond::FromParts(a, a * frac * dir)});
  }
  return normalize(mu);
}

inline ImaginaryAtomicMeasure random_gamma(Rng& rng, int max_atoms) {
  const int n = uniform_int(rng, 1, max_atoms);
  ImaginaryAtomicMeasure g;
  for (int k = 0; k < n; ++k) {
    const double u = uniform(rng, 0, 1);
    ImaginaryQuaterniond x = random_imaginary(rng);
    if (u < 0.1) x.setZero();
    g.atoms.push_back({x, uniform(rng, 0.0, 2.0)});
  }
  // Occasionally reuse a radius with a different direction (shared shell).
  if (n >= 2 && uniform(rng, 0, 1) < 0.5) {
    const double r = g.atoms[0].x.norm();
    g.atoms[1].x = r * random_imaginary(rng).normalized();
  }
  return g;
}

}  // namespace qbochner::testing

#endif  // QBOCHNER_TESTS_TEST_UTIL_HPP
