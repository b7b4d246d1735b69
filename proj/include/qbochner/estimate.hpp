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

// Recovering a slice measure on a fixed radius grid from samples of phi.
//
// Unknowns per radius r_k: a_k (real) and b_k (R^3). The model
//   phi(t) = sum_k a_k cos(t r_k) + (b_k . i) sin(t r_k)
// is fitted in least squares subject to the second-order cone a_k >= |b_k|
// (b_k = 0 at r_k = 0) by projected gradient descent from zero.

#ifndef QBOCHNER_ESTIMATE_HPP
#define QBOCHNER_ESTIMATE_HPP

#include <Eigen/Core>

#include <vector>

#include "qbochner/measures.hpp"

namespace qbochner {

enum class StepRule { Fixed, Backtracking };

struct FitConfig {
  std::vector<double> radius_grid;
  int max_iters = 100000;
  StepRule step_rule = StepRule::Fixed;
  double tol_residual = 1e-12;  // stop when |dX| <= tol * max(1, |X|)
  double prune_threshold = 1e-8;
  bool check_monotone = false;  // verify the objective never increases
};

struct FitSample {
  double t = 0.0;
  Quaterniond value;
};

struct FitResult {
  SliceMeasure measure;
  double residual_rms = 0.0;
  int iterations = 0;
  bool converged = false;
  double lipschitz = 0.0;
  double objective = 0.0;
  bool monotone = true;  // meaningful when check_monotone was set
};

/// Euclidean projection of (a, b) onto {a >= |b|}; the result satisfies
/// a >= |b| exactly in floating point.
void project_cone(double& a, Eigen::Vector3d& b);

/// Upper estimate of the gradient's Lipschitz constant: the larger of the
/// top eigenvalues of C^T C and S^T S, C_jk = cos(t_j r_k), S_jk = sin(t_j r_k),
/// by power iteration inflated by 0.5% and capped by the trace.
double design_norm(const std::vector<double>& times, const std::vector<double>& radius_grid, int iterations = 200);

/// Duplicate sample times are averaged, duplicate radii merged. Throws
/// EmptyGrid, NonFinite, or InvalidInput (no samples / negative radius).
FitResult fit(const std::vector<FitSample>& samples, const FitConfig& config);

}  // namespace qbochner

#endif  // QBOCHNER_ESTIMATE_HPP
