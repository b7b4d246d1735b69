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

#include "qbochner/estimate.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>

#include "qbochner/bochner.hpp"
#include "qbochner/error.hpp"

namespace qbochner {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Same arithmetic as cone_margin() so feasibility survives the round trip.
double imag_norm(const Eigen::Vector3d& b) { return Quaterniond::Pure(b).imagNorm(); }

double top_eigenvalue(const MatrixXd& m, int iterations) {
  const Eigen::Index k = m.rows();
  if (k == 0) return 0.0;
  VectorXd x(k);
  for (Eigen::Index i = 0; i < k; ++i) x(i) = 1.0 + 0.1 * static_cast<double>(i) / static_cast<double>(k);
  x.normalize();
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const VectorXd y = m * x;
    const double ny = y.norm();
    if (ny == 0.0) return 0.0;
    const double next = x.dot(y);
    x = y / ny;
    if (it > 0 && std::abs(next - lambda) <= 1e-15 * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::min(m.trace(), 1.005 * lambda);
}

struct Design {
  MatrixXd cos_part;  // T x K
  MatrixXd sin_part;  // T x K
};

Design build_design(const std::vector<double>& times, const std::vector<double>& radii) {
  const auto nt = static_cast<Eigen::Index>(times.size());
  const auto nr = static_cast<Eigen::Index>(radii.size());
  Design d{MatrixXd(nt, nr), MatrixXd(nt, nr)};
  for (Eigen::Index j = 0; j < nt; ++j)
    for (Eigen::Index k = 0; k < nr; ++k) {
      const double arg = times[static_cast<std::size_t>(j)] * radii[static_cast<std::size_t>(k)];
      d.cos_part(j, k) = std::cos(arg);
      d.sin_part(j, k) = std::sin(arg);
    }
  return d;
}

std::vector<double> merged_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "radius grid is empty");
  SliceMeasure carrier;
  for (double r : grid) {
    if (!std::isfinite(r)) throw Error(ErrorCode::NonFinite, "radius grid contains a non-finite value");
    if (r < 0.0) throw Error(ErrorCode::InvalidInput, "radius grid contains a negative radius");
    carrier.atoms.push_back({r, Quaterniond()});
  }
  std::vector<double> out;
  for (const auto& a : normalize(carrier).atoms) out.push_back(a.r);
  return out;
}

}  // namespace

void project_cone(double& a, Eigen::Vector3d& b) {
  const double nb = imag_norm(b);
  if (nb <= a) return;
  if (a <= -nb) {
    a = 0.0;
    b.setZero();
    return;
  }
  const double s = (a + nb) / 2.0;
  b *= s / nb;
  a = std::max(s, imag_norm(b));
}

double design_norm(const std::vector<double>& times, const std::vector<double>& radius_grid, int iterations) {
  if (times.empty() || radius_grid.empty()) throw Error(ErrorCode::EmptyGrid, "design has no rows or columns");
  const Design d = build_design(times, radius_grid);
  const MatrixXd cc = d.cos_part.transpose() * d.cos_part;
  const MatrixXd ss = d.sin_part.transpose() * d.sin_part;
  return std::max(top_eigenvalue(cc, iterations), top_eigenvalue(ss, iterations));
}

FitResult fit(const std::vector<FitSample>& samples, const FitConfig& config) {
  if (samples.empty()) throw Error(ErrorCode::InvalidInput, "no samples");
  const std::vector<double> radii = merged_grid(config.radius_grid);

  std::map<double, std::pair<Quaterniond, int>> by_time;
  for (const FitSample& s : samples) {
    if (!std::isfinite(s.t) || !isfinite(s.value)) throw Error(ErrorCode::NonFinite, "sample is not finite");
    auto& slot = by_time[s.t];
    slot.first += s.value;
    slot.second += 1;
  }
  std::vector<double> times;
  MatrixXd y(static_cast<Eigen::Index>(by_time.size()), 4);
  for (const auto& [t, acc] : by_time) {
    const Quaterniond mean = acc.first / static_cast<double>(acc.second);
    const auto j = static_cast<Eigen::Index>(times.size());
    y.row(j) << mean.q0, mean.q1, mean.q2, mean.q3;
    times.push_back(t);
  }

  const Design d = build_design(times, radii);
  const auto nr = static_cast<Eigen::Index>(radii.size());

  FitResult res;
  res.lipschitz = design_norm(times, radii);

  auto residual = [&](const MatrixXd& x) {
    MatrixXd r(y.rows(), 4);
    r.col(0) = d.cos_part * x.col(0) - y.col(0);
    r.rightCols(3) = d.sin_part * x.rightCols(3) - y.rightCols(3);
    return r;
  };
  auto gradient = [&](const MatrixXd& r) {
    MatrixXd g(nr, 4);
    g.col(0) = d.cos_part.transpose() * r.col(0);
    g.rightCols(3) = d.sin_part.transpose() * r.rightCols(3);
    return g;
  };
  auto project = [&](MatrixXd& x) {
    for (Eigen::Index k = 0; k < nr; ++k) {
      if (radii[static_cast<std::size_t>(k)] == 0.0) {
        x(k, 0) = std::max(x(k, 0), 0.0);
        x.block<1, 3>(k, 1).setZero();
        continue;
      }
      double a = x(k, 0);
      Eigen::Vector3d b = x.block<1, 3>(k, 1).transpose();
      project_cone(a, b);
      x(k, 0) = a;
      x.block<1, 3>(k, 1) = b.transpose();
    }
  };

  MatrixXd x = MatrixXd::Zero(nr, 4);
  MatrixXd r = residual(x);
  double f = 0.5 * r.squaredNorm();
  double step = res.lipschitz > 0.0 ? 1.0 / res.lipschitz : 1.0;
  if (config.step_rule == StepRule::Backtracking) step *= 2.0;

  int it = 0;
  for (; it < config.max_iters; ++it) {
    const MatrixXd g = gradient(r);
    MatrixXd next;
    MatrixXd r_next;
    double f_next = 0.0;
    for (;;) {
      next = x - step * g;
      project(next);
      r_next = residual(next);
      f_next = 0.5 * r_next.squaredNorm();
      if (config.step_rule == StepRule::Fixed) break;
      const MatrixXd dx = next - x;
      const double model = f + (g.array() * dx.array()).sum() + dx.squaredNorm() / (2.0 * step);
      if (f_next <= model || step < 1e-300) break;
      step /= 2.0;
    }
    const bool increased = f_next > f * (1.0 + 1e-12) + 1e-300;
    if (config.check_monotone && increased) res.monotone = false;
#ifndef NDEBUG
    assert(!increased);
#endif
    const double change = (next - x).norm();
    x = std::move(next);
    r = std::move(r_next);
    f = f_next;
    if (change <= config.tol_residual * std::max(1.0, x.norm())) {
      res.converged = true;
      ++it;
      break;
    }
  }
  res.iterations = it;
  res.objective = f;

  for (Eigen::Index k = 0; k < nr; ++k) {
    if (x(k, 0) < config.prune_threshold) continue;
    res.measure.atoms.push_back({radii[static_cast<std::size_t>(k)], Quaterniond(x(k, 0), x(k, 1), x(k, 2), x(k, 3))});
  }
  double ss = 0.0;
  for (std::size_t j = 0; j < times.size(); ++j) {
    const auto row = y.row(static_cast<Eigen::Index>(j));
    const Quaterniond target(row(0), row(1), row(2), row(3));
    ss += (target - synth_unchecked(res.measure, times[j])).squaredNorm();
  }
  res.residual_rms = std::sqrt(ss / static_cast<double>(times.size()));
  return res;
}

}  // namespace qbochner
