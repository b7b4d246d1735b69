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

#include "qbochner/stone.hpp"

#include <algorithm>
#include <cmath>

#include "qbochner/random.hpp"

namespace qbochner {

Quaterniond phi_from_group(const UnitaryGroupFD& group, const QVectord& alpha, double t) {
  return inner(QVectord(group(t) * alpha), alpha);
}

StoneReport stone_roundtrip(const QMatrixd& generator, const QVectord& alpha, const TimeGrid& times,
                            double tol) {
  StoneReport rep;
  const UnitaryGroupFD group(generator);
  rep.system = spectral_decompose_asa(generator, tol);
  rep.measure = measure_from_spectral_system(rep.system, alpha);
  rep.times = times;
  double t_abs = 0.0;
  for (double t : times) {
    const Quaterniond lhs = phi_from_group(group, alpha, t);
    const Quaterniond rhs = synth_unchecked(rep.measure, t);
    const double d = (lhs - rhs).norm();
    rep.deviations.push_back(d);
    rep.max_deviation = std::max(rep.max_deviation, d);
    t_abs = std::max(t_abs, std::abs(t));
  }
  const double a2 = vnorm(alpha) * vnorm(alpha);
  rep.bound = 1e-9 * a2 * (1.0 + t_abs);
  rep.within_bound = rep.max_deviation <= rep.bound;
  return rep;
}

GroupLawReport group_law_audit(const UnitaryGroupFD& group, int trials, std::uint64_t seed, double t_max) {
  GroupLawReport rep;
  rep.trials = trials;
  const Eigen::Index n = group.dim();
  const QMatrixd id = qidentity<double>(n);
  rep.identity_deviation = frobenius<double>(group(0.0) - id);
  CounterRng rng(seed);
  for (int k = 0; k < trials; ++k) {
    const double s = t_max * (2.0 * rng.uniform() - 1.0);
    const double t = t_max * (2.0 * rng.uniform() - 1.0);
    const QMatrixd us = group(s);
    const QMatrixd ut = group(t);
    rep.max_group_deviation = std::max(rep.max_group_deviation, frobenius<double>(us * ut - group(s + t)));
    rep.max_unitarity_deviation = std::max(rep.max_unitarity_deviation, frobenius<double>(adjoint(ut) * ut - id));
  }
  return rep;
}

double generator_skew_defect(const UnitaryGroupFD& group, const QVectord& x, const QVectord& y, double h) {
  const QVectord dx = generator_fd(group, x, h);
  const QVectord dy = generator_fd(group, y, h);
  return (inner(dx, y) + inner(x, dy)).norm();
}

}  // namespace qbochner
