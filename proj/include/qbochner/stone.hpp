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

// One-parameter unitary groups U(t) = e^{tA} on H^n and the positive definite
// functions phi(t) = <U(t) a, a> they generate.
//
// H^n with a chosen vector a stands in for the Hilbert space completed from a
// positive definite function; no completion is ever constructed. Every
// finite Gram matrix of phi is reproduced exactly by this finite model.

#ifndef QBOCHNER_STONE_HPP
#define QBOCHNER_STONE_HPP

#include <cstdint>
#include <vector>

#include "qbochner/bochner.hpp"
#include "qbochner/measures.hpp"
#include "qbochner/qlinalg.hpp"

namespace qbochner {

class UnitaryGroupFD {
 public:
  explicit UnitaryGroupFD(QMatrixd generator, double tol = 1e-10)
      : exp_(generator, tol) {}

  QMatrixd operator()(double t) const { return exp_(t); }
  const QMatrixd& generator() const { return exp_.generator(); }
  Eigen::Index dim() const { return exp_.generator().rows(); }

 private:
  AntiSelfAdjointExp<double> exp_;
};

/// <U(t) a, a>.
Quaterniond phi_from_group(const UnitaryGroupFD& group, const QVectord& alpha, double t);

struct StoneReport {
  SpectralSystemFD<double> system;
  SliceMeasure measure;
  TimeGrid times;
  std::vector<double> deviations;  // |<U(t)a,a> - phi_mu(t)| per time
  double max_deviation = 0.0;
  double bound = 0.0;              // 1e-9 |a|^2 (1 + max|t|)
  bool within_bound = false;
};

/// Decomposes A, extracts mu = <E a, a> + <J0 E a, a> and compares both
/// evaluations of phi on the given times.
StoneReport stone_roundtrip(const QMatrixd& generator, const QVectord& alpha, const TimeGrid& times,
                            double tol = 1e-9);

struct GroupLawReport {
  int trials = 0;
  double max_group_deviation = 0.0;      // |U(s)U(t) - U(s+t)|_F
  double max_unitarity_deviation = 0.0;  // |U(t)^* U(t) - I|_F
  double identity_deviation = 0.0;       // |U(0) - I|_F
};

/// Samples (s, t) uniformly in [-t_max, t_max]^2.
GroupLawReport group_law_audit(const UnitaryGroupFD& group, int trials, std::uint64_t seed = 1,
                               double t_max = 10.0);

/// |<Dx, y> + <x, Dy>| with D the forward-difference generator at step h.
/// Vanishes at first order in h because the generator is anti-self-adjoint.
double generator_skew_defect(const UnitaryGroupFD& group, const QVectord& x, const QVectord& y, double h);

}  // namespace qbochner

#endif  // QBOCHNER_STONE_HPP
