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

// Positive definite functions synthesized from measures.
//
// From a slice measure:  phi(t) = sum_atoms Re(v) cos(t r) + Im(v) sin(t r).
// From a Gamma:          phi(t) = sum_k w_k exp(t x_k).
// The two agree whenever mu = pushforward(Gamma).
//
// Positive definiteness is certified on finite grids only: the Gram matrix
// G_ij = phi(t_i - t_j) must be positive semidefinite for every grid.

#ifndef QBOCHNER_BOCHNER_HPP
#define QBOCHNER_BOCHNER_HPP

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "qbochner/measures.hpp"
#include "qbochner/qlinalg.hpp"

namespace qbochner {

using PhiFunction = std::function<Quaterniond(double)>;
using TimeGrid = std::vector<double>;

/// Throws ConeViolation if mu is not slice-condensed (tolerance scaled by the
/// measure's total variation).
void require_cone(const SliceMeasure& mu);

Quaterniond synth_from_slice(const SliceMeasure& mu, double t);
/// Same formula with no cone check; any quaternion-valued atomic measure.
Quaterniond synth_unchecked(const SliceMeasure& mu, double t);
Quaterniond synth_from_gamma(const ImaginaryAtomicMeasure& gamma, double t);

/// A positive definite function together with the measure it came from.
/// Validation happens once, at construction.
class PDFunctionSpec {
 public:
  static PDFunctionSpec FromSlice(SliceMeasure mu);
  static PDFunctionSpec FromGamma(ImaginaryAtomicMeasure gamma);

  Quaterniond operator()(double t) const;
  /// phi(0), the total mass of Re(mu).
  double value_at_zero() const;

  const std::variant<SliceMeasure, ImaginaryAtomicMeasure>& source() const { return source_; }

 private:
  explicit PDFunctionSpec(std::variant<SliceMeasure, ImaginaryAtomicMeasure> src) : source_(std::move(src)) {}
  std::variant<SliceMeasure, ImaginaryAtomicMeasure> source_;
};

/// Throws InvalidInput unless times are finite and strictly ascending.
void validate_grid(const TimeGrid& times);

/// G_ij = phi(t_i - t_j).
template <typename Phi>
QMatrixd gram(const Phi& phi, const TimeGrid& times) {
  validate_grid(times);
  const auto n = static_cast<Eigen::Index>(times.size());
  QMatrixd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = phi(times[static_cast<std::size_t>(i)] - times[static_cast<std::size_t>(j)]);
  return g;
}

/// Minimum eigenvalue of chi(G) for a Gram matrix assumed Hermitian to
/// within herm_tol (relative).
double gram_min_eigenvalue(const QMatrixd& g, double herm_tol = 1e-10);

struct GridCheck {
  std::size_t n = 0;
  double min_eigenvalue = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct PdReport {
  bool symmetric = false;
  double symmetry_error = 0.0;  // max |phi(-t) - conj(phi(t))| over grid differences
  std::vector<GridCheck> grids;
  double min_eigenvalue = 0.0;
  bool pass = false;
};

/// Checks phi(-t) = conj(phi(t)) over every difference of every grid, then the
/// Gram matrix of each grid. tol <= 0 selects 1e-9 * |phi(0)| * n per grid.
/// Eigenvalues are skipped when the symmetry precondition fails.
PdReport check_positive_definite(const PhiFunction& phi, const std::vector<TimeGrid>& grids, double tol = 0.0);

/// sup over times of |phi_mu(t) - phi_mu'(t)|.
double uniqueness_probe(const SliceMeasure& a, const SliceMeasure& b, const TimeGrid& times);

/// count grids of size in [2, max_n], times uniform on [-t_max, t_max],
/// deterministic in seed.
std::vector<TimeGrid> random_grids(std::uint64_t seed, std::size_t count, std::size_t max_n, double t_max);

}  // namespace qbochner

#endif  // QBOCHNER_BOCHNER_HPP
