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

// Weakly stationary quaternionic processes with a prescribed spectral
// measure Gamma.
//
//   X_t = sum_k sqrt(w_k) exp(-t x_k) xi_k,
//
// with xi_k independent quaternionic Gaussians whose four components are
// i.i.d. N(0, 1/4), so E|xi|^2 = 1. Covariances are uncentered,
// cov(Y1, Y2) = E(Y1 conj(Y2)), which gives
//
//   cov(X_t, X_s) = sum_k w_k exp(-t x_k) conj(exp(-s x_k)) = sum_k w_k exp((s-t) x_k),
//
// so c_X(h) = cov(X_0, X_h) = sum_k w_k exp(h x_k). Putting exp(+t x_k) in X_t
// instead would produce the conjugate autocovariance.

#ifndef QBOCHNER_PROCESS_HPP
#define QBOCHNER_PROCESS_HPP

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <vector>

#include "qbochner/bochner.hpp"
#include "qbochner/measures.hpp"

namespace qbochner {

using QArray = Eigen::Matrix<Quaterniond, Eigen::Dynamic, Eigen::Dynamic>;

struct ProcessSpec {
  ImaginaryAtomicMeasure gamma;
  TimeGrid times;  // t >= 0, strictly ascending
  std::size_t n_paths = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;  // does not affect results
};

struct ProcessEnsemble {
  ProcessSpec spec;
  QArray values;  // n_paths x n_times
};

/// Throws InvalidSpec.
void validate(const ProcessSpec& spec);

/// Path p draws from CounterRng(seed ^ p), so ensembles are bit-identical for
/// any thread count.
ProcessEnsemble simulate(const ProcessSpec& spec);

/// cov(X_t, X_s) with each xi_k replaced by its second moment; algebraically
/// equal to synth_from_gamma(gamma, s - t).
Quaterniond analytic_covariance(const ImaginaryAtomicMeasure& gamma, double t, double s);

struct AutocovPoint {
  double lag = 0.0;
  Quaterniond value;
  std::size_t pairs = 0;
};

/// Grid time tolerance used to match t + h against grid points.
double default_match_tol(const TimeGrid& times);

/// c_hat(h): mean over paths and grid pairs (t, t+h) of X_t conj(X_{t+h}).
/// Throws NoPairsForLag when a lag has no pairs on the grid.
std::vector<AutocovPoint> autocov_estimate(const ProcessEnsemble& ens, const std::vector<double>& lags,
                                           double match_tol = -1.0);

struct StationarityReport {
  double max_deviation = 0.0;  // max |cov(X_t,X_s) - cov(X_{t+h},X_{s+h})|
  std::size_t comparisons = 0;
};

StationarityReport stationarity_audit(const ProcessEnsemble& ens, const std::vector<double>& shifts,
                                      double match_tol = -1.0);

struct AutocovPdReport {
  QMatrixd gram;
  double min_eigenvalue = 0.0;
};

/// Gram matrix G_ij = c_hat(t_i - t_j) on the given times.
AutocovPdReport pd_of_autocov(const ProcessEnsemble& ens, const TimeGrid& times, double match_tol = -1.0);

/// factor / sqrt(n_paths).
inline double mc_tolerance(std::size_t n_paths, double factor) {
  return factor / std::sqrt(static_cast<double>(n_paths));
}

}  // namespace qbochner

#endif  // QBOCHNER_PROCESS_HPP
