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

#include "qbochner/process.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

#include "qbochner/error.hpp"
#include "qbochner/random.hpp"

namespace qbochner {
namespace {

// Pairwise (cascade) summation; the split points depend only on the length.
Quaterniond pairwise_sum(const std::vector<Quaterniond>& xs, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    Quaterniond acc;
    for (std::size_t i = lo; i < hi; ++i) acc += xs[i];
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(xs, lo, mid) + pairwise_sum(xs, mid, hi);
}

Quaterniond pairwise_sum(const std::vector<Quaterniond>& xs) { return pairwise_sum(xs, 0, xs.size()); }

std::optional<Eigen::Index> find_time(const TimeGrid& times, double t, double tol) {
  auto it = std::lower_bound(times.begin(), times.end(), t - tol);
  if (it != times.end() && std::abs(*it - t) <= tol) return static_cast<Eigen::Index>(it - times.begin());
  return std::nullopt;
}

using IndexPairs = std::vector<std::pair<Eigen::Index, Eigen::Index>>;

IndexPairs pairs_for_lag(const TimeGrid& times, double lag, double tol) {
  IndexPairs out;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (auto j = find_time(times, times[i] + lag, tol)) out.emplace_back(static_cast<Eigen::Index>(i), *j);
  }
  return out;
}

// Mean over paths of X_i conj(X_j), summed over the given pairs.
Quaterniond mean_product(const QArray& v, const IndexPairs& pairs) {
  std::vector<Quaterniond> per_path(static_cast<std::size_t>(v.rows()));
  for (Eigen::Index p = 0; p < v.rows(); ++p) {
    Quaterniond acc;
    for (const auto& [i, j] : pairs) acc += v(p, i) * v(p, j).conj();
    per_path[static_cast<std::size_t>(p)] = acc;
  }
  return pairwise_sum(per_path) / static_cast<double>(v.rows());
}

}  // namespace

void validate(const ProcessSpec& spec) {
  try {
    validate(spec.gamma);
    validate_grid(spec.times);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidSpec, e.what());
  }
  if (spec.n_paths < 1) throw Error(ErrorCode::InvalidSpec, "n_paths must be at least 1");
  if (!spec.times.empty() && spec.times.front() < 0.0)
    throw Error(ErrorCode::InvalidSpec, "process times must be nonnegative");
}

ProcessEnsemble simulate(const ProcessSpec& spec) {
  validate(spec);
  const auto n_times = static_cast<Eigen::Index>(spec.times.size());
  const auto n_atoms = spec.gamma.atoms.size();

  // Deterministic factors sqrt(w_k) exp(-t x_k), indexed [k * n_times + j].
  std::vector<Quaterniond> factor(n_atoms * static_cast<std::size_t>(n_times));
  for (std::size_t k = 0; k < n_atoms; ++k) {
    const GammaAtom& a = spec.gamma.atoms[k];
    for (Eigen::Index j = 0; j < n_times; ++j) {
      const double t = spec.times[static_cast<std::size_t>(j)];
      factor[k * static_cast<std::size_t>(n_times) + static_cast<std::size_t>(j)] =
          std::sqrt(a.w) * exp_imag<double>(-t * a.x);
    }
  }

  ProcessEnsemble ens{spec, QArray::Constant(static_cast<Eigen::Index>(spec.n_paths), n_times, Quaterniond())};
  auto run_paths = [&](std::size_t begin, std::size_t end) {
    std::vector<Quaterniond> xi(n_atoms);
    for (std::size_t p = begin; p < end; ++p) {
      CounterRng rng(spec.seed ^ static_cast<std::uint64_t>(p));
      for (auto& x : xi) {
        const double a = 0.5 * rng.normal();
        const double b = 0.5 * rng.normal();
        const double c = 0.5 * rng.normal();
        const double d = 0.5 * rng.normal();
        x = Quaterniond(a, b, c, d);
      }
      for (Eigen::Index j = 0; j < n_times; ++j) {
        Quaterniond acc;
        for (std::size_t k = 0; k < n_atoms; ++k)
          acc += factor[k * static_cast<std::size_t>(n_times) + static_cast<std::size_t>(j)] * xi[k];
        ens.values(static_cast<Eigen::Index>(p), j) = acc;
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(spec.threads, 1, spec.n_paths);
  if (threads == 1) {
    run_paths(0, spec.n_paths);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (spec.n_paths + threads - 1) / threads;
    for (std::size_t w = 0; w < threads; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(spec.n_paths, begin + chunk);
      if (begin < end) pool.emplace_back(run_paths, begin, end);
    }
  }
  return ens;
}

Quaterniond analytic_covariance(const ImaginaryAtomicMeasure& gamma, double t, double s) {
  validate(gamma);
  Quaterniond acc;
  for (const GammaAtom& a : gamma.atoms) {
    // E(xi conj(xi)) = 1 for each atom; cross terms vanish.
    acc += a.w * (exp_imag<double>(-t * a.x) * exp_imag<double>(-s * a.x).conj());
  }
  return acc;
}

double default_match_tol(const TimeGrid& times) {
  double m = 0.0;
  for (double t : times) m = std::max(m, std::abs(t));
  return 1e-9 * (1.0 + m);
}

std::vector<AutocovPoint> autocov_estimate(const ProcessEnsemble& ens, const std::vector<double>& lags,
                                           double match_tol) {
  const TimeGrid& times = ens.spec.times;
  const double tol = match_tol > 0.0 ? match_tol : default_match_tol(times);
  std::vector<AutocovPoint> out;
  for (double h : lags) {
    const IndexPairs pairs = pairs_for_lag(times, h, tol);
    if (pairs.empty()) {
      std::ostringstream os;
      os << "no grid pairs at lag " << h;
      throw Error(ErrorCode::NoPairsForLag, os.str());
    }
    const Quaterniond mean = mean_product(ens.values, pairs) / static_cast<double>(pairs.size());
    out.push_back({h, mean, pairs.size()});
  }
  return out;
}

StationarityReport stationarity_audit(const ProcessEnsemble& ens, const std::vector<double>& shifts,
                                      double match_tol) {
  const TimeGrid& times = ens.spec.times;
  const double tol = match_tol > 0.0 ? match_tol : default_match_tol(times);
  const auto n = static_cast<Eigen::Index>(times.size());

  QArray cov(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) cov(i, j) = mean_product(ens.values, {{i, j}});

  StationarityReport rep;
  for (double h : shifts) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto si = find_time(times, times[static_cast<std::size_t>(i)] + h, tol);
      if (!si) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto sj = find_time(times, times[static_cast<std::size_t>(j)] + h, tol);
        if (!sj) continue;
        rep.max_deviation = std::max(rep.max_deviation, (cov(i, j) - cov(*si, *sj)).norm());
        ++rep.comparisons;
      }
    }
  }
  if (rep.comparisons == 0) throw Error(ErrorCode::NoPairsForLag, "no shifted pairs on the grid");
  return rep;
}

AutocovPdReport pd_of_autocov(const ProcessEnsemble& ens, const TimeGrid& times, double match_tol) {
  validate_grid(times);
  std::vector<double> lags;
  for (double ti : times)
    for (double tj : times) lags.push_back(ti - tj);
  const auto est = autocov_estimate(ens, lags, match_tol);
  const auto n = static_cast<Eigen::Index>(times.size());
  AutocovPdReport rep;
  rep.gram.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) rep.gram(i, j) = est[static_cast<std::size_t>(i * n + j)].value;
  rep.min_eigenvalue = gram_min_eigenvalue(rep.gram);
  return rep;
}

}  // namespace qbochner
