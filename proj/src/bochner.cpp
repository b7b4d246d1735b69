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

#include "qbochner/bochner.hpp"

#include <algorithm>
#include <cmath>

#include "qbochner/error.hpp"
#include "qbochner/random.hpp"

namespace qbochner {

void require_cone(const SliceMeasure& mu) {
  const double tol = 1e-12 * std::max(1.0, total_variation(mu));
  const SliceReport rep = validate_slice(normalize(mu), tol);
  if (!rep.ok) throw Error(ErrorCode::ConeViolation, rep.issues.front());
}

Quaterniond synth_unchecked(const SliceMeasure& mu, double t) {
  Quaterniond acc;
  for (const SliceAtom& a : mu.atoms) {
    const double c = std::cos(t * a.r);
    const double s = std::sin(t * a.r);
    acc += Quaterniond(a.v.q0 * c, a.v.q1 * s, a.v.q2 * s, a.v.q3 * s);
  }
  return acc;
}

Quaterniond synth_from_slice(const SliceMeasure& mu, double t) {
  require_cone(mu);
  return synth_unchecked(mu, t);
}

Quaterniond synth_from_gamma(const ImaginaryAtomicMeasure& gamma, double t) {
  validate(gamma);
  Quaterniond acc;
  for (const GammaAtom& a : gamma.atoms) acc += a.w * exp_imag<double>(t * a.x);
  return acc;
}

PDFunctionSpec PDFunctionSpec::FromSlice(SliceMeasure mu) {
  require_cone(mu);
  return PDFunctionSpec(std::move(mu));
}

PDFunctionSpec PDFunctionSpec::FromGamma(ImaginaryAtomicMeasure gamma) {
  validate(gamma);
  return PDFunctionSpec(std::move(gamma));
}

Quaterniond PDFunctionSpec::operator()(double t) const {
  if (const auto* mu = std::get_if<SliceMeasure>(&source_)) return synth_unchecked(*mu, t);
  const auto& gamma = std::get<ImaginaryAtomicMeasure>(source_);
  Quaterniond acc;
  for (const GammaAtom& a : gamma.atoms) acc += a.w * exp_imag<double>(t * a.x);
  return acc;
}

double PDFunctionSpec::value_at_zero() const {
  if (const auto* mu = std::get_if<SliceMeasure>(&source_)) return mu->real_mass();
  return std::get<ImaginaryAtomicMeasure>(source_).total_mass();
}

void validate_grid(const TimeGrid& times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw Error(ErrorCode::NonFinite, "time grid contains a non-finite value");
    if (i > 0 && !(times[i] > times[i - 1]))
      throw Error(ErrorCode::InvalidInput, "time grid must be strictly ascending");
  }
}

double gram_min_eigenvalue(const QMatrixd& g, double herm_tol) {
  if (g.size() == 0) return 0.0;
  return hermitian_eigen<double>(chi(g), herm_tol).values(0);
}

PdReport check_positive_definite(const PhiFunction& phi, const std::vector<TimeGrid>& grids, double tol) {
  PdReport rep;
  const Quaterniond phi0 = phi(0.0);
  const double sym_tol = 1e-10 * std::max(1.0, phi0.norm());
  for (const TimeGrid& grid : grids) {
    validate_grid(grid);
    for (double ti : grid)
      for (double tj : grid) {
        const double d = ti - tj;
        rep.symmetry_error = std::max(rep.symmetry_error, (phi(-d) - phi(d).conj()).norm());
      }
  }
  rep.symmetric = rep.symmetry_error <= sym_tol;
  if (!rep.symmetric) return rep;

  rep.pass = true;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const TimeGrid& grid : grids) {
    GridCheck chk;
    chk.n = grid.size();
    chk.tol = tol > 0.0 ? tol : 1e-9 * phi0.norm() * static_cast<double>(grid.size());
    chk.min_eigenvalue = gram_min_eigenvalue(gram(phi, grid));
    chk.pass = chk.min_eigenvalue >= -chk.tol;
    rep.pass = rep.pass && chk.pass;
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, chk.min_eigenvalue);
    rep.grids.push_back(chk);
  }
  if (grids.empty()) rep.min_eigenvalue = 0.0;
  return rep;
}

double uniqueness_probe(const SliceMeasure& a, const SliceMeasure& b, const TimeGrid& times) {
  double dev = 0.0;
  for (double t : times) dev = std::max(dev, (synth_unchecked(a, t) - synth_unchecked(b, t)).norm());
  return dev;
}

std::vector<TimeGrid> random_grids(std::uint64_t seed, std::size_t count, std::size_t max_n, double t_max) {
  CounterRng rng(seed);
  std::vector<TimeGrid> grids;
  max_n = std::max<std::size_t>(max_n, 2);
  for (std::size_t g = 0; g < count; ++g) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max_n - 1));
    TimeGrid grid;
    while (grid.size() < n) {
      grid.push_back(t_max * (2.0 * rng.uniform() - 1.0));
      std::sort(grid.begin(), grid.end());
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    grids.push_back(std::move(grid));
  }
  return grids;
}

}  // namespace qbochner
