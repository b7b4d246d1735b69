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

// Atomic measures.
//
// An ImaginaryAtomicMeasure is a finite nonnegative measure on the pure
// imaginary quaternions (R^3). A SliceMeasure is a quaternion-valued atomic
// measure on the half line. A slice measure arises as the radial push-forward
// of some Gamma, mu = rho_*(Gamma + (x/|x|) Gamma) with rho(x) = |x|, exactly
// when every atom satisfies Re(v) >= |Im(v)| and the atom at radius 0 (if
// any) is real. That cone condition is what validate_slice() checks.

#ifndef QBOCHNER_MEASURES_HPP
#define QBOCHNER_MEASURES_HPP

#include <string>
#include <vector>

#include "qbochner/qlinalg.hpp"
#include "qbochner/quaternion.hpp"

namespace qbochner {

/// Relative radius-merging tolerance: radii within kMergeTol*(1 + max radius)
/// are treated as one atom.
inline constexpr double kMergeTol = 1e-9;

struct GammaAtom {
  ImaginaryQuaterniond x;
  double w = 0.0;
};

struct ImaginaryAtomicMeasure {
  std::vector<GammaAtom> atoms;

  double total_mass() const;
};

struct SliceAtom {
  double r = 0.0;
  Quaterniond v;
};

struct SliceMeasure {
  std::vector<SliceAtom> atoms;

  /// Total mass of Re(mu); equals phi(0) for the synthesized function.
  double real_mass() const;
  double max_radius() const;
};

/// Absolute merge tolerance for a measure whose largest radius is max_radius.
double merge_tolerance(double max_radius, double rel = kMergeTol);

/// Throws NegativeWeight (or NonFinite) if any atom is invalid.
void validate(const ImaginaryAtomicMeasure& gamma);

/// Merges atoms whose points lie within the merge tolerance (weights summed)
/// and drops zero-weight atoms. Points are ordered by radius.
ImaginaryAtomicMeasure normalize(const ImaginaryAtomicMeasure& gamma, double rel = kMergeTol);

/// Sorts by radius and merges radii within the merge tolerance (values summed).
SliceMeasure normalize(const SliceMeasure& mu, double rel = kMergeTol);

/// mu = rho_*(Gamma + (x/|x|) Gamma). Points within the merge tolerance of the
/// origin count as the origin, whose direction is 0.
SliceMeasure pushforward(const ImaginaryAtomicMeasure& gamma, double rel = kMergeTol);

/// A Gamma with pushforward(lift(mu)) = mu. Each atom a + v at radius r > 0
/// becomes weights (a+|v|)/2 at r*u and (a-|v|)/2 at -r*u with u = v/|v|
/// (u = i1 when v = 0); zero weights are dropped. Throws ConeViolation when
/// Re < |Im| - tol or the radius-0 atom has |Im| > tol.
ImaginaryAtomicMeasure lift(const SliceMeasure& mu, double tol = 1e-12);

struct AtomCheck {
  double r = 0.0;
  double margin = 0.0;  // Re(v) - |Im(v)|
  bool ok = true;
};

struct SliceReport {
  bool ok = true;
  double min_margin = 0.0;
  std::vector<AtomCheck> atoms;
  std::vector<std::string> issues;
};

/// Cone margin Re(v) - |Im(v)| of one atom value.
double cone_margin(const Quaterniond& v);

/// Checks radii, Re >= 0, Re >= |Im| per atom and Im(mu({0})) = 0, each up to
/// tol. Report-only; never throws.
SliceReport validate_slice(const SliceMeasure& mu, double tol = 0.0);

/// mu(s_m) = <E_m a, a> + <J0 E_m a, a> with J0 = J - J E({0}).
/// The real part of the first term and the imaginary part of the second are
/// kept (the discarded parts vanish identically). Throws InvalidSpectralSystem
/// if the system's invariants fail beyond tol or the result leaves the cone by
/// more than tol*|a|^2; cone residue below that is rounded onto the cone.
SliceMeasure measure_from_spectral_system(const SpectralSystemFD<double>& system, const QVectord& alpha,
                                          double tol = 1e-9);

/// A spectral system and vector reproducing pushforward(Gamma): one coordinate
/// per atom, E_m the coordinate projections of radius shell m, J the diagonal
/// of directions x_k/|x_k| (i1 at the origin), alpha_k = sqrt(w_k).
struct SpectralWitness {
  SpectralSystemFD<double> system;
  QVectord alpha;
};

SpectralWitness type_two_witness(const ImaginaryAtomicMeasure& gamma, double rel = kMergeTol);

// Measure arithmetic. Binary operations merge radii before combining.
SliceMeasure real_part(const SliceMeasure& mu);
SliceMeasure imag_part(const SliceMeasure& mu);  // mu - Re(mu)
SliceMeasure operator+(const SliceMeasure& a, const SliceMeasure& b);
SliceMeasure operator-(const SliceMeasure& a, const SliceMeasure& b);
SliceMeasure operator*(double c, const SliceMeasure& mu);
ImaginaryAtomicMeasure operator+(const ImaginaryAtomicMeasure& a, const ImaginaryAtomicMeasure& b);

/// sum |v| over atoms.
double total_variation(const SliceMeasure& mu);

/// Largest per-atom |v - v'| after aligning radii; missing atoms count as 0.
double max_atom_deviation(const SliceMeasure& a, const SliceMeasure& b, double rel = kMergeTol);

bool approx_equal(const SliceMeasure& a, const SliceMeasure& b, double tol, double rel = kMergeTol);

}  // namespace qbochner

#endif  // QBOCHNER_MEASURES_HPP
