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

#include "qbochner/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qbochner/error.hpp"

namespace qbochner {
namespace {

struct Shell {
  double radius = 0.0;
  std::vector<std::size_t> members;
};

// Groups ascending radii into shells. A shell collects consecutive radii
// within tol of its first member; the shell radius is the members' mean.
// A shell starting within tol of 0 is pinned to radius 0.
std::vector<Shell> group_radii(const std::vector<double>& sorted_radii, double tol) {
  std::vector<Shell> shells;
  double start = 0.0;
  for (std::size_t i = 0; i < sorted_radii.size(); ++i) {
    const double r = sorted_radii[i];
    if (shells.empty() || r - start > tol) {
      shells.push_back({});
      start = r;
    }
    shells.back().members.push_back(i);
  }
  for (Shell& s : shells) {
    double sum = 0.0;
    for (std::size_t i : s.members) sum += sorted_radii[i];
    s.radius = sum / static_cast<double>(s.members.size());
    if (sorted_radii[s.members.front()] <= tol) s.radius = 0.0;
  }
  return shells;
}

std::vector<std::size_t> order_by(const std::vector<double>& keys) {
  std::vector<std::size_t> idx(keys.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  return idx;
}

}  // namespace

double ImaginaryAtomicMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms) m += a.w;
  return m;
}

double SliceMeasure::real_mass() const {
  double m = 0.0;
  for (const auto& a : atoms) m += a.v.q0;
  return m;
}

double SliceMeasure::max_radius() const {
  double m = 0.0;
  for (const auto& a : atoms) m = std::max(m, a.r);
  return m;
}

double merge_tolerance(double max_radius, double rel) { return rel * (1.0 + max_radius); }

void validate(const ImaginaryAtomicMeasure& gamma) {
  for (std::size_t k = 0; k < gamma.atoms.size(); ++k) {
    const auto& a = gamma.atoms[k];
    if (!std::isfinite(a.w) || !a.x.allFinite())
      throw Error(ErrorCode::NonFinite, "atom " + std::to_string(k) + " is not finite");
    if (a.w < 0.0) throw Error(ErrorCode::NegativeWeight, "atom " + std::to_string(k) + " has negative weight");
  }
}

ImaginaryAtomicMeasure normalize(const ImaginaryAtomicMeasure& gamma, double rel) {
  validate(gamma);
  double max_r = 0.0;
  for (const auto& a : gamma.atoms) max_r = std::max(max_r, a.x.norm());
  const double tol = merge_tolerance(max_r, rel);

  std::vector<double> radii;
  for (const auto& a : gamma.atoms) radii.push_back(a.x.norm());
  ImaginaryAtomicMeasure out;
  for (std::size_t i : order_by(radii)) {
    const auto& a = gamma.atoms[i];
    if (a.w == 0.0) continue;
    const bool at_origin = a.x.norm() <= tol;
    auto hit = std::find_if(out.atoms.begin(), out.atoms.end(), [&](const GammaAtom& b) {
      return at_origin ? b.x.isZero(0.0) : (b.x - a.x).norm() <= tol;
    });
    if (hit != out.atoms.end()) {
      hit->w += a.w;
    } else {
      out.atoms.push_back({at_origin ? ImaginaryQuaterniond::Zero() : a.x, a.w});
    }
  }
  return out;
}

SliceMeasure normalize(const SliceMeasure& mu, double rel) {
  for (const auto& a : mu.atoms) {
    if (!std::isfinite(a.r) || !isfinite(a.v)) throw Error(ErrorCode::NonFinite, "slice atom is not finite");
    if (a.r < 0.0) throw Error(ErrorCode::InvalidInput, "slice atom has negative radius");
  }
  std::vector<double> radii;
  for (const auto& a : mu.atoms) radii.push_back(a.r);
  const auto idx = order_by(radii);
  std::vector<double> sorted;
  for (std::size_t i : idx) sorted.push_back(radii[i]);
  SliceMeasure out;
  for (const Shell& s : group_radii(sorted, merge_tolerance(mu.max_radius(), rel))) {
    SliceAtom atom{s.radius, Quaterniond()};
    for (std::size_t m : s.members) atom.v += mu.atoms[idx[m]].v;
    out.atoms.push_back(atom);
  }
  return out;
}

SliceMeasure pushforward(const ImaginaryAtomicMeasure& gamma, double rel) {
  const ImaginaryAtomicMeasure g = normalize(gamma, rel);
  std::vector<double> radii;
  for (const auto& a : g.atoms) radii.push_back(a.x.norm());
  double max_r = 0.0;
  for (double r : radii) max_r = std::max(max_r, r);

  // normalize() already orders atoms by radius.
  SliceMeasure out;
  for (const Shell& s : group_radii(radii, merge_tolerance(max_r, rel))) {
    SliceAtom atom{s.radius, Quaterniond()};
    for (std::size_t m : s.members) {
      const GammaAtom& a = g.atoms[m];
      atom.v += Quaterniond::FromParts(a.w, a.w * direction(a.x));
    }
    out.atoms.push_back(atom);
  }
  return out;
}

double cone_margin(const Quaterniond& v) { return v.q0 - v.imagNorm(); }

ImaginaryAtomicMeasure lift(const SliceMeasure& mu, double tol) {
  const SliceMeasure m = normalize(mu);
  ImaginaryAtomicMeasure out;
  for (const SliceAtom& atom : m.atoms) {
    const double a = atom.v.q0;
    const ImaginaryQuaterniond v = atom.v.imag();
    const double vn = v.norm();
    if (a < vn - tol) {
      std::ostringstream os;
      os << "atom at r=" << atom.r << " has Re=" << a << " < |Im|=" << vn;
      throw Error(ErrorCode::ConeViolation, os.str());
    }
    if (atom.r == 0.0) {
      if (vn > tol) throw Error(ErrorCode::ConeViolation, "atom at r=0 has a nonzero imaginary part");
      if (a > 0.0) out.atoms.push_back({ImaginaryQuaterniond::Zero(), a});
      continue;
    }
    const ImaginaryQuaterniond u = vn == 0.0 ? ImaginaryQuaterniond(1.0, 0.0, 0.0) : ImaginaryQuaterniond(v / vn);
    const double w_plus = (a + vn) / 2.0;
    const double w_minus = std::max(0.0, (a - vn) / 2.0);
    if (w_plus > 0.0) out.atoms.push_back({atom.r * u, w_plus});
    if (w_minus > 0.0) out.atoms.push_back({-atom.r * u, w_minus});
  }
  return out;
}

SliceReport validate_slice(const SliceMeasure& mu, double tol) {
  SliceReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < mu.atoms.size(); ++k) {
    const SliceAtom& a = mu.atoms[k];
    AtomCheck chk{a.r, cone_margin(a.v), true};
    std::ostringstream os;
    if (!std::isfinite(a.r) || !isfinite(a.v)) {
      chk.ok = false;
      os << "atom " << k << ": non-finite";
    } else if (a.r < 0.0) {
      chk.ok = false;
      os << "atom " << k << ": negative radius";
    } else if (k > 0 && !(a.r > mu.atoms[k - 1].r)) {
      chk.ok = false;
      os << "atom " << k << ": radii not strictly ascending";
    } else if (a.v.q0 < -tol) {
      chk.ok = false;
      os << "atom " << k << ": negative real part";
    } else if (chk.margin < -tol) {
      chk.ok = false;
      os << "atom " << k << ": |Im| exceeds Re by " << -chk.margin;
    } else if (a.r == 0.0 && a.v.imagNorm() > tol) {
      chk.ok = false;
      os << "atom " << k << ": imaginary mass at radius 0";
    }
    if (!chk.ok) {
      rep.ok = false;
      rep.issues.push_back(os.str());
    }
    rep.min_margin = std::min(rep.min_margin, chk.margin);
    rep.atoms.push_back(chk);
  }
  if (mu.atoms.empty()) rep.min_margin = 0.0;
  return rep;
}

SliceMeasure measure_from_spectral_system(const SpectralSystemFD<double>& system, const QVectord& alpha,
                                          double tol) {
  const auto audit = audit_spectral_system(system);
  if (!audit.radii_ok || audit.worst() > tol)
    throw Error(ErrorCode::InvalidSpectralSystem, "spectral system invariants fail");
  if (alpha.size() != system.dim())
    throw Error(ErrorCode::InvalidSpectralSystem, "vector dimension does not match the system");

  const double scale = std::max(1.0, vnorm(alpha) * vnorm(alpha));
  const QMatrixd j0 = system.j0();
  SliceMeasure out;
  for (std::size_t m = 0; m < system.radii.size(); ++m) {
    const QVectord ea = system.projections[m] * alpha;
    double re = inner(ea, alpha).q0;
    ImaginaryQuaterniond im = ImaginaryQuaterniond::Zero();
    if (system.radii[m] > 0.0) im = inner(QVectord(j0 * ea), alpha).imag();
    const double margin = re - im.norm();
    if (margin < -tol * scale)
      throw Error(ErrorCode::InvalidSpectralSystem, "induced measure leaves the slice-condensed cone");
    if (margin < 0.0) re = Quaterniond::Pure(im).imagNorm();
    out.atoms.push_back({system.radii[m], Quaterniond::FromParts(re, im)});
  }
  return out;
}

SpectralWitness type_two_witness(const ImaginaryAtomicMeasure& gamma, double rel) {
  const ImaginaryAtomicMeasure g = normalize(gamma, rel);
  const auto n = static_cast<Eigen::Index>(g.atoms.size());
  std::vector<double> radii;
  double max_r = 0.0;
  for (const auto& a : g.atoms) {
    radii.push_back(a.x.norm());
    max_r = std::max(max_r, radii.back());
  }

  SpectralWitness w;
  w.alpha.resize(n);
  w.system.J = qzero<double>(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const GammaAtom& a = g.atoms[static_cast<std::size_t>(k)];
    w.alpha(k) = Quaterniond(std::sqrt(a.w));
    w.system.J(k, k) = a.x.isZero(0.0) ? Quaterniond::I1() : Quaterniond::Pure(direction(a.x));
  }
  for (const Shell& s : group_radii(radii, merge_tolerance(max_r, rel))) {
    QMatrixd e = qzero<double>(n, n);
    for (std::size_t m : s.members) {
      const auto k = static_cast<Eigen::Index>(m);
      e(k, k) = Quaterniond::One();
      // Points pinned to the origin shell act as the origin.
      if (s.radius == 0.0) w.system.J(k, k) = Quaterniond::I1();
    }
    w.system.radii.push_back(s.radius);
    w.system.projections.push_back(e);
  }
  return w;
}

SliceMeasure real_part(const SliceMeasure& mu) {
  SliceMeasure out = mu;
  for (auto& a : out.atoms) a.v = Quaterniond(a.v.q0);
  return out;
}

SliceMeasure imag_part(const SliceMeasure& mu) {
  SliceMeasure out = mu;
  for (auto& a : out.atoms) a.v = Quaterniond::Pure(a.v.imag());
  return out;
}

SliceMeasure operator+(const SliceMeasure& a, const SliceMeasure& b) {
  SliceMeasure joined = a;
  joined.atoms.insert(joined.atoms.end(), b.atoms.begin(), b.atoms.end());
  return normalize(joined);
}

SliceMeasure operator*(double c, const SliceMeasure& mu) {
  SliceMeasure out = mu;
  for (auto& a : out.atoms) a.v *= c;
  return out;
}

SliceMeasure operator-(const SliceMeasure& a, const SliceMeasure& b) { return a + (-1.0) * b; }

ImaginaryAtomicMeasure operator+(const ImaginaryAtomicMeasure& a, const ImaginaryAtomicMeasure& b) {
  ImaginaryAtomicMeasure joined = a;
  joined.atoms.insert(joined.atoms.end(), b.atoms.begin(), b.atoms.end());
  return normalize(joined);
}

double total_variation(const SliceMeasure& mu) {
  double tv = 0.0;
  for (const auto& a : mu.atoms) tv += a.v.norm();
  return tv;
}

double max_atom_deviation(const SliceMeasure& a, const SliceMeasure& b, double rel) {
  SliceMeasure joined = a;
  for (const auto& atom : b.atoms) joined.atoms.push_back({atom.r, -atom.v});
  double dev = 0.0;
  for (const auto& atom : normalize(joined, rel).atoms) dev = std::max(dev, atom.v.norm());
  return dev;
}

bool approx_equal(const SliceMeasure& a, const SliceMeasure& b, double tol, double rel) {
  return max_atom_deviation(a, b, rel) <= tol;
}

}  // namespace qbochner
