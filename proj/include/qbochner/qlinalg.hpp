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

// Right-linear quaternionic matrix algebra on H^n.
//
// Vectors are columns; a matrix acts by the ordinary matrix-vector product
// with quaternion entries on the left, and scalars multiply vectors on the
// right, so A(xq) = (Ax)q. The inner product is <x, y> = sum conj(y_k) x_k.
//
// Spectral questions are answered through the complex adjoint representation
// chi, which sends each entry q = z1 + z2*i2 to the 2x2 complex block
// [[z1, z2], [-conj(z2), conj(z1)]]. chi is an injective real-algebra
// homomorphism that commutes with adjoints.

#ifndef QBOCHNER_QLINALG_HPP
#define QBOCHNER_QLINALG_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "qbochner/error.hpp"
#include "qbochner/quaternion.hpp"

namespace qbochner {

template <typename T>
using QMatrix = Eigen::Matrix<Quaternion<T>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using QVector = Eigen::Matrix<Quaternion<T>, Eigen::Dynamic, 1>;
template <typename T>
using CMatrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using CVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;
template <typename T>
using RVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using QMatrixd = QMatrix<double>;
using QVectord = QVector<double>;
using CMatrixd = CMatrix<double>;

// ---------------------------------------------------------------------------
// Basic operations

template <typename T>
QMatrix<T> adjoint(const QMatrix<T>& a) {
  QMatrix<T> out(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  return out;
}

template <typename T>
QMatrix<T> qidentity(Eigen::Index n) {
  QMatrix<T> out = QMatrix<T>::Constant(n, n, Quaternion<T>());
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = Quaternion<T>::One();
  return out;
}

template <typename T>
QMatrix<T> qzero(Eigen::Index rows, Eigen::Index cols) {
  return QMatrix<T>::Constant(rows, cols, Quaternion<T>());
}

/// <x, y> = sum_k conj(y_k) x_k. Right-linear in x, conjugate-linear in y.
template <typename T>
Quaternion<T> inner(const QVector<T>& x, const QVector<T>& y) {
  Quaternion<T> acc;
  for (Eigen::Index k = 0; k < x.size(); ++k) acc += y(k).conj() * x(k);
  return acc;
}

template <typename T>
T vnorm(const QVector<T>& x) {
  T acc = T(0);
  for (Eigen::Index k = 0; k < x.size(); ++k) acc += x(k).squaredNorm();
  return std::sqrt(acc);
}

/// Largest entry modulus.
template <typename T>
T max_abs(const QMatrix<T>& a) {
  T m = T(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) m = std::max(m, a.data()[i].norm());
  return m;
}

/// Frobenius norm; an upper bound for the operator norm.
template <typename T>
T frobenius(const QMatrix<T>& a) {
  T acc = T(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += a.data()[i].squaredNorm();
  return std::sqrt(acc);
}

template <typename T>
bool is_self_adjoint(const QMatrix<T>& a, T tol) {
  return a.rows() == a.cols() && max_abs<T>(a - adjoint(a)) <= tol * std::max(T(1), max_abs(a));
}

template <typename T>
bool is_anti_self_adjoint(const QMatrix<T>& a, T tol) {
  return a.rows() == a.cols() && max_abs<T>(a + adjoint(a)) <= tol * std::max(T(1), max_abs(a));
}

// ---------------------------------------------------------------------------
// Complex adjoint representation

template <typename T>
CMatrix<T> chi(const QMatrix<T>& a) {
  CMatrix<T> out(2 * a.rows(), 2 * a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const auto [z1, z2] = to_complex_pair(a(i, j));
      out(2 * i, 2 * j) = z1;
      out(2 * i, 2 * j + 1) = z2;
      out(2 * i + 1, 2 * j) = -std::conj(z2);
      out(2 * i + 1, 2 * j + 1) = std::conj(z1);
    }
  }
  return out;
}

/// Left inverse of chi. Each 2x2 block is projected onto the quaternionic
/// subspace (the average of its two redundant encodings), so rounding noise
/// in a computed chi(A) does not leak into the result.
template <typename T>
QMatrix<T> unchi(const CMatrix<T>& m) {
  const Eigen::Index rows = m.rows() / 2;
  const Eigen::Index cols = m.cols() / 2;
  QMatrix<T> out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const std::complex<T> z1 = (m(2 * i, 2 * j) + std::conj(m(2 * i + 1, 2 * j + 1))) / T(2);
      const std::complex<T> z2 = (m(2 * i, 2 * j + 1) - std::conj(m(2 * i + 1, 2 * j))) / T(2);
      out(i, j) = from_complex_pair(ComplexPair<T>{z1, z2});
    }
  }
  return out;
}

/// The quaternion vector x whose chi-image has v as its first column.
template <typename T>
QVector<T> qvector_from_complex(const CVector<T>& v) {
  QVector<T> x(v.size() / 2);
  for (Eigen::Index k = 0; k < x.size(); ++k)
    x(k) = from_complex_pair(ComplexPair<T>{v(2 * k), -std::conj(v(2 * k + 1))});
  return x;
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver (cyclic Jacobi)

template <typename T>
struct HermitianEigen {
  RVector<T> values;   // ascending
  CMatrix<T> vectors;  // orthonormal columns, vectors.col(k) pairs with values(k)
  int sweeps = 0;
};

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi sweeps
/// in fixed (p, q) order. Throws NotHermitian when
/// max|H - H^*| > tol * max(1, max|H|).
template <typename T>
HermitianEigen<T> hermitian_eigen(const CMatrix<T>& h, T tol) {
  using C = std::complex<T>;
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw Error(ErrorCode::NotHermitian, "matrix is not square");
  const T scale = std::max(T(1), h.cwiseAbs().maxCoeff());
  if (n > 0 && (h - h.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw Error(ErrorCode::NotHermitian, "H - H^* exceeds tolerance");

  CMatrix<T> a = (h + h.adjoint()) / T(2);
  CMatrix<T> v = CMatrix<T>::Identity(n, n);
  const T eps = std::numeric_limits<T>::epsilon();

  int sweep = 0;
  for (; sweep < 100; ++sweep) {
    T off = T(0);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    const T total = a.squaredNorm();
    if (off == T(0) || off <= eps * eps * total) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const C g = a(p, q);
        const T absg = std::abs(g);
        if (absg == T(0)) continue;
        const T app = a(p, p).real();
        const T aqq = a(q, q).real();
        if (sweep > 3 && absg <= eps * T(0.01) * (std::abs(app) + std::abs(aqq))) {
          a(p, q) = a(q, p) = C(0);
          continue;
        }
        const T theta = (aqq - app) / (T(2) * absg);
        T t;
        if (std::abs(theta) > T(1) / std::sqrt(eps)) {
          t = T(1) / (T(2) * theta);
        } else {
          t = (theta >= T(0) ? T(1) : T(-1)) / (std::abs(theta) + std::sqrt(theta * theta + T(1)));
        }
        const T c = T(1) / std::sqrt(t * t + T(1));
        const T s = t * c;
        const C phase = std::conj(g) / absg;
        // W = [[c, s], [-phase*s, phase*c]] on the (p, q) plane; A <- W^* A W.
        const C wqp = -phase * s;
        const C wqq = phase * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const C akp = a(k, p);
          const C akq = a(k, q);
          a(k, p) = akp * c + akq * wqp;
          a(k, q) = akp * s + akq * wqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const C apk = a(p, k);
          const C aqk = a(q, k);
          a(p, k) = c * apk + std::conj(wqp) * aqk;
          a(q, k) = s * apk + std::conj(wqq) * aqk;
        }
        a(p, q) = a(q, p) = C(0);
        a(p, p) = C(a(p, p).real());
        a(q, q) = C(a(q, q).real());
        for (Eigen::Index k = 0; k < n; ++k) {
          const C vkp = v(k, p);
          const C vkq = v(k, q);
          v(k, p) = vkp * c + vkq * wqp;
          v(k, q) = vkp * s + vkq * wqq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() < a(y, y).real();
  });
  HermitianEigen<T> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  out.sweeps = sweep;
  return out;
}

// ---------------------------------------------------------------------------
// Positive semidefiniteness

template <typename T>
struct PsdReport {
  bool psd = false;
  T min_eigenvalue = T(0);
};

/// Quaternionic H is PSD iff chi(H) is; the smallest eigenvalue of chi(H) is
/// the smallest standard eigenvalue of H.
template <typename T>
PsdReport<T> is_psd(const QMatrix<T>& h, T tol) {
  if (!is_self_adjoint(h, tol)) throw Error(ErrorCode::NotHermitian, "matrix is not self-adjoint");
  if (h.size() == 0) return {true, T(0)};
  const auto eig = hermitian_eigen<T>(chi(h), tol);
  const T lo = eig.values(0);
  return {lo >= -tol, lo};
}

// ---------------------------------------------------------------------------
// Exponentials of anti-self-adjoint operators

/// Factored t -> e^{tA} for anti-self-adjoint A. -i*chi(A) is Hermitian, so
/// chi(A) = V diag(i*lambda) V^* and chi(e^{tA}) = V diag(e^{i t lambda}) V^*.
template <typename T>
class AntiSelfAdjointExp {
 public:
  AntiSelfAdjointExp(const QMatrix<T>& a, T tol) : generator_(a) {
    if (!is_anti_self_adjoint(a, tol))
      throw Error(ErrorCode::NotAntiSelfAdjoint, "generator is not anti-self-adjoint");
    const CMatrix<T> h = std::complex<T>(T(0), T(-1)) * chi(a);
    eig_ = hermitian_eigen<T>(h, tol);
  }

  QMatrix<T> operator()(T t) const {
    const Eigen::Index m = eig_.values.size();
    CVector<T> phases(m);
    for (Eigen::Index k = 0; k < m; ++k) phases(k) = std::polar(T(1), t * eig_.values(k));
    const CMatrix<T> u = eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
    return unchi(u);
  }

  const QMatrix<T>& generator() const { return generator_; }
  /// Eigenvalues lambda of -i*chi(A), ascending; chi(A) has spectrum i*lambda.
  const RVector<T>& chi_frequencies() const { return eig_.values; }
  const CMatrix<T>& chi_vectors() const { return eig_.vectors; }

 private:
  QMatrix<T> generator_;
  HermitianEigen<T> eig_;
};

template <typename T>
QMatrix<T> expm_asa(const QMatrix<T>& a, T t, T tol = T(1e-10)) {
  return AntiSelfAdjointExp<T>(a, tol)(t);
}

/// Forward difference (U(h)x - x)/h of a one-parameter group at the origin.
template <typename T, typename Group>
QVector<T> generator_fd(const Group& u, const QVector<T>& x, T h) {
  if (!(h > T(0))) throw Error(ErrorCode::InvalidInput, "step h must be positive");
  const QMatrix<T> uh = u(h);
  QVector<T> out = uh * x;
  for (Eigen::Index k = 0; k < x.size(); ++k) out(k) = (out(k) - x(k)) / h;
  return out;
}

// ---------------------------------------------------------------------------
// Spectral systems

/// Finite resolution of the identity {E_m} on radii s_m >= 0 (ascending),
/// together with a unitary anti-self-adjoint J commuting with every E_m.
template <typename T>
struct SpectralSystemFD {
  std::vector<T> radii;
  std::vector<QMatrix<T>> projections;
  QMatrix<T> J;

  Eigen::Index dim() const { return J.rows(); }

  /// Index of the radius-0 projection, if any.
  std::optional<std::size_t> kernel_index() const {
    if (!radii.empty() && radii.front() == T(0)) return std::size_t{0};
    return std::nullopt;
  }

  QMatrix<T> kernel_projection() const {
    if (auto k = kernel_index()) return projections[*k];
    return qzero<T>(dim(), dim());
  }

  /// J0 = J - J E({0}).
  QMatrix<T> j0() const { return J - J * kernel_projection(); }
};

template <typename T>
struct SpectralAudit {
  T self_adjoint = T(0);   // max |E_m - E_m^*|
  T idempotent = T(0);     // max |E_m^2 - E_m|
  T orthogonal = T(0);     // max |E_m E_l|, m != l
  T completeness = T(0);   // max |sum E_m - I|
  T j_anti = T(0);         // max |J + J^*|
  T j_unitary = T(0);      // max |J^* J - I|
  T commute = T(0);        // max |J E_m - E_m J|
  bool radii_ok = true;    // ascending, distinct, nonnegative

  T worst() const {
    return std::max({self_adjoint, idempotent, orthogonal, completeness, j_anti, j_unitary, commute});
  }
};

template <typename T>
SpectralAudit<T> audit_spectral_system(const SpectralSystemFD<T>& s) {
  SpectralAudit<T> r;
  const Eigen::Index n = s.dim();
  if (s.radii.size() != s.projections.size()) r.radii_ok = false;
  for (std::size_t m = 0; m < s.radii.size(); ++m) {
    if (s.radii[m] < T(0) || (m > 0 && !(s.radii[m] > s.radii[m - 1]))) r.radii_ok = false;
  }
  QMatrix<T> sum = qzero<T>(n, n);
  for (std::size_t m = 0; m < s.projections.size(); ++m) {
    const QMatrix<T>& e = s.projections[m];
    if (e.rows() != n || e.cols() != n) {
      r.radii_ok = false;
      continue;
    }
    sum += e;
    r.self_adjoint = std::max(r.self_adjoint, max_abs<T>(e - adjoint(e)));
    r.idempotent = std::max(r.idempotent, max_abs<T>(e * e - e));
    r.commute = std::max(r.commute, max_abs<T>(s.J * e - e * s.J));
    for (std::size_t l = m + 1; l < s.projections.size(); ++l)
      r.orthogonal = std::max(r.orthogonal, max_abs<T>(e * s.projections[l]));
  }
  r.completeness = max_abs<T>(sum - qidentity<T>(n));
  r.j_anti = max_abs<T>(s.J + adjoint(s.J));
  r.j_unitary = max_abs<T>(adjoint(s.J) * s.J - qidentity<T>(n));
  return r;
}

namespace detail {

/// Quaternionic orthonormal basis (as columns) of the right-span of the
/// given vectors, of the requested dimension. Pivoted Gram-Schmidt: each step
/// takes the candidate with the largest residual, then reorthogonalizes.
template <typename T>
QMatrix<T> orthonormal_basis(const std::vector<QVector<T>>& candidates, Eigen::Index n, std::size_t dim) {
  QMatrix<T> basis(n, static_cast<Eigen::Index>(dim));
  std::vector<bool> used(candidates.size(), false);
  auto residual = [&](QVector<T> x, std::size_t count) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < count; ++j) {
        const QVector<T> e = basis.col(static_cast<Eigen::Index>(j));
        x -= e * inner(x, e);
      }
    }
    return x;
  };
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t best = candidates.size();
    T best_norm = T(-1);
    QVector<T> best_vec;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (used[c]) continue;
      QVector<T> r = residual(candidates[c], k);
      const T rn = vnorm(r);
      if (rn > best_norm) {
        best_norm = rn;
        best = c;
        best_vec = std::move(r);
      }
    }
    if (best == candidates.size() || !(best_norm > T(0)))
      throw Error(ErrorCode::InvalidSpectralSystem, "eigenspace basis is rank deficient");
    used[best] = true;
    basis.col(static_cast<Eigen::Index>(k)) = best_vec / best_norm;
  }
  return basis;
}

}  // namespace detail

/// Spectral system of an anti-self-adjoint A: A = sum_m s_m J E_m, with s_m
/// the distinct singular values of A. Singular values closer than tol*|A|
/// are merged; the cluster below tol*|A| is the kernel, where J acts as
/// e -> e*i1 on a computed orthonormal kernel basis.
template <typename T>
SpectralSystemFD<T> spectral_decompose_asa(const QMatrix<T>& a, T tol = T(1e-9)) {
  const AntiSelfAdjointExp<T> factored(a, tol);
  const RVector<T>& lambda = factored.chi_frequencies();
  const CMatrix<T>& vecs = factored.chi_vectors();
  const Eigen::Index n = a.rows();
  const Eigen::Index m2 = lambda.size();

  SpectralSystemFD<T> sys;
  sys.J = qzero<T>(n, n);
  if (n == 0) return sys;

  const T norm_a = lambda.cwiseAbs().maxCoeff();
  const T cluster_tol = tol * norm_a;

  std::vector<Eigen::Index> order(static_cast<std::size_t>(m2));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return std::abs(lambda(x)) < std::abs(lambda(y));
  });

  std::vector<std::vector<Eigen::Index>> clusters;
  T cluster_start = T(0);
  for (Eigen::Index idx : order) {
    const T mag = std::abs(lambda(idx));
    if (clusters.empty() || mag - cluster_start > cluster_tol) {
      clusters.push_back({});
      cluster_start = mag;
    }
    clusters.back().push_back(idx);
  }

  for (const auto& cl : clusters) {
    if (cl.size() % 2 != 0)
      throw Error(ErrorCode::InvalidSpectralSystem, "unpaired eigenvalue in chi spectrum");
    T radius = T(0);
    for (Eigen::Index idx : cl) radius += std::abs(lambda(idx));
    radius /= static_cast<T>(cl.size());
    const bool kernel = radius <= cluster_tol;
    if (kernel) radius = T(0);

    std::vector<QVector<T>> cands;
    cands.reserve(cl.size());
    for (Eigen::Index idx : cl) cands.push_back(qvector_from_complex<T>(vecs.col(idx)));
    const QMatrix<T> basis = detail::orthonormal_basis<T>(cands, n, cl.size() / 2);
    const QMatrix<T> e = basis * adjoint(basis);

    if (kernel) {
      QMatrix<T> k = basis;
      for (Eigen::Index i = 0; i < k.size(); ++i) k.data()[i] = k.data()[i] * Quaternion<T>::I1();
      sys.J += k * adjoint(basis);
    } else {
      QMatrix<T> part = a * e;
      for (Eigen::Index i = 0; i < part.size(); ++i) part.data()[i] /= radius;
      sys.J += part;
    }
    sys.radii.push_back(radius);
    sys.projections.push_back(e);
  }
  return sys;
}

}  // namespace qbochner

#endif  // QBOCHNER_QLINALG_HPP
