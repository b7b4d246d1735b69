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

#ifndef QBOCHNER_QUATERNION_HPP
#define QBOCHNER_QUATERNION_HPP

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <limits>
#include <ostream>

namespace qbochner {

/// A pure imaginary quaternion x1*i1 + x2*i2 + x3*i3, stored as a point of R^3.
template <typename T>
using ImaginaryQuaternion = Eigen::Matrix<T, 3, 1>;

/// Real quaternion q0 + q1*i1 + q2*i2 + q3*i3 with i1^2 = i2^2 = -1 and
/// i3 = i1*i2. Multiplication is not commutative; every product in this
/// library keeps its operands in written order.
template <typename T>
class Quaternion {
 public:
  using Scalar = T;

  T q0 = T(0);
  T q1 = T(0);
  T q2 = T(0);
  T q3 = T(0);

  constexpr Quaternion() = default;
  // Implicit so that reals embed as i0-multiples (Eigen relies on Scalar(0)).
  constexpr Quaternion(T re) : q0(re) {}  // NOLINT(google-explicit-constructor)
  constexpr Quaternion(T a, T b, T c, T d) : q0(a), q1(b), q2(c), q3(d) {}

  static Quaternion FromParts(T re, const ImaginaryQuaternion<T>& im) {
    return Quaternion(re, im(0), im(1), im(2));
  }
  static Quaternion Pure(const ImaginaryQuaternion<T>& im) {
    return FromParts(T(0), im);
  }

  static constexpr Quaternion Zero() { return Quaternion(); }
  static constexpr Quaternion One() { return Quaternion(T(1)); }
  static constexpr Quaternion I1() { return Quaternion(T(0), T(1), T(0), T(0)); }
  static constexpr Quaternion I2() { return Quaternion(T(0), T(0), T(1), T(0)); }
  static constexpr Quaternion I3() { return Quaternion(T(0), T(0), T(0), T(1)); }

  constexpr T real() const { return q0; }
  ImaginaryQuaternion<T> imag() const { return ImaginaryQuaternion<T>(q1, q2, q3); }

  constexpr Quaternion conj() const { return Quaternion(q0, -q1, -q2, -q3); }
  constexpr T squaredNorm() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }
  T norm() const { return std::sqrt(squaredNorm()); }
  T imagNorm() const { return std::sqrt(q1 * q1 + q2 * q2 + q3 * q3); }

  Quaternion inverse() const {
    const T n2 = squaredNorm();
    return Quaternion(q0 / n2, -q1 / n2, -q2 / n2, -q3 / n2);
  }

  constexpr Quaternion operator-() const { return Quaternion(-q0, -q1, -q2, -q3); }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    q0 += o.q0; q1 += o.q1; q2 += o.q2; q3 += o.q3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    q0 -= o.q0; q1 -= o.q1; q2 -= o.q2; q3 -= o.q3;
    return *this;
  }
  // Right multiplication: *this = *this * o.
  constexpr Quaternion& operator*=(const Quaternion& o) {
    *this = *this * o;
    return *this;
  }
  constexpr Quaternion& operator*=(T s) {
    q0 *= s; q1 *= s; q2 *= s; q3 *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(T s) {
    q0 /= s; q1 /= s; q2 /= s; q3 /= s;
    return *this;
  }
  // Right division: *this = *this * o^{-1}.
  Quaternion& operator/=(const Quaternion& o) {
    *this = *this * o.inverse();
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }

  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
                      a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
                      a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
                      a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0);
  }
  friend constexpr Quaternion operator*(Quaternion a, T s) { return a *= s; }
  friend constexpr Quaternion operator*(T s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, T s) { return a /= s; }
  friend Quaternion operator/(Quaternion a, const Quaternion& b) { return a /= b; }

  friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.q0 == b.q0 && a.q1 == b.q1 && a.q2 == b.q2 && a.q3 == b.q3;
  }
  friend constexpr bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '[' << q.q0 << ", " << q.q1 << ", " << q.q2 << ", " << q.q3 << ']';
  }
};

using Quaterniond = Quaternion<double>;
using ImaginaryQuaterniond = ImaginaryQuaternion<double>;

template <typename T>
constexpr Quaternion<T> conj(const Quaternion<T>& q) { return q.conj(); }

template <typename T>
T abs(const Quaternion<T>& q) { return q.norm(); }

template <typename T>
constexpr T abs2(const Quaternion<T>& q) { return q.squaredNorm(); }

template <typename T>
constexpr T real(const Quaternion<T>& q) { return q.q0; }

template <typename T>
bool isfinite(const Quaternion<T>& q) {
  return std::isfinite(q.q0) && std::isfinite(q.q1) && std::isfinite(q.q2) && std::isfinite(q.q3);
}

template <typename T>
constexpr Quaternion<T> qmul(const Quaternion<T>& p, const Quaternion<T>& q) { return p * q; }

/// Unit direction x/|x|, with the convention that the direction of 0 is 0.
template <typename T>
ImaginaryQuaternion<T> direction(const ImaginaryQuaternion<T>& x) {
  const T n = x.norm();
  if (n == T(0)) return ImaginaryQuaternion<T>::Zero();
  return x / n;
}

/// e^x = cos|x| + (x/|x|) sin|x| for pure imaginary x; e^0 = 1.
template <typename T>
Quaternion<T> exp_imag(const ImaginaryQuaternion<T>& x) {
  const T n = x.norm();
  if (n == T(0)) return Quaternion<T>::One();
  const T s = std::sin(n) / n;
  return Quaternion<T>(std::cos(n), x(0) * s, x(1) * s, x(2) * s);
}

/// q = z1 + z2*i2 with z1, z2 in the slice C_{i1} (i1 plays the complex unit).
template <typename T>
struct ComplexPair {
  std::complex<T> z1;
  std::complex<T> z2;

  friend bool operator==(const ComplexPair& a, const ComplexPair& b) {
    return a.z1 == b.z1 && a.z2 == b.z2;
  }
};

template <typename T>
constexpr ComplexPair<T> to_complex_pair(const Quaternion<T>& q) {
  return {std::complex<T>(q.q0, q.q1), std::complex<T>(q.q2, q.q3)};
}

template <typename T>
constexpr Quaternion<T> from_complex_pair(const ComplexPair<T>& p) {
  return Quaternion<T>(p.z1.real(), p.z1.imag(), p.z2.real(), p.z2.imag());
}

}  // namespace qbochner

namespace Eigen {

template <typename T>
struct NumTraits<qbochner::Quaternion<T>> : GenericNumTraits<qbochner::Quaternion<T>> {
  using Real = T;
  using NonInteger = qbochner::Quaternion<T>;
  using Literal = qbochner::Quaternion<T>;
  using Nested = qbochner::Quaternion<T>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4 * NumTraits<T>::ReadCost,
    AddCost = 4 * NumTraits<T>::AddCost,
    MulCost = 16 * NumTraits<T>::MulCost + 12 * NumTraits<T>::AddCost
  };
  static inline Real epsilon() { return NumTraits<T>::epsilon(); }
  static inline Real dummy_precision() { return NumTraits<T>::dummy_precision(); }
  static inline int digits10() { return NumTraits<T>::digits10(); }
};

template <typename T, typename BinaryOp>
struct ScalarBinaryOpTraits<qbochner::Quaternion<T>, T, BinaryOp> {
  using ReturnType = qbochner::Quaternion<T>;
};

template <typename T, typename BinaryOp>
struct ScalarBinaryOpTraits<T, qbochner::Quaternion<T>, BinaryOp> {
  using ReturnType = qbochner::Quaternion<T>;
};

}  // namespace Eigen

#endif  // QBOCHNER_QUATERNION_HPP
