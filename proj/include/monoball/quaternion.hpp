#pragma once

/**
 * Real quaternions H with units 1, e1, e2, e3 and the reduced-quaternion
 * subspace A = span{1, e1, e2}.
 *
 * Multiplication follows e_i e_j + e_j e_i = -2 delta_ij, e1 e2 = e3.
 * The product is not commutative, so left and right multiplication by a
 * basis unit are separate operations.
 *
 * The scalar type is a template parameter. Two backends are used in
 * practice: `Rational` (exact identities) and `double` (quadrature and
 * pointwise evaluation). Conversion between them is explicit.
 */

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>

#include "monoball/rational.hpp"

namespace monoball {

template <class T>
struct Quaternion {
  T a0{}, a1{}, a2{}, a3{};

  constexpr Quaternion() = default;
  constexpr Quaternion(T s, T i, T j, T k)
      : a0(std::move(s)), a1(std::move(i)), a2(std::move(j)), a3(std::move(k)) {}
  explicit constexpr Quaternion(T s) : a0(std::move(s)), a1(0), a2(0), a3(0) {}

  /// Basis unit e_i, i in 0..3 (e_0 = 1).
  static Quaternion unit(int i) {
    Quaternion q;
    q.component(i) = T(1);
    return q;
  }

  T& component(int i) {
    switch (i) {
      case 0: return a0;
      case 1: return a1;
      case 2: return a2;
      case 3: return a3;
    }
    throw std::out_of_range("Quaternion::component: index must be 0..3");
  }
  const T& component(int i) const { return const_cast<Quaternion&>(*this).component(i); }

  Quaternion& operator+=(const Quaternion& o) {
    a0 += o.a0; a1 += o.a1; a2 += o.a2; a3 += o.a3;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    a0 -= o.a0; a1 -= o.a1; a2 -= o.a2; a3 -= o.a3;
    return *this;
  }
  Quaternion& operator*=(const T& s) {
    a0 *= s; a1 *= s; a2 *= s; a3 *= s;
    return *this;
  }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return Quaternion(-a.a0, -a.a1, -a.a2, -a.a3); }
  friend Quaternion operator*(Quaternion a, const T& s) { return a *= s; }
  friend Quaternion operator*(const T& s, Quaternion a) { return a *= s; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return Quaternion(T(a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3),
                      T(a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2),
                      T(a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1),
                      T(a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0));
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.a0 == b.a0 && a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.a0 << ", " << q.a1 << ", " << q.a2 << ", " << q.a3 << ')';
  }
};

template <class T>
Quaternion<T> conj(const Quaternion<T>& a) {
  return Quaternion<T>(a.a0, -a.a1, -a.a2, -a.a3);
}

template <class T>
const T& re(const Quaternion<T>& a) {
  return a.a0;
}

template <class T>
Quaternion<T> vec(const Quaternion<T>& a) {
  return Quaternion<T>(T(0), a.a1, a.a2, a.a3);
}

/// |a|^2, exact for rational scalars.
template <class T>
T norm_sq(const Quaternion<T>& a) {
  return T(a.a0 * a.a0 + a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3);
}

inline double norm(const Quaternion<double>& a) {
  return std::sqrt(norm_sq(a));
}

inline double norm(const Quaternion<Rational>& a) {
  return std::sqrt(to_double(norm_sq(a)));
}

/// e_i * a.
template <class T>
Quaternion<T> mul_unit_left(int i, const Quaternion<T>& a) {
  switch (i) {
    case 0: return a;
    case 1: return Quaternion<T>(-a.a1, a.a0, -a.a3, a.a2);
    case 2: return Quaternion<T>(-a.a2, a.a3, a.a0, -a.a1);
    case 3: return Quaternion<T>(-a.a3, -a.a2, a.a1, a.a0);
  }
  throw std::out_of_range("mul_unit_left: index must be 0..3");
}

/// a * e_i.
template <class T>
Quaternion<T> mul_unit_right(const Quaternion<T>& a, int i) {
  switch (i) {
    case 0: return a;
    case 1: return Quaternion<T>(-a.a1, a.a0, a.a3, -a.a2);
    case 2: return Quaternion<T>(-a.a2, -a.a3, a.a0, a.a1);
    case 3: return Quaternion<T>(-a.a3, a.a2, -a.a1, a.a0);
  }
  throw std::out_of_range("mul_unit_right: index must be 0..3");
}

inline Quaternion<double> to_double(const Quaternion<Rational>& q) {
  return {to_double(q.a0), to_double(q.a1), to_double(q.a2), to_double(q.a3)};
}

/// Element x0 + x1 e1 + x2 e2 of A. Also used for points of R^3.
template <class T>
struct ReducedQuaternion {
  T x0{}, x1{}, x2{};

  constexpr ReducedQuaternion() = default;
  constexpr ReducedQuaternion(T a, T b, T c) : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)) {}

  Quaternion<T> embed() const { return Quaternion<T>(x0, x1, x2, T(0)); }

  /// Projection from H; throws if the e3 part is nonzero.
  static ReducedQuaternion from(const Quaternion<T>& q) {
    if (q.a3 != T(0)) throw std::domain_error("ReducedQuaternion::from: e3 component is nonzero");
    return {q.a0, q.a1, q.a2};
  }

  friend bool operator==(const ReducedQuaternion&, const ReducedQuaternion&) = default;
};

/// Products of reduced quaternions leave A, so the result is a full quaternion.
template <class T>
Quaternion<T> operator*(const ReducedQuaternion<T>& a, const ReducedQuaternion<T>& b) {
  return a.embed() * b.embed();
}

using Point3 = ReducedQuaternion<double>;

}  // namespace monoball
