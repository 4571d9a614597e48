#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include "qpb/errors.hpp"

namespace qpb {

// Quaternion w + x*i + y*j + z*k over a real scalar T.
// Multiplication is the Hamilton product: i^2 = j^2 = k^2 = ijk = -1,
// ij = k = -ji. Mind the order; nothing here commutes.
template <typename T = double>
struct Quaternion {
  T w{}, x{}, y{}, z{};

  constexpr Quaternion() = default;
  constexpr Quaternion(T w_, T x_, T y_, T z_) : w(w_), x(x_), y(y_), z(z_) {}
  // Real embedding, deliberately implicit: Quaternion<> q = 2.0 reads naturally.
  constexpr Quaternion(T real) : w(real) {}

  static constexpr Quaternion i() { return {T(0), T(1), T(0), T(0)}; }
  static constexpr Quaternion j() { return {T(0), T(0), T(1), T(0)}; }
  static constexpr Quaternion k() { return {T(0), T(0), T(0), T(1)}; }

  // Split q = p1 + p2 * j with complex p1, p2; the complex adjoint is built
  // entrywise from these.
  constexpr std::complex<T> part1() const { return {w, x}; }
  constexpr std::complex<T> part2() const { return {y, z}; }

  constexpr Quaternion& operator+=(const Quaternion& r) {
    w += r.w; x += r.x; y += r.y; z += r.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    w -= r.w; x -= r.x; y -= r.y; z -= r.z;
    return *this;
  }
  constexpr Quaternion& operator*=(T s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << " + " << q.x << "i + " << q.y << "j + " << q.z << "k)";
  }
};

template <typename T>
constexpr Quaternion<T> operator+(Quaternion<T> a, const Quaternion<T>& b) {
  return a += b;
}

template <typename T>
constexpr Quaternion<T> operator-(Quaternion<T> a, const Quaternion<T>& b) {
  return a -= b;
}

template <typename T>
constexpr Quaternion<T> operator-(const Quaternion<T>& q) {
  return {-q.w, -q.x, -q.y, -q.z};
}

// Hamilton product, left factor first.
template <typename T>
constexpr Quaternion<T> operator*(const Quaternion<T>& p, const Quaternion<T>& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

template <typename T>
constexpr Quaternion<T> operator*(Quaternion<T> q, T s) {
  return q *= s;
}

template <typename T>
constexpr Quaternion<T> operator*(T s, Quaternion<T> q) {
  return q *= s;  // real scalars commute with everything
}

template <typename T>
constexpr Quaternion<T> conj(const Quaternion<T>& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

// Squared modulus, exact arithmetic.
template <typename T>
constexpr T abs2(const Quaternion<T>& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

// Modulus via nested hypot so large components do not overflow the squares.
template <typename T>
T abs(const Quaternion<T>& q) {
  return std::hypot(std::hypot(q.w, q.x), std::hypot(q.y, q.z));
}

template <typename T>
constexpr Quaternion<T> inverse(const Quaternion<T>& q) {
  const T n2 = abs2(q);
  if (n2 == T(0)) throw DomainError("inverse of zero quaternion");
  return {q.w / n2, -q.x / n2, -q.y / n2, -q.z / n2};
}

// Complex number c = re + im*i embedded as a quaternion. Right multiplication
// by embedded complexes is how right eigenvalues act on eigenvectors.
template <typename T>
constexpr Quaternion<T> from_complex(const std::complex<T>& c) {
  return {c.real(), c.imag(), T(0), T(0)};
}

using Quaterniond = Quaternion<double>;

}  // namespace qpb
