#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

namespace qpf {

/// Quaternion zeta = a + i b + j c + k d over a real scalar type, with the
/// sign table i*j = k, j*k = i, k*i = j.  The (a, b) pair is the complex
/// part co(zeta) = a + i b; (c, d) spans the j,k directions.
///
/// Complex numbers embed as quaternions with c = d = 0; the embedding is a
/// ring homomorphism, and j * z == conj(z) * j for every complex z.
template <typename Scalar = double>
struct Quaternion {
  Scalar a{0};
  Scalar b{0};
  Scalar c{0};
  Scalar d{0};

  constexpr Quaternion() = default;
  constexpr Quaternion(Scalar a_, Scalar b_ = 0, Scalar c_ = 0, Scalar d_ = 0)
      : a(a_), b(b_), c(c_), d(d_) {}
  constexpr Quaternion(std::complex<Scalar> z) : a(z.real()), b(z.imag()) {}

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

  constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    a += o.a; b += o.b; c += o.c; d += o.d;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    a -= o.a; b -= o.b; c -= o.c; d -= o.d;
    return *this;
  }
  constexpr Quaternion& operator*=(Scalar s) {
    a *= s; b *= s; c *= s; d *= s;
    return *this;
  }
};

using Quat = Quaternion<double>;

template <typename S>
constexpr Quaternion<S> operator+(Quaternion<S> x, const Quaternion<S>& y) {
  return x += y;
}

template <typename S>
constexpr Quaternion<S> operator-(Quaternion<S> x, const Quaternion<S>& y) {
  return x -= y;
}

template <typename S>
constexpr Quaternion<S> operator*(Quaternion<S> q, S s) { return q *= s; }

template <typename S>
constexpr Quaternion<S> operator*(S s, Quaternion<S> q) { return q *= s; }

/// Hamilton product with the i*j = k orientation.
template <typename S>
constexpr Quaternion<S> operator*(const Quaternion<S>& x, const Quaternion<S>& y) {
  return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
          x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
          x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

template <typename S>
constexpr Quaternion<S> conj(const Quaternion<S>& q) {
  return {q.a, -q.b, -q.c, -q.d};
}

template <typename S>
constexpr S norm_sq(const Quaternion<S>& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

/// Overflow-safe |zeta|.
template <typename S>
S norm(const Quaternion<S>& q) {
  return std::hypot(std::hypot(q.a, q.b), std::hypot(q.c, q.d));
}

/// Complex part co(zeta) = a + i b.
template <typename S>
constexpr std::complex<S> co(const Quaternion<S>& q) {
  return {q.a, q.b};
}

/// |zeta - co(zeta)| = sqrt(c^2 + d^2).
template <typename S>
S jk_norm(const Quaternion<S>& q) {
  return std::hypot(q.c, q.d);
}

template <typename S>
bool is_finite(const Quaternion<S>& q) {
  return std::isfinite(q.a) && std::isfinite(q.b) && std::isfinite(q.c) &&
         std::isfinite(q.d);
}

/// zeta^-1 = conj(zeta) / |zeta|^2, evaluated as two scaled divisions so the
/// intermediate |zeta|^2 cannot over- or underflow.
template <typename S>
Quaternion<S> inv(const Quaternion<S>& q) {
  const S n = norm(q);
  if (n == S{0}) throw std::domain_error("zero quaternion has no inverse");
  Quaternion<S> r = conj(q);
  r.a = r.a / n / n;
  r.b = r.b / n / n;
  r.c = r.c / n / n;
  r.d = r.d / n / n;
  return r;
}

/// exp(i theta) = cos theta + i sin theta as a quaternion.
template <typename S>
Quaternion<S> exp_i(S theta) {
  return {std::cos(theta), std::sin(theta), 0, 0};
}

/// exp(j theta) = cos theta + j sin theta.
template <typename S>
Quaternion<S> exp_j(S theta) {
  return {std::cos(theta), 0, std::sin(theta), 0};
}

/// exp(k theta) = cos theta + k sin theta.
template <typename S>
Quaternion<S> exp_k(S theta) {
  return {std::cos(theta), 0, 0, std::sin(theta)};
}

template <typename S>
std::ostream& operator<<(std::ostream& os, const Quaternion<S>& q) {
  return os << "(" << q.a << ", " << q.b << ", " << q.c << ", " << q.d << ")";
}

}  // namespace qpf
