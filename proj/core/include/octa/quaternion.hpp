#pragma once
// Quaternions over the basis {1, i, j, k}, coefficients (w, x, y, z).
// Plain value type; every operation is a pure function.

#include <cmath>

namespace octa {

struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr double operator[](int s) const {
    return s == 0 ? w : s == 1 ? x : s == 2 ? y : z;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator-(const Quaternion& a) {
  return {-a.w, -a.x, -a.y, -a.z};
}

constexpr Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}

// Hamilton product. Monomials are written in ascending index order of the
// left factor so that the result is bit-identical to the octonion table
// path restricted to the {1,i,j,k} slots.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

constexpr double re(const Quaternion& a) { return a.w; }

constexpr Quaternion im(const Quaternion& a) { return {0.0, a.x, a.y, a.z}; }

constexpr double inner(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr double norm2(const Quaternion& a) { return inner(a, a); }

inline double norm(const Quaternion& a) { return std::sqrt(norm2(a)); }

inline Quaternion normalized(const Quaternion& a) {
  const double n = norm(a);
  return {a.w / n, a.x / n, a.y / n, a.z / n};
}

}  // namespace octa
