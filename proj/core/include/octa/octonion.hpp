#pragma once
// Octonions over the frozen basis (1, i, j, k, e, f, g, h) with f = ie,
// g = je, h = ke. An octonion is also viewed as a pair (a, b) of quaternions
// meaning a + b·e, multiplied by the Cayley-Dickson rule
//
//   (a, b)(c, d) = (ac - conj(d)b, b conj(c) + da).
//
// The 8x8 signed basis table is generated from that rule at compile time and
// is the fast path for products; mul_cd keeps the pair formula available as
// an independent reference evaluation.

#include <array>
#include <cmath>
#include <string>

#include "octa/quaternion.hpp"

namespace octa {

struct Octonion {
  std::array<double, 8> c{};  // coefficients in basis order (1,i,j,k,e,f,g,h)

  static constexpr Octonion unit(int slot) {
    Octonion o{};
    o.c[slot] = 1.0;
    return o;
  }

  static constexpr Octonion from_pair(const Quaternion& a, const Quaternion& b) {
    return Octonion{{a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z}};
  }

  constexpr Quaternion a() const { return {c[0], c[1], c[2], c[3]}; }
  constexpr Quaternion b() const { return {c[4], c[5], c[6], c[7]}; }

  constexpr double operator[](int s) const { return c[s]; }

  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;
};

constexpr Octonion operator+(const Octonion& x, const Octonion& y) {
  Octonion r{};
  for (int s = 0; s < 8; ++s) r.c[s] = x.c[s] + y.c[s];
  return r;
}

constexpr Octonion operator-(const Octonion& x, const Octonion& y) {
  Octonion r{};
  for (int s = 0; s < 8; ++s) r.c[s] = x.c[s] - y.c[s];
  return r;
}

constexpr Octonion operator-(const Octonion& x) {
  Octonion r{};
  for (int s = 0; s < 8; ++s) r.c[s] = -x.c[s];
  return r;
}

constexpr Octonion operator*(double s, const Octonion& x) {
  Octonion r{};
  for (int t = 0; t < 8; ++t) r.c[t] = s * x.c[t];
  return r;
}

// Reference path: the Cayley-Dickson pair formula.
constexpr Octonion mul_cd(const Octonion& x, const Octonion& y) {
  const Quaternion a = x.a(), b = x.b(), c = y.a(), d = y.b();
  return Octonion::from_pair(a * c - conj(d) * b, b * conj(c) + d * a);
}

struct MulTable {
  std::array<std::array<signed char, 8>, 8> sign{};
  std::array<std::array<unsigned char, 8>, 8> slot{};
};

constexpr MulTable make_mul_table() {
  MulTable t{};
  for (int p = 0; p < 8; ++p) {
    for (int q = 0; q < 8; ++q) {
      const Octonion r = mul_cd(Octonion::unit(p), Octonion::unit(q));
      int hits = 0;
      for (int s = 0; s < 8; ++s) {
        if (r.c[s] == 0.0) continue;
        if (r.c[s] != 1.0 && r.c[s] != -1.0)
          throw "basis product is not a signed basis element";
        t.sign[p][q] = static_cast<signed char>(r.c[s]);
        t.slot[p][q] = static_cast<unsigned char>(s);
        ++hits;
      }
      if (hits != 1) throw "basis product is not a single basis element";
    }
  }
  return t;
}

inline constexpr MulTable kMulTable = make_mul_table();

// Fast path: accumulate through the signed basis table. Scan order is
// row-major in the left factor so quaternion products agree bitwise.
constexpr Octonion mul(const Octonion& x, const Octonion& y) {
  Octonion r{};
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q)
      r.c[kMulTable.slot[p][q]] +=
          static_cast<double>(kMulTable.sign[p][q]) * x.c[p] * y.c[q];
  return r;
}

constexpr Octonion operator*(const Octonion& x, const Octonion& y) { return mul(x, y); }

constexpr Octonion conj(const Octonion& x) {
  Octonion r{};
  r.c[0] = x.c[0];
  for (int s = 1; s < 8; ++s) r.c[s] = -x.c[s];
  return r;
}

constexpr double re(const Octonion& x) { return x.c[0]; }

constexpr Octonion im(const Octonion& x) {
  Octonion r = x;
  r.c[0] = 0.0;
  return r;
}

constexpr double inner(const Octonion& x, const Octonion& y) {
  double s = 0.0;
  for (int t = 0; t < 8; ++t) s += x.c[t] * y.c[t];
  return s;
}

constexpr double norm2(const Octonion& x) { return inner(x, x); }

inline double norm(const Octonion& x) { return std::sqrt(norm2(x)); }

inline Octonion normalized(const Octonion& x) {
  return (1.0 / norm(x)) * x;
}

// [x, y, z] = (xy)z - x(yz)
constexpr Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return (x * y) * z - x * (y * z);
}

// x × y = Im(conj(y) x)
constexpr Octonion cross2(const Octonion& x, const Octonion& y) {
  return im(conj(y) * x);
}

// x × y × z = (x(conj(y)z) - z(conj(y)x)) / 2
constexpr Octonion cross3(const Octonion& x, const Octonion& y, const Octonion& z) {
  return 0.5 * (x * (conj(y) * z) - z * (conj(y) * x));
}

// x(conj(y)w) = -y(conj(x)w) and (w conj(y))x = -(w conj(x))y, valid for
// orthogonal x, y and arbitrary w. Returns the larger clause residual.
inline double orthogonal_pair_residual(const Octonion& x, const Octonion& y, const Octonion& w) {
  const double left = norm(x * (conj(y) * w) + y * (conj(x) * w));
  const double right = norm((w * conj(y)) * x + (w * conj(x)) * y);
  return left > right ? left : right;
}

// (xy)(zx) = x(yz)x; the right side is association-free because x and yz
// generate an associative subalgebra, evaluated here as (x(yz))x.
inline double moufang_residual(const Octonion& x, const Octonion& y, const Octonion& z) {
  return norm((x * y) * (z * x) - (x * (y * z)) * x);
}

// 64 lines "left,right,sign,result" with signs written +1/-1.
std::string mul_table_csv();

// Names of the basis slots, "1" through "h".
const char* basis_name(int slot);

}  // namespace octa
