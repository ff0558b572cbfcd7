#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace tcflow {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return s * a; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }

inline std::ostream& operator<<(std::ostream& os, Vec2 v) {
  return os << "(" << v.x << ", " << v.y << ")";
}

/// 2x2 real matrix. Doubles as a Jacobi matrix at the origin and as a
/// field linearization, hence the alias Jet2 below.
struct Mat2 {
  // row-major: m[0]=a11, m[1]=a12, m[2]=a21, m[3]=a22
  std::array<double, 4> m{0.0, 0.0, 0.0, 0.0};

  static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
  static Mat2 zero() { return {}; }

  double& operator()(int r, int c) { return m[2 * r + c]; }
  double operator()(int r, int c) const { return m[2 * r + c]; }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
  }
  friend Mat2 operator*(double s, const Mat2& a) {
    return {{s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]}};
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
             a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
  }
  friend Vec2 operator*(const Mat2& a, Vec2 v) {
    return {a.m[0] * v.x + a.m[1] * v.y, a.m[2] * v.x + a.m[3] * v.y};
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.m == b.m; }
};

using Jet2 = Mat2;

inline double trace(const Mat2& a) { return a.m[0] + a.m[3]; }
inline double det(const Mat2& a) { return a.m[0] * a.m[3] - a.m[1] * a.m[2]; }
inline double norm_inf(const Mat2& a) {
  double n = 0.0;
  for (double v : a.m) n = std::max(n, std::abs(v));
  return n;
}

inline Mat2 inverse(const Mat2& a) {
  double d = det(a);
  return {{a.m[3] / d, -a.m[1] / d, -a.m[2] / d, a.m[0] / d}};
}

inline std::ostream& operator<<(std::ostream& os, const Mat2& a) {
  return os << "[[" << a.m[0] << ", " << a.m[1] << "], [" << a.m[2] << ", " << a.m[3] << "]]";
}

}  // namespace tcflow
