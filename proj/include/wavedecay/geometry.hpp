#pragma once

#include <array>
#include <cmath>

namespace wavedecay {

struct Point3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Point3 operator*(double c) const { return {c * x, c * y, c * z}; }
};

inline double dot(const Point3& a, const Point3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }

inline double dist(const Point3& a, const Point3& b) { return norm(a - b); }

/// Japanese bracket <x> = sqrt(1 + |x|^2).
inline double bracket(double r) { return std::sqrt(1.0 + r * r); }
inline double bracket(const Point3& p) { return bracket(norm(p)); }

}  // namespace wavedecay
