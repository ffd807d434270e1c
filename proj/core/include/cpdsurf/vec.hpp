#pragma once

#include <array>
#include <cmath>

#include "cpdsurf/jet.hpp"

namespace cpdsurf {

template <class T>
struct Vec3 {
  T x{}, y{}, z{};
};

using Vec3d = Vec3<double>;

template <class T>
Vec3<T> operator+(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
template <class T>
Vec3<T> operator-(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
template <class T, class S>
Vec3<T> operator*(const S& s, const Vec3<T>& a) {
  return {s * a.x, s * a.y, s * a.z};
}
template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}
template <class T>
Vec3<T> operator/(const Vec3<T>& a, const T& s) {
  return {a.x / s, a.y / s, a.z / s};
}
inline double norm(const Vec3d& a) { return std::sqrt(dot(a, a)); }
inline Jet1 norm(const Vec3<Jet1>& a) { return sqrt1(dot(a, a)); }

inline Jet1 dot(const Vec3d& a, const Vec3<Jet1>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3d value(const Vec3<Jet1>& a) { return {a.x.val, a.y.val, a.z.val}; }

struct Vec2d {
  double x = 0.0, y = 0.0;
};

}  // namespace cpdsurf
