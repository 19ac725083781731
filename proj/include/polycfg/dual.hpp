#pragma once
// Forward-mode dual numbers with two infinitesimal directions.

#include <cmath>
#include <type_traits>

#include "real.hpp"

namespace polycfg {

template <class B>
struct Dual {
  B v{};
  B d0{}, d1{};

  Dual() = default;
  Dual(const B& value) : v(value), d0(0), d1(0) {}
  Dual(double value) requires(!std::is_same_v<B, double>) : v(value), d0(0), d1(0) {}
  Dual(int value) : v(value), d0(0), d1(0) {}
  Dual(const B& value, const B& a, const B& b) : v(value), d0(a), d1(b) {}

  static Dual variable(const B& value, int dir) {
    return dir == 0 ? Dual(value, B(1), B(0)) : Dual(value, B(0), B(1));
  }

  Dual& operator+=(const Dual& o) { v += o.v; d0 += o.d0; d1 += o.d1; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d0 -= o.d0; d1 -= o.d1; return *this; }
  Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
  Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }

  friend Dual operator-(const Dual& a) { return {-a.v, -a.d0, -a.d1}; }
  friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d0 + b.d0, a.d1 + b.d1}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d0 - b.d0, a.d1 - b.d1}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.v * b.v, a.d0 * b.v + a.v * b.d0, a.d1 * b.v + a.v * b.d1};
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    B inv = B(1) / b.v;
    B q = a.v * inv;
    return {q, (a.d0 - q * b.d0) * inv, (a.d1 - q * b.d1) * inv};
  }
  friend bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
  friend bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }
  friend bool operator<=(const Dual& a, const Dual& b) { return a.v <= b.v; }
  friend bool operator>=(const Dual& a, const Dual& b) { return a.v >= b.v; }

  friend Dual sqrt(const Dual& a) {
    using std::sqrt;
    B s = sqrt(a.v);
    B h = B(0.5) / s;
    return {s, a.d0 * h, a.d1 * h};
  }
  friend Dual abs(const Dual& a) { return a.v < B(0) ? -a : a; }
};

template <class T>
struct base_scalar {
  using type = T;
};
template <class B>
struct base_scalar<Dual<B>> {
  using type = B;
};
template <class T>
using base_scalar_t = typename base_scalar<T>::type;

template <class T>
inline const base_scalar_t<T>& value_of(const T& t) {
  if constexpr (std::is_same_v<T, base_scalar_t<T>>) return t;
  else return t.v;
}

}  // namespace polycfg
