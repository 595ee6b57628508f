#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "zdl/errors.hpp"

namespace zdl {

// Truncated Taylor series f(s + e) = sum c[j] e^j, j <= order.
// c[j] = f^{(j)}(s) / j!.
template <class T>
class Jet {
 public:
  Jet() = default;
  explicit Jet(std::size_t order, T value = T(0)) : c_(order + 1, T(0)) { c_[0] = value; }

  static Jet variable(std::size_t order, T at) {
    Jet j(order, at);
    if (order >= 1) j.c_[1] = T(1);
    return j;
  }

  std::size_t order() const { return c_.size() - 1; }
  T& operator[](std::size_t i) { return c_[i]; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T value() const { return c_[0]; }

  // j-th derivative value
  T derivative_value(std::size_t j) const {
    T f = c_[j];
    for (std::size_t m = 2; m <= j; ++m) f *= static_cast<typename Scalar<T>::type>(m);
    return f;
  }

  Jet truncated(std::size_t order) const {
    Jet r(order);
    for (std::size_t i = 0; i <= order && i < c_.size(); ++i) r.c_[i] = c_[i];
    return r;
  }

  // d/ds, order drops by one
  Jet derivative() const {
    require(order() >= 1, "jet derivative needs order >= 1");
    Jet r(order() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.c_[i - 1] = c_[i] * static_cast<typename Scalar<T>::type>(i);
    return r;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(const T& a) {
    for (auto& x : c_) x *= a;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const T& b) { return a *= b; }
  friend Jet operator*(const T& b, Jet a) { return a *= b; }
  friend Jet operator-(Jet a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Jet r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      T acc(0);
      for (std::size_t j = 0; j <= i; ++j) acc += a.c_[j] * b.c_[i - j];
      r.c_[i] = acc;
    }
    return r;
  }

  Jet reciprocal() const {
    if (c_[0] == T(0)) fail(ErrorKind::division, "jet reciprocal of zero constant term");
    Jet r(order());
    r.c_[0] = T(1) / c_[0];
    for (std::size_t i = 1; i < c_.size(); ++i) {
      T acc(0);
      for (std::size_t j = 1; j <= i; ++j) acc += c_[j] * r.c_[i - j];
      r.c_[i] = -acc / c_[0];
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }

  // exp of a jet: r' = a' r
  Jet exp() const {
    Jet r(order());
    r.c_[0] = std::exp(c_[0]);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      T acc(0);
      for (std::size_t j = 1; j <= i; ++j)
        acc += static_cast<typename Scalar<T>::type>(j) * c_[j] * r.c_[i - j];
      r.c_[i] = acc / static_cast<typename Scalar<T>::type>(i);
    }
    return r;
  }

  // log of a jet: r' = a'/a
  Jet log() const {
    Jet r(order());
    r.c_[0] = std::log(c_[0]);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      T acc = static_cast<typename Scalar<T>::type>(i) * c_[i];
      for (std::size_t j = 1; j < i; ++j)
        acc -= static_cast<typename Scalar<T>::type>(j) * r.c_[j] * c_[i - j];
      r.c_[i] = acc / (static_cast<typename Scalar<T>::type>(i) * c_[0]);
    }
    return r;
  }

  // integer power
  Jet pow(int n) const {
    Jet r(order(), T(1));
    Jet base = *this;
    bool inv = n < 0;
    unsigned m = inv ? static_cast<unsigned>(-n) : static_cast<unsigned>(n);
    while (m) {
      if (m & 1u) r = r * base;
      base = base * base;
      m >>= 1u;
    }
    return inv ? r.reciprocal() : r;
  }

 private:
  template <class U>
  struct Scalar {
    using type = U;
  };
  template <class U>
  struct Scalar<std::complex<U>> {
    using type = U;
  };

  std::vector<T> c_;
};

}  // namespace zdl
