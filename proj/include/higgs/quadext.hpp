#pragma once

#include <ostream>
#include <string>

#include "higgs/errors.hpp"

namespace ph {

// a + b r with r^2 = d. Elements with b = 0 adopt the radicand of whatever
// they are combined with; mixing two different radicands is a logic error.
template <class K>
struct QuadExt {
  K a, b, d;

  QuadExt() : a(0), b(0), d(0) {}
  QuadExt(const K& a_) : a(a_), b(0), d(0) {}
  template <std::integral I>
  QuadExt(I n) : a(K(n)), b(0), d(0) {}
  QuadExt(const K& a_, const K& b_, const K& d_) : a(a_), b(b_), d(d_) {}

  static QuadExt root(const K& d) { return QuadExt(K(0), K(1), d); }

  bool even() const { return is_zero(b); }
  bool odd() const { return is_zero(a); }
  // the image under r -> -r
  QuadExt conj() const { return QuadExt(a, -b, d); }
  K norm() const { return a * a - b * b * d; }

  QuadExt operator-() const { return QuadExt(-a, -b, d); }
  QuadExt inv() const {
    K n = norm();
    if (is_zero(n)) fail(Err::ZeroDivision, "non-invertible element of the quadratic extension");
    return QuadExt(a / n, -b / n, d);
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b, radicand(x, y));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b, radicand(x, y));
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    K r = radicand(x, y);
    return QuadExt(x.a * y.a + x.b * y.b * r, x.a * y.b + x.b * y.a, r);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    return x * y.inv();
  }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return is_zero(x.a - y.a) && is_zero(x.b - y.b);
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

 private:
  static K radicand(const QuadExt& x, const QuadExt& y) {
    if (is_zero(x.b)) return is_zero(y.b) ? (is_zero(x.d) ? y.d : x.d) : y.d;
    if (!is_zero(y.b) && !is_zero(x.d - y.d))
      fail(Err::Indeterminate, "quadratic extension elements with different radicands");
    return x.d;
  }
};

template <class K>
bool is_zero(const QuadExt<K>& x) {
  return is_zero(x.a) && is_zero(x.b);
}

template <class K>
std::string to_str(const QuadExt<K>& x) {
  return "(" + to_str(x.a) + ")+(" + to_str(x.b) + ")*sqrt(" + to_str(x.d) + ")";
}

template <class K>
std::ostream& operator<<(std::ostream& os, const QuadExt<K>& x) {
  return os << to_str(x);
}

}  // namespace ph
