#pragma once

#include <string>

#include "higgs/poly.hpp"

namespace ph {

// Rational function in one formal variable over the field K, kept reduced
// with monic denominator. RatFunc<Rational> is the deformation field Q(h).
template <class K>
class RatFunc {
 public:
  RatFunc() : num_(), den_(K(1)) {}
  RatFunc(const K& a) : num_(a), den_(K(1)) {}
  template <std::integral I>
  RatFunc(I a) : RatFunc(K(a)) {}
  RatFunc(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
  explicit RatFunc(Poly<K> n) : num_(std::move(n)), den_(K(1)) {}

  static RatFunc var() { return RatFunc(Poly<K>::x()); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool is_const() const { return den_.deg() == 0 && num_.deg() <= 0; }
  K const_value() const { return num_.coeff(0) / den_.coeff(0); }

  // value at x; PoleAtLimit when the reduced denominator vanishes
  K eval(const K& x) const {
    K d = den_(x);
    if (is_zero(d)) fail(Err::PoleAtLimit, "rational function has a pole at the evaluation point");
    return num_(x) / d;
  }

  RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }
  RatFunc inv() const {
    if (zero()) fail(Err::ZeroDivision, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.zero() || b.zero()) return RatFunc();
    if (a.den_.deg() == 0 && b.den_.deg() == 0) return RatFunc(a.num_ * b.num_, Poly<K>(K(1)), raw_tag{});
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  struct raw_tag {};
  RatFunc(Poly<K> n, Poly<K> d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
  void reduce() {
    if (den_.zero()) fail(Err::ZeroDivision, "rational function with zero denominator");
    if (num_.zero()) {
      den_ = Poly<K>(K(1));
      return;
    }
    if (den_.deg() > 0 && num_.deg() >= 0) {
      Poly<K> g = gcd(num_, den_);
      if (g.deg() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    K l = den_.lc();
    if (!is_zero(l - K(1))) {
      num_ = num_ / l;
      den_ = den_ / l;
    }
  }
  Poly<K> num_, den_;
};

template <class K>
bool is_zero(const RatFunc<K>& a) {
  return a.zero();
}

template <class K>
size_t pivot_cost(const RatFunc<K>& a) {
  return static_cast<size_t>(a.num().deg() + a.den().deg() + 1);
}

template <class K>
RatFunc<K> pow(const RatFunc<K>& a, int e) {
  if (e < 0) return pow(a.inv(), -e);
  RatFunc<K> r(K(1)), b = a;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

template <class K>
std::string to_str(const RatFunc<K>& a) {
  auto ps = [](const Poly<K>& p) {
    std::string s = "[";
    for (int i = 0; i <= p.deg(); ++i) s += (i ? "," : "") + to_str(p.coeff(i));
    return s + "]";
  };
  return "{num:" + ps(a.num()) + ",den:" + ps(a.den()) + "}";
}

template <class K>
std::ostream& operator<<(std::ostream& os, const RatFunc<K>& a) {
  return os << to_str(a);
}

using Qh = RatFunc<Rational>;

// h as an element of Q(h)
inline Qh hvar() { return Qh::var(); }

}  // namespace ph
