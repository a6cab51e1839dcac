#pragma once

#include <algorithm>
#include <concepts>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "higgs/errors.hpp"
#include "higgs/rational.hpp"

namespace ph {

// Dense univariate polynomial over a field K, ascending coefficients,
// trailing zeros always trimmed. Degree bounds live with the caller.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(const K& a) {
    if (!is_zero(a)) c_.push_back(a);
  }
  template <std::integral I>
  Poly(I a) : Poly(K(a)) {}
  explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<K> c) : c_(c) { trim(); }

  static Poly monomial(const K& a, int d) {
    std::vector<K> c(d + 1, K(0));
    c[d] = a;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(K(1), 1); }
  // z - q
  static Poly linear(const K& q) { return Poly({-q, K(1)}); }

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K(0);
  }
  K lc() const { return c_.empty() ? K(0) : c_.back(); }
  // index of the lowest nonzero coefficient, -1 for the zero polynomial
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  template <class X>
  X eval(const X& x) const {
    X r(0);
    for (int i = deg(); i >= 0; --i) r = r * x + X(c_[i]);
    return r;
  }
  K operator()(const K& x) const { return eval<K>(x); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> d(c_.size() - 1, K(0));
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<long>(i));
    return Poly(std::move(d));
  }

  // z -> -z  (used by chart maps)
  Poly reflect() const {
    std::vector<K> d = c_;
    for (size_t i = 1; i < d.size(); i += 2) d[i] = -d[i];
    return Poly(std::move(d));
  }

  // w^m f(1/w) for m >= deg
  Poly reverse(int m) const {
    std::vector<K> d(m + 1, K(0));
    for (int i = 0; i <= deg(); ++i) d[m - i] = c_[i];
    return Poly(std::move(d));
  }

  template <class F>
  auto map(F f) const {
    using K2 = decltype(f(std::declval<K>()));
    std::vector<K2> d;
    d.reserve(c_.size());
    for (const auto& a : c_) d.push_back(f(a));
    return Poly<K2>(std::move(d));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<K> d(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(d));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const K& s, Poly a) {
    for (auto& x : a.c_) x = s * x;
    a.trim();
    return a;
  }
  friend Poly operator*(Poly a, const K& s) { return s * std::move(a); }
  friend Poly operator/(Poly a, const K& s) {
    if (is_zero(s)) fail(Err::ZeroDivision, "polynomial divided by zero scalar");
    K inv = K(1) / s;
    for (auto& x : a.c_) x = x * inv;
    a.trim();
    return a;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.zero();
}

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.zero()) fail(Err::ZeroDivision, "polynomial division by zero");
  std::vector<K> r = a.coeffs();
  int db = b.deg();
  int dq = a.deg() - db;
  if (dq < 0) return {Poly<K>(), a};
  std::vector<K> q(dq + 1, K(0));
  K inv = K(1) / b.lc();
  for (int i = dq; i >= 0; --i) {
    K c = r[i + db] * inv;
    q[i] = c;
    if (is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) r[i + j] = r[i + j] - c * b.coeff(j);
  }
  r.resize(db > 0 ? db : 0);
  return {Poly<K>(std::move(q)), Poly<K>(std::move(r))};
}

// Division that must be exact.
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero()) fail(Err::Indeterminate, "inexact polynomial division");
  return q;
}

template <class K>
Poly<K> monic(const Poly<K>& a) {
  return a.zero() ? a : a / a.lc();
}

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class K>
Poly<K> pow(const Poly<K>& a, int e) {
  Poly<K> r(K(1)), b = a;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// f(g(z))
template <class K>
Poly<K> compose(const Poly<K>& f, const Poly<K>& g) {
  Poly<K> r;
  for (int i = f.deg(); i >= 0; --i) r = r * g + Poly<K>(f.coeff(i));
  return r;
}

template <class K>
Poly<K> from_roots(const std::vector<K>& roots) {
  Poly<K> r(K(1));
  for (const auto& q : roots) r = r * Poly<K>::linear(q);
  return r;
}

// Taylor coefficients of f at x: f(z) = sum c_i (z-x)^i
template <class K>
std::vector<K> taylor(const Poly<K>& f, const K& x) {
  Poly<K> g = compose(f, Poly<K>({x, K(1)}));
  std::vector<K> c(std::max(f.deg() + 1, 0), K(0));
  for (int i = 0; i <= g.deg(); ++i) c[i] = g.coeff(i);
  return c;
}

template <class K>
std::string to_str(const Poly<K>& p) {
  std::string s = "[";
  for (int i = 0; i <= p.deg(); ++i) s += (i ? "," : "") + to_str(p.coeff(i));
  return s + "]";
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& p) {
  return os << to_str(p);
}

}  // namespace ph
