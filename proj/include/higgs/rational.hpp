#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "higgs/errors.hpp"

namespace ph {

// Thin value wrapper over mpq_class; avoids GMP expression templates leaking
// into generic code (Eigen, Poly<K>).
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : v_(static_cast<long>(n)) {}
  Rational(long n, long d);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational parse(std::string_view s);
  std::string str() const { return v_.get_str(); }

  const mpq_class& q() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool zero() const { return sgn(v_) == 0; }
  double to_double() const { return v_.get_d(); }
  // bit size of numerator plus denominator; used as a pivot heuristic
  size_t height() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

Rational pow(const Rational& a, int e);
std::optional<Rational> try_sqrt(const Rational& a);

// Scalar traits used by the generic templates.
inline bool is_zero(const Rational& a) { return a.zero(); }
inline std::string to_str(const Rational& a) { return a.str(); }
inline double to_double(const Rational& a) { return a.to_double(); }
inline size_t pivot_cost(const Rational& a) { return a.height(); }

// Float backend: complex doubles compared with a process-wide tolerance.
using Cplx = std::complex<double>;
double& float_tol();
inline bool is_zero(const Cplx& a) { return std::abs(a) <= float_tol(); }
inline bool is_zero(double a) { return std::abs(a) <= float_tol(); }
std::string to_str(const Cplx& a);
inline Cplx to_cplx(const Rational& a) { return Cplx(a.to_double(), 0.0); }

inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

}  // namespace ph
