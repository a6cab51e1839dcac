#pragma once

// Eigen is used as the dense container for small exact matrices; the scalar
// types below are fields (or rings, for Poly) without a meaningful epsilon.

#include <Eigen/Core>

#include "higgs/poly.hpp"
#include "higgs/quadext.hpp"
#include "higgs/ratfunc.hpp"
#include "higgs/rational.hpp"

namespace ph::detail {
template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static T epsilon() { return T(0); }
  static T dummy_precision() { return T(0); }
  static T highest() { return T(0); }
  static T lowest() { return T(0); }
  static int digits10() { return 0; }
};
}  // namespace ph::detail

namespace Eigen {
template <>
struct NumTraits<ph::Rational> : ph::detail::ExactNumTraits<ph::Rational> {};
template <class K>
struct NumTraits<ph::RatFunc<K>> : ph::detail::ExactNumTraits<ph::RatFunc<K>> {};
template <class K>
struct NumTraits<ph::QuadExt<K>> : ph::detail::ExactNumTraits<ph::QuadExt<K>> {};
template <class K>
struct NumTraits<ph::Poly<K>> : ph::detail::ExactNumTraits<ph::Poly<K>> {};
}  // namespace Eigen

namespace ph {

template <class K>
using Mat2 = Eigen::Matrix<K, 2, 2>;
template <class K>
using MatX = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using VecX = Eigen::Matrix<K, Eigen::Dynamic, 1>;

template <class K>
Mat2<K> mat2(const K& a, const K& b, const K& c, const K& d) {
  Mat2<K> m;
  m << a, b, c, d;
  return m;
}

template <class K>
K det2(const Mat2<K>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <class K>
K trace2(const Mat2<K>& m) {
  return m(0, 0) + m(1, 1);
}

// adjugate; equals the inverse when det = 1
template <class K>
Mat2<K> adj2(const Mat2<K>& m) {
  return mat2<K>(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0));
}

template <class K>
Mat2<K> inv2(const Mat2<K>& m) {
  K d = det2(m);
  if (is_zero(d)) fail(Err::ZeroDivision, "singular 2x2 matrix");
  Mat2<K> a = adj2(m);
  K di = K(1) / d;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = a(i, j) * di;
  return a;
}

template <class K>
bool is_zero(const Mat2<K>& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

}  // namespace ph
