#pragma once

#include "higgs/eigen_support.hpp"
#include "higgs/quadext.hpp"
#include "higgs/ratfunc.hpp"

namespace ph {

// Value at h = 0 after cancelling common powers of h (the stored form is
// already reduced, so at most one of num/den is divisible by h).
inline Rational limit_h0(const Qh& x) {
  if (x.zero()) return Rational(0);
  int vn = x.num().valuation(), vd = x.den().valuation();
  if (vd > vn) fail(Err::PoleAtLimit, "pole at h = 0");
  if (vn > vd) return Rational(0);
  return x.num().coeff(vn) / x.den().coeff(vd);
}

inline bool regular_h0(const Qh& x) {
  return x.zero() || x.den().valuation() == 0;
}

inline Poly<Rational> limit_h0(const Poly<Qh>& f) {
  std::vector<Rational> c;
  for (int i = 0; i <= f.deg(); ++i) c.push_back(limit_h0(f.coeff(i)));
  return Poly<Rational>(std::move(c));
}

inline bool regular_h0(const Poly<Qh>& f) {
  for (int i = 0; i <= f.deg(); ++i)
    if (!regular_h0(f.coeff(i))) return false;
  return true;
}

// Even elements only.
inline Rational limit_h0(const QuadExt<Qh>& x) {
  if (!x.even()) fail(Err::OddPart, "limit of a quadratic-extension element with nonzero odd part");
  return limit_h0(x.a);
}

// Limit of an arbitrary element when it exists in Q: the odd part b r must
// tend to zero, i.e. b^2 d -> 0.
inline Rational limit_h0_any(const QuadExt<Qh>& x) {
  if (!x.even()) {
    // h-adic valuation of b^2 d, without forming the product
    auto val = [](const Qh& y) { return y.num().valuation() - y.den().valuation(); };
    if (!x.d.zero() && 2 * val(x.b) + val(x.d) <= 0) fail(Err::OddPart, "odd part does not vanish at h = 0");
  }
  return limit_h0(x.a);
}

// Rational functions in z over Q(h): rescale so the denominator keeps a
// coefficient with nonzero limit, then take limits coefficientwise.
inline RatFunc<Rational> limit_h0(const RatFunc<Qh>& x) {
  if (x.zero()) return RatFunc<Rational>();
  auto min_order = [](const Poly<Qh>& p) {
    int best = 1 << 20;
    for (int i = 0; i <= p.deg(); ++i) {
      const Qh& c = p.coeff(i);
      if (c.zero()) continue;
      best = std::min(best, c.num().valuation() - c.den().valuation());
    }
    return best;
  };
  int od = min_order(x.den()), on = min_order(x.num());
  if (on < od) fail(Err::PoleAtLimit, "pole at h = 0");
  Qh scale = pow(hvar(), -od);
  Poly<Rational> n = limit_h0(x.num() * scale);
  Poly<Rational> d = limit_h0(x.den() * scale);
  return RatFunc<Rational>(n, d);
}

template <class K, class F>
auto map2(const Mat2<K>& m, F f) {
  using K2 = decltype(f(m(0, 0)));
  Mat2<K2> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = f(m(i, j));
  return r;
}

}  // namespace ph
