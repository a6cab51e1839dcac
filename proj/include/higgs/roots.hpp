#pragma once

#include <utility>
#include <vector>

#include "higgs/poly.hpp"
#include "higgs/quadext.hpp"
#include "higgs/rational.hpp"

namespace ph {

struct RootSet {
  std::vector<Rational> exact;  // with multiplicity, ascending
  std::vector<Cplx> approx;     // roots not expressible over Q (float fallback)
  int at_infinity = 0;          // bound - actual degree
  bool used_float = false;
};

// Roots of f counted against a formal degree bound (bound < 0: use deg f).
// Throws FactorizationUnavailable when f does not split over Q and
// allow_float is false.
RootSet poly_roots(const Poly<Rational>& f, int bound = -1, bool allow_float = false);

// Complex roots by companion-matrix eigenvalues, Newton-polished.
std::vector<Cplx> float_roots(const Poly<Cplx>& f);
std::vector<Cplx> float_roots(const Poly<Rational>& f);

// Square-free part and the distinct rational roots with multiplicities.
std::vector<std::pair<Rational, int>> rational_roots(const Poly<Rational>& f);

// Both roots of a f2 z^2 + f1 z + f0 in the quadratic extension by the
// discriminant; DegenerateQuadratic when f2 = 0.
template <class K>
std::pair<QuadExt<K>, QuadExt<K>> quadratic_roots(const Poly<K>& f) {
  if (f.deg() != 2) fail(Err::DegenerateQuadratic, "quadratic_roots needs degree exactly 2");
  K a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
  K disc = b * b - K(4) * a * c;
  K mid = -b / (K(2) * a), half = K(1) / (K(2) * a);
  return {QuadExt<K>(mid, -half, disc), QuadExt<K>(mid, half, disc)};
}

inline Poly<Cplx> to_cplx(const Poly<Rational>& f) {
  return f.map([](const Rational& a) { return Cplx(a.to_double(), 0.0); });
}

}  // namespace ph
