#pragma once

#include <optional>
#include <string>

#include "higgs/apparent.hpp"
#include "higgs/connjump.hpp"

namespace ph {

// Projective slope: finite value, infinity, or 0/0.
struct ProjValue {
  enum Kind { Finite, Infinite, Undetermined } kind = Undetermined;
  Rational v;

  static ProjValue finite(Rational x) { return {Finite, std::move(x)}; }
  static ProjValue infinite() { return {Infinite, Rational(0)}; }
  static ProjValue undetermined() { return {Undetermined, Rational(0)}; }
  bool is_finite() const { return kind == Finite; }
  std::string str() const { return kind == Finite ? v.str() : kind == Infinite ? "inf" : "0/0"; }
  friend bool operator==(const ProjValue& a, const ProjValue& b) {
    return a.kind == b.kind && (a.kind != Finite || a.v == b.v);
  }
};

// p2 - p1 = lam_plus (q2 - q1), p2 + p1 = lam_minus (q2 - q1). Over a common
// pole t_i: v1 - v2 = lam_plus_i (q1 - q2) for equal signs and
// v1 + v2 = lam_minus_i (q1 - q2) for opposite signs.
struct HilbPoint5 {
  ApparentPair a, b;
  ProjValue lam_plus, lam_minus;
  std::optional<ProjValue> lam_plus_i, lam_minus_i;
};

// p of a finite pair, resolving blow-up data
Rational pair_p(const ApparentPair& x, const Spectral& S);

HilbPoint5 hilb_coords(const ApparentPair& a, const ApparentPair& b, const Spectral& S);

// n = 5 Higgs: the degree-6 spectral polynomial G (eta^2 = G for the type-1
// normal form [[0, G], [1, 0]]) through (t_i, +-nuhat_i), leading coefficient
// nu_5^2, and the Hilbert point:
//   q1 != q2:             G(q_j) = p_j^2, or G'(t_i) = 2 eps nuhat v on a pole
//   q1 = q2, p2 = -p1:    G(q) = p1^2, G'(q) = -2 p1 lam_minus
//   q1 = q2, p2 = p1:     G(q) = p1^2, G'(q) = 2 p1 lam_plus
//   q1 = q2 = t_i:        G'(t_i) = 2 eps nuhat v,
//                         G''(t_i) = 4 eps nuhat lam^i + 2 v^2
Poly<Rational> solve_b4b5(const HilbPoint5& pt, const Spectral& S);

FieldMatrix<Rational> typek1_from_curve(const Poly<Rational>& G);

// Chain of blow-up parameters along the apparent singularities of the
// connection jump family, with pbar = 1/p':
//   s  = (pbar2 - pbar1) / D,      D = q2' - q1', q = (q1' + q2') / 2
//   t1 = (s - 1/Q(q)) / D,         t2 = (pbar2 + pbar1) / D
//   u1 = t1 / D, u2 = t2 / D,      v = (u2 - U2(q)) / D, w = v / D
// Q(q) = q (q-1)(q-x1)(q-x2), U2 = -Q'/(4 Q^2).
template <class K>
struct ChainPoint {
  QuadExt<K> pbar1, pbar2, D, q, s, t1, t2, u1, u2, v, w;
};

template <class K>
QuadExt<K> U2_of(const QuadExt<K>& q, const SpectralData<K>& S) {
  Poly<K> Q = S.omega_den();
  QuadExt<K> Qq = Q.eval(q);
  return -Q.derivative().eval(q) / (QuadExt<K>(K(4)) * Qq * Qq);
}

template <class K>
ChainPoint<K> chain(const ConnApparent<K>& A, const SpectralData<K>& S) {
  ChainPoint<K> c;
  c.pbar1 = A.p1p.inv();
  c.pbar2 = A.p2p.inv();
  c.D = A.q2p - A.q1p;
  if (is_zero(c.D)) fail(Err::ZeroDivision, "q1' = q2'");
  c.q = (A.q1p + A.q2p) * QuadExt<K>(K(1) / K(2));
  c.s = (c.pbar2 - c.pbar1) / c.D;
  c.t1 = (c.s - S.omega_den().eval(c.q).inv()) / c.D;
  c.t2 = (c.pbar2 + c.pbar1) / c.D;
  c.u1 = c.t1 / c.D;
  c.u2 = c.t2 / c.D;
  c.v = (c.u2 - U2_of(c.q, S)) / c.D;
  c.w = c.v / c.D;
  return c;
}

struct ChainLimits {
  Rational s, t1, t2, u1, u2, v, w;
};

// Parity is asserted: s, u1, u2, w must be even (OddPart otherwise); t1, t2,
// v must tend to zero with their odd parts.
ChainLimits chain_limits(const ChainPoint<Qh>& cp);

// End to end over Q(h) with q2 = q1 + h.
ChainLimits chain_limits_at(const Rational& q1, const Rational& p1, const Rational& lambda, const Rational& e0,
                            const Rational& e1, const Spectral& S, std::array<int, 4> eps = {1, 1, 1, 1});

// Closed forms for comparison
Rational lim_s_closed(const Rational& q1, const Spectral& S);
Rational lim_u2_closed(const Rational& q1, const Spectral& S);
Rational u1_lambda_coeff_closed(const Rational& q1, const Spectral& S);
Rational w_lambda_coeff_closed(const Rational& q1, const Spectral& S);

// Exact quadratic model c0 + c_l l + c_p p + c_ll l^2 + c_lp l p + c_pp p^2
// fitted on a 3x3 grid; `verified` records that the three surplus grid
// points agree.
struct QuadModel {
  Rational c0, cl, cp, cll, clp, cpp;
  bool verified = false;
  Rational eval(const Rational& l, const Rational& p) const {
    return c0 + cl * l + cp * p + cll * l * l + clp * l * p + cpp * p * p;
  }
};

struct JacobianReport {
  Rational q1, lambda, p1;
  QuadModel u1, w;
  Mat2<Rational> jacobian;  // rows (u1, w), columns (lambda, p1)
  Rational det;
  bool invertible = false;
  bool models_verified = false;
};

JacobianReport m1_coordinate_probe(const Rational& q1, const Rational& lambda, const Rational& p1,
                                   const Rational& e0, const Rational& e1, const Spectral& S);

}  // namespace ph
