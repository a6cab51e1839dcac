#pragma once

#include <string>
#include <vector>

#include "higgs/apparent.hpp"
#include "higgs/limits.hpp"
#include "higgs/model.hpp"

namespace ph {

template <class K>
using ZMat = Mat2<RatFunc<K>>;

template <class K>
RatFunc<K> zpoly(const Poly<K>& p) {
  return RatFunc<K>(p);
}

template <class K>
ZMat<K> zmat(const Mat2<Poly<K>>& m) {
  return map2(m, [](const Poly<K>& p) { return RatFunc<K>(p); });
}

template <class K>
ZMat<K> zmul(const ZMat<K>& a, const ZMat<K>& b) {
  ZMat<K> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

// Polynomial entries or Indeterminate.
template <class K>
Poly<K> as_poly(const RatFunc<K>& e, const char* what) {
  if (e.den().deg() != 0) fail(Err::Indeterminate, std::string(what) + ": entry is not polynomial in z");
  return e.num() / e.den().coeff(0);
}

enum class ModKind { Lower, Upper };

template <class K>
struct Modification {
  K a;
  K l1, l2;  // direction in E|_a
  ModKind kind = ModKind::Lower;
};

// basis = [l | complement], diag = diag(1, z-a) (lower) or diag(1/(z-a), 1)
// (upper); matrix = basis * diag is the frame change.
template <class K>
struct Gluing {
  ZMat<K> basis, diag, matrix;
};

template <class K>
Gluing<K> gluing_matrix(const Modification<K>& m) {
  if (is_zero(m.l1) && is_zero(m.l2)) fail(Err::UsageError, "modification direction is zero");
  Gluing<K> g;
  K c1 = is_zero(m.l1) ? K(1) : K(0), c2 = is_zero(m.l1) ? K(0) : K(1);
  g.basis = mat2<RatFunc<K>>(m.l1, c1, m.l2, c2);
  RatFunc<K> lin = zpoly(Poly<K>::linear(m.a));
  if (m.kind == ModKind::Lower)
    g.diag = mat2<RatFunc<K>>(K(1), K(0), K(0), lin);
  else
    g.diag = mat2<RatFunc<K>>(lin.inv(), K(0), K(0), K(1));
  g.matrix = zmul(g.basis, g.diag);
  return g;
}

// Kernel of M - p I for a rank-one M - p I, first nonzero entry scaled to 1.
template <class K>
std::pair<K, K> eigen_line(const Mat2<K>& M, const K& p) {
  K a = M(0, 0) - p, b = M(0, 1), c = M(1, 0), d = M(1, 1) - p;
  if (is_zero(a) && is_zero(b) && is_zero(c) && is_zero(d))
    fail(Err::NonSemisimple, "residue is scalar; no distinguished eigen-line");
  K v1, v2;
  if (!is_zero(a) || !is_zero(b)) {
    v1 = -b;
    v2 = a;
  } else {
    v1 = -d;
    v2 = c;
  }
  if (!is_zero(v1)) return {K(1), v2 / v1};
  return {K(0), K(1)};
}

template <class K>
ZMat<K> R0() {
  return mat2<RatFunc<K>>(K(1), K(0), K(0), zpoly(Poly<K>::x()).inv());
}

// R_k with sigma-zeros q: diag(prod (z - q), 1/(z prod (z - q)))
template <class K>
ZMat<K> transition_for(const std::vector<K>& sigma) {
  Poly<K> s(K(1));
  for (const auto& q : sigma) s = s * Poly<K>::linear(q);
  return mat2<RatFunc<K>>(zpoly(s), K(0), K(0), zpoly(s * Poly<K>::x()).inv());
}

// Field on U_0 plus the transition to the chart at infinity.
template <class K>
struct GluedFamily {
  FieldMatrix<K> u0;
  ZMat<K> transition;
  ZMat<K> gauge;  // accumulated frame change on U_0
  int k = 0;
  std::vector<K> sigma;  // expected zeros of the cyclic vector when jumped
};

// The chart-at-infinity matrix T^{-1} A T may have poles only at z = 0 and
// at the sigma-zeros (outside U_inf), and at most a simple pole at w = 0
// once multiplied by omega_z.
template <class K>
Report check_glue(const GluedFamily<K>& g, const SpectralData<K>& S) {
  Report r;
  ZMat<K> A = zmat(g.u0.matrix());
  ZMat<K> B = zmul(zmul(inv2(g.transition), A), g.transition);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto& e = B(i, j);
      std::string tag = "uinf_" + std::to_string(i + 1) + std::to_string(j + 1);
      Poly<K> d = e.den();
      auto strip = [&](const K& q) {
        while (d.deg() > 0 && is_zero(d(q))) d = exact_div(d, Poly<K>::linear(q));
      };
      strip(K(0));
      for (const auto& q : g.sigma) strip(q);
      r.checks.push_back({tag + "_poles", d.deg() == 0, "stray pole in the chart at infinity"});
      int order = e.zero() ? -1000 : e.num().deg() - e.den().deg();
      r.checks.push_back({tag + "_at_inf", order <= S.n - 2, "order " + std::to_string(order)});
    }
  return r;
}

// Lower then upper modification at (q, l_p): the eigen-lines of the field
// and of the lowered field for the eigenvalue p.
template <class K>
GluedFamily<K> hecke_step(const GluedFamily<K>& in, const K& q, const K& p) {
  if (is_zero(p)) fail(Err::ParamOutsideX, "dual parameter p = 0 at the modification point");
  ZMat<K> A = zmat(in.u0.matrix());
  auto at = [&](const ZMat<K>& M) {
    return map2(M, [&](const RatFunc<K>& e) { return e.eval(q); });
  };
  auto [a1, a2] = eigen_line(at(A), p);
  Gluing<K> lo = gluing_matrix(Modification<K>{q, a1, a2, ModKind::Lower});
  ZMat<K> A1 = zmul(zmul(inv2(lo.matrix), A), lo.matrix);
  auto [b1, b2] = eigen_line(at(A1), p);
  Gluing<K> up = gluing_matrix(Modification<K>{q, b1, b2, ModKind::Upper});
  ZMat<K> P = zmul(lo.matrix, up.matrix);
  ZMat<K> A2 = zmul(zmul(inv2(up.matrix), A1), up.matrix);
  GluedFamily<K> out;
  out.u0.k = in.k;  // as a family; the jumped type appears in the limit
  out.u0.connection = in.u0.connection;
  out.u0.f11 = as_poly(A2(0, 0), "hecke_step");
  out.u0.f12 = as_poly(A2(0, 1), "hecke_step");
  out.u0.f21 = as_poly(A2(1, 0), "hecke_step");
  out.transition = zmul(inv2(P), in.transition);
  out.gauge = zmul(in.gauge, P);
  out.k = in.k;
  out.sigma = in.sigma;
  out.sigma.push_back(q);
  return out;
}

template <class K>
struct JumpParams {
  K q1, p1, q2, p2, lambda;
};

template <class K>
JumpParams<K> make_jump(const K& q1, const K& p1, const K& q2, const K& lambda) {
  return {q1, p1, q2, p1 + lambda * (q2 - q1), lambda};
}

// Membership in X: p1 != 0, q1 != q2 and the slope relation.
template <class K>
void check_in_X(const JumpParams<K>& jp) {
  if (is_zero(jp.p1)) fail(Err::ParamOutsideX, "p1 = 0");
  if (is_zero(jp.q2 - jp.q1)) fail(Err::ParamOutsideX, "q2 = q1 (use the h-deformation)");
  if (!is_zero(jp.p2 - jp.p1 - jp.lambda * (jp.q2 - jp.q1)))
    fail(Err::ParamOutsideX, "p2 - p1 != lambda (q2 - q1)");
}

// n = 5: the k = 0 universal family at {(q1,p1),(q2,p2)}, modified at
// (q1, l_{p1}). Over Q(h) this is the deformation q2 = q1 + h.
template <class K>
GluedFamily<K> jump_family_h(const JumpParams<K>& jp, const SpectralData<K>& S) {
  if (S.n != 5) fail(Err::UsageError, "the jump family is defined for n = 5");
  if (S.flavor != Flavor::Higgs) fail(Err::UsageError, "Higgs flavor expected");
  check_in_X(jp);
  GluedFamily<K> base;
  base.u0 = reconstruct<K>({Pair<K>::fin(jp.q1, jp.p1), Pair<K>::fin(jp.q2, jp.p2)}, S);
  base.transition = R0<K>();
  base.gauge = mat2<RatFunc<K>>(K(1), K(0), K(0), K(1));
  return hecke_step(base, jp.q1, jp.p1);
}

// h -> 0 of a family over Q(h): a type k+1 field (not renormalized).
inline GluedFamily<Rational> jump_limit_h(const GluedFamily<Qh>& fam) {
  GluedFamily<Rational> out;
  try {
    out.u0.f11 = limit_h0(fam.u0.f11);
    out.u0.f12 = limit_h0(fam.u0.f12);
    out.u0.f21 = limit_h0(fam.u0.f21);
    out.transition = map2(fam.transition, [](const RatFunc<Qh>& e) { return limit_h0(e); });
  } catch (const Error& e) {
    fail(Err::PoleAtLimit, std::string("internal: jump family not regular at h = 0: ") + e.what());
  }
  out.u0.connection = fam.u0.connection;
  out.k = fam.k + 1;
  out.u0.k = out.k;
  for (const auto& s : fam.sigma) out.sigma.push_back(limit_h0(s));
  out.gauge = mat2<RatFunc<Rational>>(Rational(1), Rational(0), Rational(0), Rational(1));
  return out;
}

// Frame change by Q1 on U_0 and Q2 on the chart at infinity, then the
// automorphism normalization: the k = 0 normal form of a jumped family.
FieldMatrix<Rational> renormalize_q(const GluedFamily<Rational>& fam, const JumpParams<Rational>& jp,
                                    const Spectral& S);

// One chain step k -> k+1 for Higgs fields: the type-k family through
// root pairs with pair b moved to (q_a + h, p_a + lambda h), modified at
// pair a, and limited at h = 0.
struct ChainStep {
  GluedFamily<Rational> limit;          // raw limit, transition R_{k+1}
  FieldMatrix<Rational> normalized;     // normal form of the limit
  std::vector<SigmaDatum<Rational>> sigma;
  std::vector<ApparentPair> roots;      // remaining f21 root pairs
};

ChainStep jump_chain(const Spectral& S, int k, const std::vector<SigmaDatum<Rational>>& sigma,
                     const std::vector<ApparentPair>& roots, int pivot, int collide, const Rational& lambda);

}  // namespace ph
