#pragma once

#include <array>
#include <string>

#include "higgs/apparent.hpp"
#include "higgs/hecke.hpp"

namespace ph {

// Connection jump family for n = 5, poles (0, 1, x1, x2, inf). K is Q for a
// fixed q2 != q1 or Q(h) for the deformation q2 = q1 + h.
template <class K>
struct ConnJumpParams {
  K q1, p1, q2, lambda, e0, e1;
  std::array<int, 4> eps{1, 1, 1, 1};

  K p2() const { return p1 + lambda * (q2 - q1); }
};

template <class K>
struct Nabla0 {
  K f0, f1, f2, f3, e2;
  std::array<K, 4> d{};
  // coefficients z^4..z^0 of the convergence polynomial after substitution
  Poly<K> convergence;
};

template <class K>
struct ConnJumpFamily {
  ConnJumpParams<K> params;
  std::array<K, 5> nu_prime{};
  Nabla0<K> nabla0;
  std::array<K, 4> alpha{}, beta1{}, beta2{}, g{}, hh{};
  Mat2<Poly<K>> B_w;          // in the variable w
  Mat2<K> T_inf;
  FieldMatrix<K> field;       // closed-form F11, F21 and the solved F12
  FieldMatrix<K> pipeline;    // nabla0 + Phi_X assembled directly
  FieldMatrix<K> higgs_part;  // Q1^{-1} P^{-1} A P Q1
};

namespace cj {

template <class K>
K half() {
  return K(1) / K(2);
}

template <class K>
void check_shape(const SpectralData<K>& S) {
  if (S.n != 5) fail(Err::UsageError, "the connection jump family is defined for n = 5");
  if (S.flavor != Flavor::Connection) fail(Err::UsageError, "connection flavor expected");
  if (!is_zero(S.t[0]) || !is_zero(S.t[1] - K(1)))
    fail(Err::UsageError, "poles must be normalized to (0, 1, x1, x2, inf)");
}

template <class K>
void check_params(const ConnJumpParams<K>& P) {
  if (is_zero(P.p1)) fail(Err::ParamOutsideX, "p1 = 0");
  if (is_zero(P.q2 - P.q1)) fail(Err::ParamOutsideX, "q2 = q1 (use the h-deformation)");
  for (int e : P.eps)
    if (e != 1 && e != -1) fail(Err::UsageError, "signs must be +1 or -1");
}

template <class K>
K nu5_prime(const SpectralData<K>& S) {
  return S.nu[4] + half<K>();
}

// (q1-1)(q1-x1)(q1-x2) - 2 e1 p1 - 2 e0 p1 q1
template <class K>
K bracket(const ConnJumpParams<K>& P, const SpectralData<K>& S) {
  return (P.q1 - S.t[1]) * (P.q1 - S.t[2]) * (P.q1 - S.t[3]) - K(2) * P.e1 * P.p1 -
         K(2) * P.e0 * P.p1 * P.q1;
}

template <class K>
K prod_others(const SpectralData<K>& S, int i, const K& x) {
  K r(1);
  for (int j = 0; j < 4; ++j)
    if (j != i) r = r * (x - S.t[j]);
  return r;
}

}  // namespace cj

template <class K>
std::pair<Poly<K>, Poly<K>> closed_form_F(const ConnJumpParams<K>& P, const SpectralData<K>& S) {
  cj::check_shape(S);
  cj::check_params(P);
  const K &q1 = P.q1, &q2 = P.q2, &p1 = P.p1, &e0 = P.e0, &e1 = P.e1, &x1 = S.t[2], &x2 = S.t[3];
  const K d = q2 - q1, n5 = cj::nu5_prime(S), two(2);
  const K Q1 = q1 * (q1 - K(1)) * (q1 - x1) * (q1 - x2);
  Poly<K> zq = Poly<K>::linear(q1);
  Poly<K> inner({
      -two * p1 * (K(1) + e1 + e0 * q1) + (q1 - K(1)) * (q1 - x1) * (q1 - x2),
      -two * (p1 - n5 * q1 * q1 * d) * e0 + two * n5 * q1 * d * e1 - n5 * d * Q1 / p1 + q1 * q1 -
          (K(1) + x1 + x2) * q1 + x1 + x2 + x1 * x2,
      -two * n5 * e1 * d + q1 - x1 - x2 - K(1),
      K(1) - two * n5 * e0 * d,
  });
  Poly<K> F11 = zq * (two * p1 / d) + zq * P.lambda + inner * cj::half<K>();
  Poly<K> F21({q1 * q2 + (-d) * q1 / (two * p1) * cj::bracket(P, S), -(q1 + q2 + e1 * d), K(1) - e0 * d});
  return {F11, F21};
}

template <class K>
Nabla0<K> build_nabla0(const ConnJumpParams<K>& P, const SpectralData<K>& S) {
  cj::check_shape(S);
  cj::check_params(P);
  const K &q1 = P.q1, &p1 = P.p1, &e0 = P.e0, &e1 = P.e1, &x1 = S.t[2], &x2 = S.t[3];
  Nabla0<K> N;
  const K two(2);
  N.f0 = cj::half<K>();
  N.f1 = (q1 - x1 - x2 - K(1)) / two;
  N.f2 = (-two * e0 * p1 + q1 * q1 + x1 + x2 + x1 * x2 - q1 * (K(1) + x1 + x2)) / two;
  N.f3 = cj::bracket(P, S) / two;
  N.e2 = q1 / (two * p1) * cj::bracket(P, S);
  N.convergence = Poly<K>({
      two * (N.e2 * p1 - N.f3 * q1),
      two * N.f3 + two * e1 * p1 - two * N.f2 * q1 + x1 * x2,
      two * N.f2 + two * e0 * p1 - two * N.f1 * q1 - x1 - x2 - x1 * x2,
      K(1) + two * N.f1 - two * N.f0 * q1 + x1 + x2,
      two * N.f0 - K(1),
  });
  return N;
}

template <class K>
Mat2<Poly<K>> bw_matrix(const Nabla0<K>& N, const ConnJumpParams<K>& P, const SpectralData<K>& S) {
  const K &x1 = S.t[2], &x2 = S.t[3];
  Poly<K> f({N.f0, N.f1, N.f2, N.f3});
  Poly<K> d12({K(0), N.d[0], N.d[1], N.d[2], N.d[3]});
  Poly<K> d21 = Poly<K>({P.e0, P.e1, N.e2}) * (P.q1 - P.q2);
  Poly<K> cub = Poly<K>::linear(K(1)) * Poly<K>({K(-1), x1}) * Poly<K>({K(-1), x2});
  return mat2<Poly<K>>(f, d12, d21, cub - f);
}

// nabla0 on U_0 in the omega_z normalization. The w-chart form is written
// against dw / (w (w-1)(x1 w - 1)(x2 w - 1)), which is z^3 omega_z; R_{0,w}
// contributes diag(0, (z-1)(z-x1)(z-x2)) omega_z. Conjugation by
// diag(1, 1/z) scales the (1,2) entry by z and the (2,1) entry by 1/z.
template <class K>
Mat2<Poly<K>> nabla0_u0(const Nabla0<K>& N, const ConnJumpParams<K>& P, const SpectralData<K>& S) {
  Mat2<Poly<K>> B = bw_matrix(N, P, S);
  const K n5 = cj::nu5_prime(S);
  Poly<K> b11 = B(0, 0).reverse(3), b22 = B(1, 1).reverse(3), b21 = B(1, 0).reverse(3);
  Poly<K> c11 = b11 + b21 * n5;
  Poly<K> c12 = Poly<K>::x() * ((b22 - c11) * n5) + B(0, 1).reverse(4);
  Poly<K> c21 = B(1, 0).reverse(2);
  Poly<K> c22 = b22 - b21 * n5 + Poly<K>::linear(K(1)) * Poly<K>::linear(S.t[2]) * Poly<K>::linear(S.t[3]);
  return mat2<Poly<K>>(c11, c12, c21, c22);
}

template <class K>
K beta1(const ConnJumpParams<K>& P, const SpectralData<K>& S, int i) {
  const K& t = S.t[i];
  return -K(2) * P.e1 * P.p1 - K(2) * P.e0 * P.p1 * (P.q1 + t) + cj::prod_others(S, i, P.q1);
}

// The eps nu' term enters with the sign that makes the (2,2) entry of
// T^{-1} res nabla0 T agree with this product form.
template <class K>
K beta2(const ConnJumpParams<K>& P, const SpectralData<K>& S, int i, const K& nup) {
  const K& t = S.t[i];
  K n5 = cj::nu5_prime(S);
  return P.p1 * (P.q1 - t) - (P.q1 - P.q2) * ((P.q1 - t) * P.lambda + n5 * t * (P.q1 - t) * (P.q2 - t) +
                                              K(P.eps[i]) * nup * S.scale(i));
}

template <class K>
K alpha(const ConnJumpParams<K>& P, const SpectralData<K>& S, int i, const K& nup) {
  K den = K(2) * P.p1 * (P.q2 - S.t[i]) * S.scale(i);
  if (is_zero(den)) fail(Err::DegenerateEigenSolve, "alpha undefined at pole " + std::to_string(i + 1));
  return beta1(P, S, i) * beta2(P, S, i, nup) / den;
}

// nu'_5 = nu_5 + 1/2 and -alpha_i + eps_i nu'_i = nu_i, linear in nu'_i.
template <class K>
std::array<K, 5> solve_nu_prime(const ConnJumpParams<K>& P, const SpectralData<K>& S) {
  cj::check_shape(S);
  cj::check_params(P);
  std::array<K, 5> out{};
  out[4] = cj::nu5_prime(S);
  for (int i = 0; i < 4; ++i) {
    K a0 = alpha(P, S, i, K(0));
    K slope = alpha(P, S, i, K(1)) - a0;
    K coef = K(P.eps[i]) - slope;
    if (is_zero(coef)) fail(Err::DegenerateEigenSolve, "eigenvalue equation degenerate at pole " + std::to_string(i + 1));
    out[i] = (S.nu[i] + a0) / coef;
  }
  return out;
}

// flag vector (f^eps, (q1-q2)(q1-t)(q2-t)) of the residue of Phi_X at t_i
template <class K>
Mat2<K> flag_frame(const ConnJumpParams<K>& P, const SpectralData<K>& S, int i, const K& nup) {
  const K& t = S.t[i];
  K f = P.p1 * (P.q2 - t) + P.p2() * (P.q1 - t) - K(P.eps[i]) * nup * (P.q1 - P.q2) * S.scale(i);
  return mat2<K>(K(1), f, K(0), (P.q1 - P.q2) * (P.q1 - t) * (P.q2 - t));
}

template <class K>
K g_value(const ConnJumpParams<K>& P, const SpectralData<K>& S, int i, const K& nup) {
  const K& t = S.t[i];
  K n5 = cj::nu5_prime(S);
  return P.p1 * (P.q2 - t) + P.p2() * (P.q1 - t) - n5 * t * (P.q1 - P.q2) * (P.q1 - t) * (P.q2 - t) -
         K(P.eps[i]) * nup * (P.q1 - P.q2) * S.scale(i);
}

// h_i with D(t_i) = h_i / ((q1-t_i)^2 (q2-t_i)^2), D = t^3 d1 + t^2 d2 + t d3 + d4
template <class K>
K h_value(const ConnJumpParams<K>& P, const SpectralData<K>& S, int i, const K& nup) {
  const K& t = S.t[i];
  K n5 = cj::nu5_prime(S);
  K L = (P.q1 - t) * P.lambda + n5 * t * (P.q1 - t) * (P.q2 - t) + K(P.eps[i]) * nup * S.scale(i);
  return cj::half<K>() * (P.q1 - t) * beta1(P, S, i) *
         (P.p1 * (P.q1 - t) + P.p1 * (P.q2 - t) - K(2) * (P.q1 - t) * L + (P.q1 - P.q2) / P.p1 * L * L);
}

template <class K>
std::array<K, 4> solve_d(const ConnJumpParams<K>& P, const SpectralData<K>& S, const std::array<K, 5>& nup) {
  cj::check_shape(S);
  MatX<K> V(4, 4);
  std::vector<K> rhs;
  for (int i = 0; i < 4; ++i) {
    const K& t = S.t[i];
    K den = (P.q1 - t) * (P.q1 - t) * (P.q2 - t) * (P.q2 - t);
    if (is_zero(den))
      fail(Err::SingularSystem, "q1 or q2 on pole t_" + std::to_string(i + 1) + " without blow-up data");
    for (int c = 0; c < 4; ++c) V(i, c) = pow(t, 3 - c);
    rhs.push_back(h_value(P, S, i, nup[i]) / den);
  }
  auto sol = linear_solve(V, rhs);
  return {sol[0], sol[1], sol[2], sol[3]};
}

// (1,2) entries of T_i^{-1} res_{t_i}(nabla0) T_i: the flag equations.
template <class K>
std::array<K, 4> flag_residuals(const Mat2<Poly<K>>& C, const ConnJumpParams<K>& P, const SpectralData<K>& S,
                                const std::array<K, 5>& nup) {
  std::array<K, 4> r{};
  for (int i = 0; i < 4; ++i) {
    Mat2<K> T = flag_frame(P, S, i, nup[i]);
    K s = S.scale(i);
    Mat2<K> res = map2(C, [&](const Poly<K>& e) { return e(S.t[i]) / s; });
    Mat2<K> X = inv2(T) * res * T;
    r[i] = X(0, 1);
  }
  return r;
}

// F12 from the four finite residue determinants and the one at infinity.
template <class K>
Poly<K> solve_F12(const Poly<K>& F11, const Poly<K>& F21, const SpectralData<K>& S) {
  // leading coefficient 1 - e0 (q2 - q1); on its zero locus the infinity
  // condition no longer fixes the z^4 coefficient
  if (F21.deg() < 2) fail(Err::NonGeneric, "F21 drops degree: e0 (q2 - q1) = 1");
  MatX<K> A = MatX<K>::Constant(5, 5, K(0));
  std::vector<K> rhs(5, K(0));
  for (int i = 0; i < 4; ++i) {
    const K& t = S.t[i];
    K ft = F21(t);
    if (is_zero(ft)) fail(Err::SingularSystem, "F21 vanishes at pole t_" + std::to_string(i + 1));
    for (int c = 0; c < 5; ++c) A(i, c) = pow(t, c);
    K nh = S.nu_hat(i);
    rhs[i] = (nh * nh - F11(t) * F11(t)) / ft;
  }
  A(4, 4) = F21.coeff(2);
  rhs[4] = detail::infinity_rhs(S, F11.coeff(3), 0, true);
  return Poly<K>(linear_solve(A, rhs));
}

template <class K>
ZMat<K> q1_matrix(const ConnJumpParams<K>& P) {
  using RF = RatFunc<K>;
  K c = (P.q1 - P.q2) / (K(2) * P.p1);
  return mat2<RF>(RF(Poly<K>::linear(P.q1)), RF(K(1) / c), RF(-c), RF(0));
}

// G^{-1} A G for G = [[1, u], [0, 1]], u = 1/(c (z - q1)); the (1,2) entry
// g + (2 c f - (z - q2)) / (c^2 (z - q1)) is polynomial because f(q1) = p1.
template <class K>
FieldMatrix<K> higgs_in_q1_frame(const FieldMatrix<K>& A, const ConnJumpParams<K>& P) {
  const K c = (P.q1 - P.q2) / (K(2) * P.p1);
  const Poly<K> zq2 = Poly<K>::linear(P.q2);
  if (!(A.f21 == Poly<K>::linear(P.q1) * zq2)) fail(Err::Indeterminate, "internal: unexpected f21");
  FieldMatrix<K> M;
  M.k = 0;
  M.f11 = A.f11 - zq2 * (K(1) / c);
  M.f21 = A.f21;
  M.f12 = A.f12 + exact_div(A.f11 * (K(2) * c) - zq2, Poly<K>::linear(P.q1) * (c * c));
  return M;
}

template <class K>
ConnJumpFamily<K> assemble(const ConnJumpParams<K>& P, const SpectralData<K>& S) {
  ConnJumpFamily<K> fam;
  fam.params = P;
  fam.nu_prime = solve_nu_prime(P, S);
  fam.nabla0 = build_nabla0(P, S);
  fam.nabla0.d = solve_d(P, S, fam.nu_prime);
  for (int i = 0; i < 4; ++i) {
    fam.beta1[i] = beta1(P, S, i);
    fam.beta2[i] = beta2(P, S, i, fam.nu_prime[i]);
    fam.alpha[i] = alpha(P, S, i, fam.nu_prime[i]);
    fam.g[i] = g_value(P, S, i, fam.nu_prime[i]);
    fam.hh[i] = h_value(P, S, i, fam.nu_prime[i]);
  }
  fam.B_w = bw_matrix(fam.nabla0, P, S);
  fam.T_inf = mat2<K>(K(1), fam.nu_prime[4], K(0), K(1));

  // Phi_X: the k = 0 Higgs field with eigenvalues nu' through (q1,p1),
  // (q2,p2), gauged by P Q1 = [[1, u], [0, 1]], u = 1/(c (z - q1)).
  SpectralData<K> Sh = S;
  Sh.flavor = Flavor::Higgs;
  for (int i = 0; i < 5; ++i) Sh.nu[i] = fam.nu_prime[i];
  FieldMatrix<K> A0 = reconstruct<K>({Pair<K>::fin(P.q1, P.p1), Pair<K>::fin(P.q2, P.p2())}, Sh);
  fam.higgs_part = higgs_in_q1_frame(A0, P);

  Mat2<Poly<K>> C = nabla0_u0(fam.nabla0, P, S);
  fam.pipeline.k = 0;
  fam.pipeline.connection = true;
  fam.pipeline.f11 = C(0, 0) + fam.higgs_part.f11;
  fam.pipeline.f12 = C(0, 1) + fam.higgs_part.f12;
  fam.pipeline.f21 = C(1, 0) + fam.higgs_part.f21;
  if (!(C(1, 1) == -C(0, 0))) fail(Err::Indeterminate, "internal: nabla0 is not trace-free");

  auto [F11, F21] = closed_form_F(P, S);
  fam.field.k = 0;
  fam.field.connection = true;
  fam.field.f11 = F11;
  fam.field.f21 = F21;
  fam.field.f12 = solve_F12(F11, F21, S);
  return fam;
}

// The family in the frame that survives q2 -> q1: Q1 d(Q1^{-1}) + Q1 A Q1^{-1}
// with Q1 = [[z - q1, 1/c], [-c, 0]]; Q1 d(Q1^{-1}) = [[0, 1/c], [0, 0]] dz.
template <class K>
FieldMatrix<K> jump_frame(const ConnJumpFamily<K>& fam, const SpectralData<K>& S) {
  const auto& P = fam.params;
  const K c = (P.q1 - P.q2) / (K(2) * P.p1);
  const Poly<K> zq = Poly<K>::linear(P.q1);
  const auto &a = fam.field.f11, &b = fam.field.f12, &r = fam.field.f21;
  FieldMatrix<K> F;
  F.connection = true;
  F.k = 0;
  F.f11 = zq * b * c - a;
  F.f21 = b * (-c * c);
  F.f12 = zq * zq * b - zq * a * (K(2) / c) - r * (K(1) / (c * c)) + S.omega_den() * (K(1) / c);
  return F;
}

// h -> 0: the type-1 connection.
inline FieldMatrix<Rational> jump_frame_limit(const FieldMatrix<Qh>& F) {
  FieldMatrix<Rational> out;
  out.k = 1;
  out.connection = true;
  out.f11 = limit_h0(F.f11);
  out.f12 = limit_h0(F.f12);
  out.f21 = limit_h0(F.f21);
  return out;
}

// Apparent singularities of the family: the roots of F21 in Q(h)(r) with
// r^2 = a3 (q2 - q1) / a2^2, and their duals F11(q').
template <class K>
struct ConnApparent {
  K a1, a2, a3;
  QuadExt<K> q1p, q2p, p1p, p2p;
};

template <class K>
ConnApparent<K> apparent_of_conn_jump(const ConnJumpFamily<K>& fam, const SpectralData<K>& S) {
  const auto& P = fam.params;
  const K &q1 = P.q1, &p1 = P.p1, &e0 = P.e0, &e1 = P.e1, &x1 = S.t[2], &x2 = S.t[3];
  const K d = P.q2 - q1;
  if (is_zero(fam.field.f21.coeff(2))) fail(Err::DegenerateQuadratic, "F21 has vanishing z^2 coefficient");
  ConnApparent<K> A;
  const K u = K(1) + e1 + K(2) * e0 * q1;
  A.a1 = u / (K(2) - K(2) * e0 * d);
  A.a2 = K(2) * p1 * (K(-1) + e0 * d);
  A.a3 = p1 * (-p1 * u * u * (-d) + K(2) * q1 * (q1 - K(1)) * (K(1) + e0 * (-d)) * (q1 - x1) * (q1 - x2));
  if (is_zero(A.a2)) fail(Err::DegenerateQuadratic, "a2 = 0");
  QuadExt<K> r = QuadExt<K>::root(A.a3 * d / (A.a2 * A.a2));
  QuadExt<K> base(q1 + A.a1 * d);
  A.q1p = base - r;
  A.q2p = base + r;
  const auto& F21 = fam.field.f21;
  if (!is_zero(F21.eval(A.q1p)) || !is_zero(F21.eval(A.q2p)))
    fail(Err::Indeterminate, "internal: q' is not a root of F21");
  A.p1p = fam.field.f11.eval(A.q1p);
  A.p2p = fam.field.f11.eval(A.q2p);
  return A;
}

}  // namespace ph
