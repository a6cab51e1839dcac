#include "doctest.h"
#include "higgs/connjump.hpp"
#include "test_util.hpp"

using namespace ph;
using testutil::R;

namespace {

Qh C(const Rational& a) { return Qh(a); }

ConnJumpParams<Rational> sample(const Rational& h, std::array<int, 4> eps = {1, 1, 1, 1}) {
  return {R(7, 2), R(5, 3), R(7, 2) + h, R(-2, 7), R(1, 5), R(3, 4), eps};
}

ConnJumpParams<Qh> lift(const ConnJumpParams<Rational>& P, bool symbolic) {
  Qh h = symbolic ? hvar() : C(P.q2 - P.q1);
  return {C(P.q1), C(P.p1), C(P.q1) + h, C(P.lambda), C(P.e0), C(P.e1), P.eps};
}

std::array<int, 4> tuple_of(int m) {
  std::array<int, 4> e{};
  for (int i = 0; i < 4; ++i) e[i] = (m >> i & 1) ? -1 : 1;
  return e;
}

// eigenvalues of res nabla at t_i are (nu_i, -nu_i): trace 0, det -nu_i^2
bool finite_residues_ok(const FieldMatrix<Rational>& F, const Spectral& S) {
  for (int i = 0; i < 4; ++i) {
    auto r = residue(F, S, i);
    if (!trace2(r).zero() || det2(r) != -S.nu[i] * S.nu[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("closed-form F11, F21") {
  Spectral S = reference_spectral(Flavor::Connection);
  auto P = sample(R(3, 11));
  auto [F11, F21] = closed_form_F(P, S);
  CHECK(F11.deg() == 3);
  CHECK(F21.coeff(2) == R(1) + P.e0 * (P.q1 - P.q2));
  CHECK(F21.coeff(1) == -(P.q1 + P.q2 + P.e1 * (P.q2 - P.q1)));

  SpectralData<Qh> Sh = S.map<Qh>(C);
  auto Ph = lift(P, true);
  auto [G11, G21] = closed_form_F(Ph, Sh);
  CHECK(limit_h0(G21) == from_roots<Rational>({P.q1, P.q1}));
  auto P0 = Ph;
  P0.e0 = C(0);
  P0.e1 = C(0);
  auto G21a = closed_form_F(P0, Sh).second;
  auto P0b = P0;
  P0b.p1 = C(R(-9, 4));
  CHECK(limit_h0(G21a) == limit_h0(closed_form_F(P0b, Sh).second));
  CHECK_FALSE(regular_h0(G11));  // the 2 p1 (z - q1) / h term
  CHECK_THROWS_AS(closed_form_F(sample(R(0)), S), Error);
}

TEST_CASE("nabla0 coefficients and the convergence condition") {
  Spectral S = reference_spectral(Flavor::Connection);
  auto P = sample(R(3, 11));
  auto N = build_nabla0(P, S);
  CHECK(N.f0 == R(1, 2));
  CHECK(N.f1 == (P.q1 - R(2) - R(3) - R(1)) / R(2));
  Rational brk = R(-2) * P.e1 * P.p1 - R(2) * P.e0 * P.p1 * P.q1 + (P.q1 - 1) * (P.q1 - 2) * (P.q1 - 3);
  CHECK(N.e2 == P.q1 / (R(2) * P.p1) * brk);
  CHECK(N.convergence.zero());

  // independent: Q1 d(Q1^{-1}) + Q1 nabla0 Q1^{-1} has no pole at h = 0
  SpectralData<Qh> Sh = S.map<Qh>(C);
  auto Ph = lift(P, true);
  auto Nh = build_nabla0(Ph, Sh);
  CHECK(Nh.convergence.zero());
  Nh.d = {C(R(2, 3)), C(-1), C(R(5, 7)), C(4)};  // d's do not enter the singular part
  auto Cz = nabla0_u0(Nh, Ph, Sh);
  auto Q1 = q1_matrix(Ph);
  ZMat<Qh> X = zmul(zmul(Q1, zmat(Cz)), inv2(Q1));
  Qh c = (Ph.q1 - Ph.q2) / (C(2) * Ph.p1);
  X(0, 1) = X(0, 1) + RatFunc<Qh>(Sh.omega_den()) * RatFunc<Qh>(C(1) / c);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(regular_h0(as_poly(X(i, j), "test")));

  // with a wrong f1 the limit diverges
  auto Nb = Nh;
  Nb.f1 = Nb.f1 + C(1);
  auto Cb = nabla0_u0(Nb, Ph, Sh);
  ZMat<Qh> Y = zmul(zmul(Q1, zmat(Cb)), inv2(Q1));
  bool all_regular = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) all_regular &= regular_h0(as_poly(Y(i, j), "test"));
  CHECK_FALSE(all_regular);
}

TEST_CASE("polynomial gauge shortcuts agree with rational-function conjugation") {
  using RF = RatFunc<Rational>;
  Spectral S = reference_spectral(Flavor::Connection);
  auto P = sample(R(3, 11), {1, -1, -1, 1});
  auto fam = assemble(P, S);
  // nabla0: D (T B(1/z) T^{-1}) z^3 D^{-1} + diag(0, (z-1)(z-x1)(z-x2))
  RF z(Poly<Rational>::x()), zi = z.inv();
  auto at_inv = [&](const Poly<Rational>& b) {
    RF r;
    for (int i = b.deg(); i >= 0; --i) r = r * zi + RF(b.coeff(i));
    return r * z * z * z;
  };
  ZMat<Rational> Bz = map2(fam.B_w, at_inv);
  Rational n5 = fam.nu_prime[4];
  ZMat<Rational> T = mat2<RF>(RF(1), RF(n5), RF(0), RF(1));
  ZMat<Rational> D = mat2<RF>(RF(1), RF(0), RF(0), zi);
  ZMat<Rational> X = zmul(zmul(zmul(zmul(D, T), Bz), inv2(T)), inv2(D));
  X(1, 1) = X(1, 1) + RF(from_roots<Rational>({1, 2, 3}));
  auto Cz = nabla0_u0(fam.nabla0, P, S);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(as_poly(X(i, j), "test") == Cz(i, j));
  CHECK(fam.T_inf == mat2<Rational>(R(1), n5, R(0), R(1)));

  // Higgs part: Q1^{-1} P^{-1} A P Q1 through the modification machinery
  Spectral Sh = S;
  Sh.flavor = Flavor::Higgs;
  for (int i = 0; i < 5; ++i) Sh.nu[i] = fam.nu_prime[i];
  auto hf = jump_family_h(make_jump(P.q1, P.p1, P.q2, P.lambda), Sh);
  auto Q1 = q1_matrix(P);
  ZMat<Rational> M = zmul(zmul(inv2(Q1), zmat(hf.u0.matrix())), Q1);
  CHECK(as_poly(M(0, 0), "test") == fam.higgs_part.f11);
  CHECK(as_poly(M(0, 1), "test") == fam.higgs_part.f12);
  CHECK(as_poly(M(1, 0), "test") == fam.higgs_part.f21);

  // jump frame: Q1 d(Q1^{-1}) + Q1 A Q1^{-1}
  ZMat<Rational> Y = zmul(zmul(Q1, zmat(fam.field.matrix())), inv2(Q1));
  ZMat<Rational> Qi = inv2(Q1);
  ZMat<Rational> dQi = map2(Qi, [](const RF& e) {
    return RF(e.num().derivative() * e.den() - e.num() * e.den().derivative(), e.den() * e.den());
  });
  ZMat<Rational> Z = zmul(Q1, dQi);
  auto J = jump_frame(fam, S);
  RF om(S.omega_den());
  CHECK(as_poly(Y(0, 0) + Z(0, 0) * om, "test") == J.f11);
  CHECK(as_poly(Y(0, 1) + Z(0, 1) * om, "test") == J.f12);
  CHECK(as_poly(Y(1, 0) + Z(1, 0) * om, "test") == J.f21);
  CHECK(as_poly(Y(1, 1) + Z(1, 1) * om, "test") == -J.f11);
}

TEST_CASE("nu', d's and the flag equations") {
  Spectral S = reference_spectral(Flavor::Connection);
  for (int m : {0, 5, 10, 15}) {
    auto P = sample(R(3, 11), tuple_of(m));
    auto nup = solve_nu_prime(P, S);
    CHECK(nup[4] == S.nu[4] + R(1, 2));
    auto N = build_nabla0(P, S);
    N.d = solve_d(P, S, nup);
    auto Cz = nabla0_u0(N, P, S);
    auto fr = flag_residuals(Cz, P, S, nup);
    for (int i = 0; i < 4; ++i) {
      CHECK(fr[i].zero());
      // alpha read off the actual residue matrix
      Mat2<Rational> T = flag_frame(P, S, i, nup[i]);
      Mat2<Rational> res = map2(Cz, [&](const Poly<Rational>& e) { return e(S.t[i]) / S.scale(i); });
      Mat2<Rational> X = inv2(T) * res * T;
      CHECK(X(1, 1) == alpha(P, S, i, nup[i]));
      CHECK(X(0, 0) == -alpha(P, S, i, nup[i]));
      CHECK(-alpha(P, S, i, nup[i]) + Rational(P.eps[i]) * nup[i] == S.nu[i]);
      // the flag equation in its expanded form
      const Rational& t = S.t[i];
      Rational g = g_value(P, S, i, nup[i]);
      Rational Dt = pow(t, 3) * N.d[0] + t * t * N.d[1] + t * N.d[2] + N.d[3];
      Rational Ft = pow(t, 3) * N.f0 + t * t * N.f1 + t * N.f2 + N.f3;
      Rational Et = t * t * P.e0 + t * P.e1 + N.e2;
      CHECK((P.q1 - P.q2) * pow(P.q1 - t, 2) * pow(P.q2 - t, 2) * Dt +
                R(2) * (P.q1 - t) * (P.q2 - t) * g * Ft - g * g * Et ==
            R(0));
    }
    // residue of Phi_X in the flag frame: lower triangular, diagonal (eps nu', -eps nu')
    auto fam = assemble(P, S);
    for (int i = 0; i < 4; ++i) {
      Mat2<Rational> T = flag_frame(P, S, i, nup[i]);
      Mat2<Rational> res =
          map2(fam.higgs_part.matrix(), [&](const Poly<Rational>& e) { return e(S.t[i]) / S.scale(i); });
      Mat2<Rational> X = inv2(T) * res * T;
      CHECK(X(0, 1).zero());
      CHECK(X(0, 0) == Rational(P.eps[i]) * nup[i]);
    }
  }
  auto Pp = sample(R(3, 11));
  Pp.q1 = R(1);
  try {
    solve_d(Pp, S, solve_nu_prime(Pp, S));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::SingularSystem);
  }
}

TEST_CASE("assembled family, all sign tuples") {
  Spectral S = reference_spectral(Flavor::Connection);
  testutil::RandQ rq(2024);
  int checked = 0;
  for (int m = 0; m < 16; ++m) {
    int done = 0;
    while (done < 10) {
      ConnJumpParams<Rational> P{rq(), rq(), rq(), rq(), rq(), rq(), tuple_of(m)};
      try {
        auto fam = assemble(P, S);
        auto rep = validate(fam.field, S);
        CHECK_MESSAGE(rep.ok(), rep.failures());
        CHECK(finite_residues_ok(fam.pipeline, S));
        CHECK(fam.field == fam.pipeline);
        auto rinf = residue(fam.field, S, 4);
        CHECK(trace2(rinf) == R(1));
        CHECK(det2(rinf) == S.nu[4] * (R(1) - S.nu[4]));
        ++done;
        ++checked;
      } catch (const Error& e) {
        // random draws on poles or degenerate points
        CHECK((e.code() == Err::SingularSystem || e.code() == Err::ParamOutsideX ||
               e.code() == Err::DegenerateEigenSolve || e.code() == Err::ZeroDivision || e.code() == Err::NonGeneric));
      }
    }
  }
  CHECK(checked == 160);
}

TEST_CASE("symbolic h: closed form equals pipeline, limit is type 1") {
  Spectral S = reference_spectral(Flavor::Connection);
  SpectralData<Qh> Sh = S.map<Qh>(C);
  for (int m : {0, 9}) {
    auto Ph = lift(sample(R(1), tuple_of(m)), true);
    auto fam = assemble(Ph, Sh);
    CHECK(fam.field.f11 == fam.pipeline.f11);
    CHECK(fam.field.f21 == fam.pipeline.f21);
    CHECK(fam.field.f12 == fam.pipeline.f12);
    CHECK(fam.nabla0.convergence.zero());
    for (int i = 0; i < 4; ++i) {
      CHECK(regular_h0(fam.nabla0.d[i]));
      CHECK(regular_h0(fam.nu_prime[i]));
    }
    auto J = jump_frame(fam, Sh);
    CHECK(regular_h0(J.f11));
    CHECK(regular_h0(J.f12));
    CHECK(regular_h0(J.f21));
    auto L = jump_frame_limit(J);
    CHECK(L.f11.deg() <= 3);
    CHECK(L.f12.deg() <= 6);
    CHECK(L.f21.deg() == 0);
    auto rep = validate(L, S);
    CHECK_MESSAGE(rep.ok(), rep.failures());
    // at h = 0 nu'_i reduces to the value from beta2 = p1 (q1 - t_i)
    auto P = sample(R(1), tuple_of(m));
    for (int i = 0; i < 4; ++i) {
      Rational b1 = beta1(P, S, i);
      Rational a0 = b1 * P.p1 * (P.q1 - S.t[i]) / (R(2) * P.p1 * (P.q1 - S.t[i]) * S.scale(i));
      CHECK(limit_h0(fam.nu_prime[i]) == (S.nu[i] + a0) / Rational(P.eps[i]));
    }
  }
}

TEST_CASE("apparent singularities of the jump family") {
  Spectral S = reference_spectral(Flavor::Connection);
  SpectralData<Qh> Sh = S.map<Qh>(C);
  auto P = sample(R(1));
  auto fam = assemble(lift(P, true), Sh);
  auto A = apparent_of_conn_jump(fam, Sh);
  CHECK(limit_h0(A.a1) == (R(1) + P.e1 + R(2) * P.e0 * P.q1) / R(2));
  CHECK(limit_h0_any(A.q1p) == P.q1);
  CHECK(limit_h0_any(A.q2p) == P.q1);
  CHECK(limit_h0_any(A.p1p.inv()) == R(0));
  CHECK(limit_h0_any(A.p2p.inv()) == R(0));
  CHECK(is_zero(fam.field.f21.eval(A.q1p)));
  // concrete h: the same construction over Q
  auto famq = assemble(sample(R(2, 9)), S);
  auto Aq = apparent_of_conn_jump(famq, S);
  CHECK(is_zero(famq.field.f21.eval(Aq.q1p) ));
  CHECK(Aq.q1p + Aq.q2p == QuadExt<Rational>(-famq.field.f21.coeff(1) / famq.field.f21.coeff(2)));
  auto Pd = sample(R(1));
  Pd.e0 = R(1);  // 1 + e0 (q1 - q2) = 0: F12 is no longer pinned at infinity
  CHECK_THROWS_AS(assemble(Pd, S), Error);
  auto broken = famq;
  broken.field.f21 = Poly<Rational>({R(1), R(2)});
  try {
    apparent_of_conn_jump(broken, S);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::DegenerateQuadratic);
  }
}

TEST_CASE("F21 degree drop is reported") {
  Spectral S = reference_spectral(Flavor::Connection);
  // e0 (q2 - q1) = 1
  ConnJumpParams<Rational> P{Rational(-3), Rational(5, 3), Rational(-2), Rational(4), Rational(1), Rational(0),
                             {-1, 1, -1, 1}};
  CHECK(closed_form_F(P, S).second.deg() == 1);
  try {
    assemble(P, S);
    FAIL("expected NonGeneric");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NonGeneric);
  }
  P.e0 = Rational(1, 2);
  CHECK_NOTHROW(assemble(P, S));
}
