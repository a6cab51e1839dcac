#include "doctest.h"
#include "higgs/hecke.hpp"
#include "test_util.hpp"

using namespace ph;
using testutil::R;
using RF = RatFunc<Rational>;

namespace {

Qh C(const Rational& a) { return Qh(a); }

RF zlin(const Rational& q) { return RF(Poly<Rational>::linear(q)); }
RF zvar() { return RF(Poly<Rational>::x()); }

Spectral spectral7() {
  return make_spectral({0, 1, R(5, 2), R(-3, 2), R(7, 3), R(9, 4)},
                       {R(1, 3), R(1, 5), R(1, 7), R(1, 11), R(1, 13), R(1, 17), R(1, 19)}, Flavor::Higgs);
}

}  // namespace

TEST_CASE("gluing matrices") {
  auto lo = gluing_matrix(Modification<Rational>{0, 1, 0, ModKind::Lower});
  CHECK(lo.matrix == mat2<RF>(RF(1), RF(0), RF(0), zvar()));
  Rational a(3, 2);
  auto l2 = gluing_matrix(Modification<Rational>{a, 2, 5, ModKind::Lower});
  auto u2 = gluing_matrix(Modification<Rational>{a, 2, 5, ModKind::Upper});
  // determinant ledger: lower contributes (z-a), upper (z-a)^{-1}
  CHECK(det2(l2.diag) == zlin(a));
  CHECK(det2(u2.diag) == zlin(a).inv());
  CHECK(det2(l2.diag) * det2(u2.diag) == RF(1));
  // the lowered sheaf keeps sections along l at a
  CHECK(l2.matrix(0, 0).eval(a) == R(2));
  CHECK(l2.matrix(1, 0).eval(a) == R(5));
  CHECK(l2.matrix(1, 1).eval(a) == R(0));
  CHECK_THROWS_AS(gluing_matrix(Modification<Rational>{0, 0, 0, ModKind::Upper}), Error);
}

TEST_CASE("jump family at a point of X") {
  Spectral S = reference_spectral();
  auto jp = make_jump<Rational>(4, 7, 5, 2);
  CHECK(jp.p2 == R(9));
  auto fam = jump_family_h(jp, S);
  Rational c = (jp.q1 - jp.q2) / (2 * jp.p1);
  // the gauge is P1 P2 P3 and the transition T
  CHECK(fam.gauge == mat2<RF>(zlin(4).inv(), RF(0), RF(c), zlin(4)));
  CHECK(fam.transition == mat2<RF>(zlin(4), RF(0), RF(-c), (zvar() * zlin(4)).inv()));
  auto rep = check_glue(fam, S);
  CHECK_MESSAGE(rep.ok(), rep.failures());
  // residue conditions survive conjugation
  for (int i = 0; i < 4; ++i) CHECK(det2(residue(fam.u0, S, i)) == -S.nu[i] * S.nu[i]);
  auto F = renormalize_q(fam, jp, S);
  CHECK(validate(F, S).ok());
  auto ex = canonical_sorted(extract(F, S).pairs, 5);
  CHECK(ex == canonical_sorted({ApparentPair::fin(4, -7), ApparentPair::fin(5, 9)}, 5));
  CHECK(F == normalize_auto(reconstruct<Rational>({ApparentPair::fin(4, -7), ApparentPair::fin(5, 9)}, S), S));

  auto bad = jp;
  bad.q2 = bad.q1;
  CHECK_THROWS_AS(renormalize_q(fam, bad, S), Error);
  CHECK_THROWS_AS(jump_family_h(make_jump<Rational>(4, 0, 5, 2), S), Error);
}

TEST_CASE("jump sign flip on random instances") {
  Spectral S = reference_spectral();
  testutil::RandQ rq(4141);
  int done = 0;
  while (done < 50) {
    Rational q1 = rq(9, 4), q2 = rq(9, 4), p1 = rq(), lam = rq();
    if (q1 == q2 || p1.zero() || detail::pole_hit(S, q1) >= 0 || detail::pole_hit(S, q2) >= 0) continue;
    auto jp = make_jump(q1, p1, q2, lam);
    auto F = renormalize_q(jump_family_h(jp, S), jp, S);
    CHECK(canonical_sorted(extract(F, S).pairs, 5) ==
          canonical_sorted({ApparentPair::fin(q1, -p1), ApparentPair::fin(q2, jp.p2)}, 5));
    CHECK(validate(F, S).ok());
    ++done;
  }
}

TEST_CASE("jump degeneration along q2 = q1 + h") {
  Spectral S = reference_spectral();
  SpectralData<Qh> Sh = S.map<Qh>(C);
  Rational q1(4), p1(7), lam(2);
  auto jp = make_jump<Qh>(C(q1), C(p1), C(q1) + hvar(), C(lam));
  auto fam = jump_family_h(jp, Sh);
  CHECK(regular_h0(fam.u0.f11));
  CHECK(regular_h0(fam.u0.f12));
  CHECK(regular_h0(fam.u0.f21));
  CHECK(check_glue(fam, Sh).ok());

  auto lim = jump_limit_h(fam);
  CHECK(lim.k == 1);
  CHECK(lim.transition == mat2<RF>(zlin(q1), RF(0), RF(0), (zvar() * zlin(q1)).inv()));
  CHECK(lim.transition == transition_for<Rational>({q1}));
  auto rep = validate(lim.u0, S);
  CHECK_MESSAGE(rep.ok(), rep.failures());
  CHECK(check_glue(lim, S).ok());
  Poly<Rational> g = spectral_curve(lim.u0);
  CHECK(g == limit_h0(spectral_curve(fam.u0)));
  CHECK(g(q1) == p1 * p1);
  for (int i = 0; i < 4; ++i) CHECK(g(S.t[i]) == S.nu_hat(i) * S.nu_hat(i));
  auto ex = canonical_sorted(extract(lim.u0, S, {q1}).pairs, 5);
  CHECK(ex == canonical_sorted({ApparentPair::fin(q1, -p1), ApparentPair::fin(q1, p1)}, 5));
  CHECK(sigma_lambda(lim.u0, q1, p1) == lam);

  // lambda is the Hilbert slope of the renormalized pair {(q1,-p1),(q2,p2)}
  auto jr = make_jump<Rational>(q1, p1, R(9, 2), lam);
  auto F = renormalize_q(jump_family_h(jr, S), jr, S);
  auto ex2 = canonical_sorted(extract(F, S).pairs, 5);
  CHECK((ex2[0].p + ex2[1].p) / (ex2[1].q - ex2[0].q) == lam);
}

TEST_CASE("jump_chain") {
  SUBCASE("n = 5 agrees with the direct family") {
    Spectral S = reference_spectral();
    auto st = jump_chain(S, 0, {}, {ApparentPair::fin(4, 7), ApparentPair::fin(5, 9)}, 0, 1, R(2));
    Qh h = hvar();
    auto fam = jump_family_h(make_jump<Qh>(C(4), C(7), C(4) + h, C(2)), S.map<Qh>(C));
    CHECK(st.limit.u0 == jump_limit_h(fam).u0);
    CHECK(st.normalized.f11.zero());
    CHECK_THROWS_AS(jump_chain(S, 1, st.sigma, {}, 0, 1, R(1)), Error);
  }
  SUBCASE("n = 7 transitions and constraint equations") {
    Spectral S = spectral7();
    std::vector<ApparentPair> pr{ApparentPair::fin(4, 3), ApparentPair::fin(R(-5, 2), R(1, 2)),
                                 ApparentPair::fin(R(11, 2), -2), ApparentPair::fin(R(-7, 3), R(4, 5))};
    auto s1 = jump_chain(S, 0, {}, pr, 0, 1, R(3, 2));
    CHECK(s1.limit.transition == transition_for<Rational>({4}));
    CHECK(s1.limit.transition == mat2<RF>(zlin(4), RF(0), RF(0), (zvar() * zlin(4)).inv()));
    auto F1 = s1.limit.u0;
    CHECK(validate(F1, S).ok());
    CHECK(check_glue(s1.limit, S).ok());
    for (auto& r : s1.roots) CHECK(F1.f11(r.q) == r.p);
    CHECK(spectral_curve(F1)(4) == R(9));
    CHECK(F1.f21 == from_roots<Rational>({R(11, 2), R(-7, 3)}));

    auto s2 = jump_chain(S, 1, s1.sigma, s1.roots, 0, 1, R(-1, 3));
    CHECK(s2.limit.transition == transition_for<Rational>({4, R(11, 2)}));
    RF prod = zlin(4) * zlin(R(11, 2));
    CHECK(s2.limit.transition == mat2<RF>(prod, RF(0), RF(0), (zvar() * prod).inv()));
    auto F2 = s2.limit.u0;
    CHECK(F2.k == 2);
    CHECK(validate(F2, S).ok());
    CHECK(check_glue(s2.limit, S).ok());
    CHECK(spectral_curve(F2)(4) == R(9));
    CHECK(spectral_curve(F2)(R(11, 2)) == R(4));
    CHECK(F2.f21.deg() == 0);
    CHECK(s2.normalized == normalize_auto(
                               reconstruct_typek<Rational>({}, {{4, 3, R(3, 2)}, {R(11, 2), -2, R(-1, 3)}}, S, 2),
                               S));
    CHECK_THROWS_AS(jump_chain(S, 2, s2.sigma, s2.roots, 0, 1, R(1)), Error);

    // collision order: (3,4) first, then (1,2)
    auto t1 = jump_chain(S, 0, {}, pr, 2, 3, R(-1, 3));
    auto t2 = jump_chain(S, 1, t1.sigma, t1.roots, 0, 1, R(3, 2));
    CHECK(t2.normalized == s2.normalized);
  }
}
